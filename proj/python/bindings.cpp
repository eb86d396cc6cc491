#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "bwlf/cli.hpp"
#include "bwlf/core.hpp"
#include "bwlf/error.hpp"
#include "bwlf/ingest.hpp"
#include "bwlf/lexicon.hpp"
#include "bwlf/recurrence.hpp"

namespace py = pybind11;
using namespace bwlf;

PYBIND11_MODULE(_core, m) {
    m.doc() = "By-word long-form corpus preparation and categorical recurrence analysis";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<MismatchError>(m, "MismatchError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::enum_<HyphenPolicy>(m, "HyphenPolicy").value("split", HyphenPolicy::split).value("keep", HyphenPolicy::keep);
    py::enum_<CasePolicy>(m, "CasePolicy").value("lower", CasePolicy::lower).value("preserve", CasePolicy::preserve);
    py::enum_<CantoPolicy>(m, "CantoPolicy")
        .value("heading", CantoPolicy::heading)
        .value("inline", CantoPolicy::inline_start);
    py::enum_<LinePolicy>(m, "LinePolicy")
        .value("every_source_line", LinePolicy::every_source_line)
        .value("pattern", LinePolicy::pattern);

    py::class_<CleanupRules>(m, "CleanupRules")
        .def(py::init<>())
        .def_readwrite("remove_chars", &CleanupRules::remove_chars)
        .def_readwrite("keep_terminal", &CleanupRules::keep_terminal)
        .def_readwrite("hyphen_policy", &CleanupRules::hyphen_policy)
        .def_readwrite("case_policy", &CleanupRules::case_policy)
        .def_readwrite("canto_pattern", &CleanupRules::canto_pattern)
        .def_readwrite("canto_policy", &CleanupRules::canto_policy)
        .def_readwrite("line_policy", &CleanupRules::line_policy)
        .def_readwrite("line_pattern", &CleanupRules::line_pattern)
        .def("validate", &CleanupRules::validate);

    m.def("parse_rules", &parse_rules, py::arg("text"));
    m.def("load_rules", &load_rules, py::arg("path"));

    py::class_<MarkedToken>(m, "MarkedToken")
        .def_property_readonly("kind",
                               [](const MarkedToken& t) {
                                   switch (t.kind) {
                                       case MarkedToken::Kind::canto_marker: return "canto";
                                       case MarkedToken::Kind::line_marker: return "line";
                                       case MarkedToken::Kind::word: break;
                                   }
                                   return "word";
                               })
        .def_readonly("text", &MarkedToken::text)
        .def("spelling", &MarkedToken::spelling)
        .def("__repr__", [](const MarkedToken& t) { return "MarkedToken(" + t.spelling() + ")"; });

    m.def("clean_line", &clean_line, py::arg("line"), py::arg("rules") = CleanupRules{});
    m.def("mark_structure", &mark_structure, py::arg("document"), py::arg("rules") = CleanupRules{});

    py::class_<BwlfRecord>(m, "BwlfRecord")
        .def_readonly("canto", &BwlfRecord::canto)
        .def_readonly("line", &BwlfRecord::line)
        .def_readonly("word", &BwlfRecord::word)
        .def_readonly("charnum", &BwlfRecord::charnum)
        .def_readonly("speech", &BwlfRecord::speech)
        .def_readonly("eos", &BwlfRecord::eos)
        .def("as_tuple",
             [](const BwlfRecord& r) { return py::make_tuple(r.canto, r.line, r.word, r.charnum, r.speech, r.eos); })
        .def("__repr__", [](const BwlfRecord& r) {
            std::ostringstream s;
            s << "BwlfRecord(" << r.canto << ", " << r.line << ", '" << r.word << "', " << r.charnum << ", "
              << int(r.speech) << ", " << int(r.eos) << ")";
            return s.str();
        });

    m.def("detect_eos", &detect_eos, py::arg("word"), py::arg("terminal") = std::string(kDefaultTerminal));
    m.def("strip_word", &strip_word, py::arg("word"), py::arg("terminal") = std::string(kDefaultTerminal));
    m.def(
        "detect_speech",
        [](const std::vector<std::string>& words) {
            auto r = detect_speech(words);
            std::vector<std::pair<std::size_t, std::size_t>> spans;
            for (const auto& s : r.spans) spans.emplace_back(s.start, s.end);
            return py::make_tuple(r.flags, spans, r.warnings);
        },
        py::arg("words"), "Returns (flags, [(start, end)], warnings); indices are 0-based and inclusive.");
    m.def(
        "build_matrix",
        [](const std::vector<MarkedToken>& stream, const std::string& terminal) {
            auto r = build_matrix(stream, terminal);
            return py::make_tuple(r.records, r.warnings);
        },
        py::arg("stream"), py::arg("terminal") = std::string(kDefaultTerminal),
        "Returns (records, warnings).");
    m.def("format_matrix", [](const std::vector<BwlfRecord>& r) { return format_matrix(r); }, py::arg("records"));

    py::class_<LexiconDictionary>(m, "LexiconDictionary")
        .def(py::init<>())
        .def_static("parse", &LexiconDictionary::parse, py::arg("text"))
        .def_static("load", &LexiconDictionary::load, py::arg("path"))
        .def_property_readonly("category_names",
                               [](const LexiconDictionary& d) {
                                   std::vector<std::string> names;
                                   for (const auto& c : d.categories()) names.push_back(c.name);
                                   return names;
                               })
        .def("__len__", &LexiconDictionary::size);

    m.def("match_word", &match_word, py::arg("stripped"), py::arg("dictionary"));

    py::class_<AnalysisRow>(m, "AnalysisRow")
        .def_readonly("seg", &AnalysisRow::seg)
        .def_readonly("wc", &AnalysisRow::wc)
        .def_readonly("wps", &AnalysisRow::wps)
        .def_readonly("sixltr", &AnalysisRow::sixltr)
        .def_readonly("dic", &AnalysisRow::dic)
        .def_readonly("category_scores", &AnalysisRow::category_scores);

    m.def(
        "analyze",
        [](const std::vector<BwlfRecord>& records, const LexiconDictionary& dict, const std::string& terminal) {
            return analyze(records, dict, terminal);
        },
        py::arg("records"), py::arg("dictionary") = LexiconDictionary{},
        py::arg("terminal") = std::string(kDefaultTerminal));

    py::class_<RecurrencePlot>(m, "RecurrencePlot")
        .def_property_readonly("n", &RecurrencePlot::n)
        .def_property_readonly("key", &RecurrencePlot::key)
        .def("recurrent", &RecurrencePlot::recurrent, py::arg("i"), py::arg("j"), "1-based indices")
        .def("off_diagonal_points", &RecurrencePlot::off_diagonal_points);

    py::class_<RqaMetrics>(m, "RqaMetrics")
        .def_readonly("n", &RqaMetrics::n)
        .def_readonly("lmin", &RqaMetrics::lmin)
        .def_readonly("rr", &RqaMetrics::rr)
        .def_readonly("det", &RqaMetrics::det)
        .def_readonly("maxline", &RqaMetrics::maxline)
        .def_readonly("meanline", &RqaMetrics::meanline);

    m.def(
        "recurrence_matrix",
        [](const std::vector<std::string>& values, std::string key) { return recurrence_matrix(values, std::move(key)); },
        py::arg("values"), py::arg("key") = "value");
    m.def("rqa", &rqa, py::arg("plot"), py::arg("lmin") = kDefaultMinLine);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the bwlf command line; returns (exit_code, stdout, stderr).");
}
