#include "bwlf/cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "bwlf/core.hpp"
#include "bwlf/delimited.hpp"
#include "bwlf/error.hpp"
#include "bwlf/ingest.hpp"
#include "bwlf/integrate.hpp"
#include "bwlf/lexicon.hpp"
#include "bwlf/recurrence.hpp"

namespace fs = std::filesystem;

namespace bwlf::cli {
namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

/// Files written so far; removed again if the run fails.
class OutputLedger {
public:
    void record(const fs::path& p) {
        std::lock_guard lock(mu_);
        paths_.push_back(p);
    }
    void rollback() {
        std::lock_guard lock(mu_);
        for (const auto& p : paths_) {
            std::error_code ec;
            fs::remove(p, ec);
        }
        paths_.clear();
    }

private:
    std::mutex mu_;
    std::vector<fs::path> paths_;
};

fs::path normalized(const fs::path& p) {
    std::error_code ec;
    auto c = fs::weakly_canonical(p, ec);
    return ec ? fs::absolute(p).lexically_normal() : c;
}

void require_distinct(const std::vector<fs::path>& inputs, const std::vector<fs::path>& outputs) {
    std::vector<fs::path> seen;
    for (const auto& in : inputs) seen.push_back(normalized(in));
    for (const auto& o : outputs) {
        auto n = normalized(o);
        if (std::find(seen.begin(), seen.end(), n) != seen.end()) {
            throw UsageError("path '" + o.string() + "' is used more than once as input/output");
        }
        seen.push_back(n);
    }
}

void report(std::ostream& err, const std::string& source, const Warnings& warnings) {
    for (const auto& w : warnings) err << "warning: " << source << ": " << w << '\n';
}

CleanupRules rules_or_default(const std::string& path) {
    return path.empty() ? CleanupRules{} : load_rules(path);
}

LexiconDictionary dict_or_empty(const std::string& path) {
    return path.empty() ? LexiconDictionary{} : LexiconDictionary::load(path);
}

/// Every file one input produces in pipeline mode.
struct PipelineOutputs {
    fs::path cleaned, matrix, wordlist, analysis, integrated;

    static PipelineOutputs for_input(const fs::path& input, const fs::path& dir) {
        const auto stem = input.stem().string();
        return {dir / (stem + ".cleaned.csv"), dir / (stem + ".matrix.csv"), dir / (stem + ".wordlist.txt"),
                dir / (stem + ".analysis.csv"), dir / (stem + ".integrated.csv")};
    }
    std::vector<fs::path> all() const { return {cleaned, matrix, wordlist, analysis, integrated}; }
};

// Each pipeline step goes through the same files the single-stage commands
// read, so chaining stages by hand gives byte-identical results.
Warnings run_pipeline_one(const fs::path& input, const PipelineOutputs& outs, const CleanupRules& rules,
                          const LexiconDictionary& dict, OutputLedger& ledger) {
    Warnings warnings;
    const auto stream = mark_structure(io::read_file(input), rules);
    write_cleaned(stream, outs.cleaned);
    ledger.record(outs.cleaned);

    auto built = build_matrix(read_cleaned(outs.cleaned), rules.keep_terminal);
    warnings.insert(warnings.end(), built.warnings.begin(), built.warnings.end());
    export_matrix(built.records, outs.matrix);
    ledger.record(outs.matrix);
    export_wordlist(built.records, outs.wordlist);
    ledger.record(outs.wordlist);

    const auto records = import_matrix(outs.matrix);
    const auto rows = analyze(records, dict, rules.keep_terminal);
    export_analysis(records, rows, dict, outs.analysis);
    ledger.record(outs.analysis);

    const auto joined = join_rows(records, import_external(outs.analysis, Delimiter::comma));
    write_integrated(joined, outs.integrated);
    ledger.record(outs.integrated);
    return warnings;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"By-word long-form corpus preparation and categorical recurrence analysis", "bwlf"};
    app.require_subcommand(1);

    std::string rules_path;
    std::string dict_path;

    // clean
    std::string clean_in, clean_out;
    auto* clean = app.add_subcommand("clean", "Clean raw text into a marked token file");
    clean->add_option("--input,-i", clean_in, "Raw text file")->required();
    clean->add_option("--output,-o", clean_out, "Cleaned token file (.csv)")->required();
    clean->add_option("--rules,-r", rules_path, "Cleanup rules file");

    // build
    std::string build_in, build_matrix_out, build_wordlist_out;
    auto* build = app.add_subcommand("build", "Build the BWLF matrix and wordlist from a token file");
    build->add_option("--input,-i", build_in, "Cleaned token file")->required();
    build->add_option("--matrix,-m", build_matrix_out, "Matrix output (.csv)")->required();
    build->add_option("--wordlist,-w", build_wordlist_out, "Wordlist output (.txt)");
    build->add_option("--rules,-r", rules_path, "Rules file (sentence-final characters)");

    // analyze
    std::string analyze_in, analyze_out;
    auto* analyze_cmd = app.add_subcommand("analyze", "Score matrix words against a dictionary");
    analyze_cmd->add_option("--input,-i", analyze_in, "Matrix file")->required();
    analyze_cmd->add_option("--output,-o", analyze_out, "Analysis output (.csv)")->required();
    analyze_cmd->add_option("--dict,-d", dict_path, "Dictionary file");
    analyze_cmd->add_option("--rules,-r", rules_path, "Rules file (sentence-final characters)")
        ;

    // join
    std::string join_matrix, join_table, join_out;
    Delimiter join_delim = Delimiter::tab;
    bool join_verify = false;
    auto* join = app.add_subcommand("join", "Join external per-word analysis output onto a matrix");
    join->add_option("--matrix,-m", join_matrix, "Matrix file")->required();
    join->add_option("--table,-t", join_table, "Analysis table with header")->required();
    join->add_option("--delimiter", join_delim, "Table delimiter: tab or comma")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Delimiter>{{"tab", Delimiter::tab},
                                                                             {"comma", Delimiter::comma}}));
    join->add_option("--output,-o", join_out, "Integrated output (.csv)")->required();
    join->add_flag("--verify", join_verify, "Warn when identifiers disagree with words");

    // recur
    std::string recur_in, recur_column = "word", recur_plot, recur_metrics;
    std::size_t recur_lmin = kDefaultMinLine;
    auto* recur = app.add_subcommand("recur", "Categorical recurrence analysis over one column");
    recur->add_option("--input,-i", recur_in, "Comma-delimited table with header")
        ->required()
        ;
    recur->add_option("--column,-c", recur_column, "Column to compare")->capture_default_str();
    recur->add_option("--lmin", recur_lmin, "Minimum diagonal line length")->capture_default_str();
    recur->add_option("--plot", recur_plot, "Write off-diagonal recurrent points (.csv)");
    recur->add_option("--metrics", recur_metrics, "Write the metrics as a one-row table (.csv)");
    recur->add_option("--rules,-r", rules_path, "Rules file (sentence-final characters)");

    // pipeline
    std::vector<std::string> pipe_inputs;
    std::string pipe_out;
    unsigned pipe_jobs = 1;
    auto* pipeline = app.add_subcommand("pipeline", "clean, build, analyze and join in one step");
    pipeline->add_option("--input,-i", pipe_inputs, "Raw text file(s)")->required();
    pipeline->add_option("--out,-o", pipe_out, "Output directory")->required();
    pipeline->add_option("--rules,-r", rules_path, "Cleanup rules file");
    pipeline->add_option("--dict,-d", dict_path, "Dictionary file");
    pipeline->add_option("--jobs,-j", pipe_jobs, "Files processed in parallel")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    OutputLedger ledger;
    try {
        if (*clean) {
            require_distinct({clean_in}, {clean_out});
            const auto rules = rules_or_default(rules_path);
            const auto stream = mark_structure(io::read_file(clean_in), rules);
            write_cleaned(stream, clean_out);
            ledger.record(clean_out);
        } else if (*build) {
            std::vector<fs::path> outs{build_matrix_out};
            if (!build_wordlist_out.empty()) outs.emplace_back(build_wordlist_out);
            require_distinct({build_in}, outs);
            const auto rules = rules_or_default(rules_path);
            auto built = build_matrix(read_cleaned(build_in), rules.keep_terminal);
            report(err, build_in, built.warnings);
            export_matrix(built.records, build_matrix_out);
            ledger.record(build_matrix_out);
            if (!build_wordlist_out.empty()) {
                export_wordlist(built.records, build_wordlist_out);
                ledger.record(build_wordlist_out);
            }
        } else if (*analyze_cmd) {
            require_distinct({analyze_in}, {analyze_out});
            const auto rules = rules_or_default(rules_path);
            const auto dict = dict_or_empty(dict_path);
            const auto records = import_matrix(analyze_in);
            export_analysis(records, analyze(records, dict, rules.keep_terminal), dict, analyze_out);
            ledger.record(analyze_out);
        } else if (*join) {
            require_distinct({join_matrix, join_table}, {join_out});
            const auto records = import_matrix(join_matrix);
            const auto joined = join_rows(records, import_external(join_table, join_delim), join_verify);
            report(err, join_table, joined.warnings);
            write_integrated(joined, join_out);
            ledger.record(join_out);
        } else if (*recur) {
            std::vector<fs::path> outs;
            if (!recur_plot.empty()) outs.emplace_back(recur_plot);
            if (!recur_metrics.empty()) outs.emplace_back(recur_metrics);
            require_distinct({recur_in}, outs);
            const auto rules = rules_or_default(rules_path);
            const auto table = io::read_table(recur_in, ',');
            const auto values = column_values(table, recur_column, rules.keep_terminal);
            const auto plot = recurrence_matrix(values, recur_column);
            const auto metrics = rqa(plot, recur_lmin);
            if (!recur_plot.empty()) {
                export_plot(plot, recur_plot);
                ledger.record(recur_plot);
            }
            if (!recur_metrics.empty()) {
                io::write_file_atomic(recur_metrics, format_metrics_row(metrics, recur_column));
                ledger.record(recur_metrics);
            }
            out << format_metrics_lines(metrics);
        } else if (*pipeline) {
            const fs::path dir = pipe_out;
            std::vector<fs::path> inputs(pipe_inputs.begin(), pipe_inputs.end());
            std::vector<PipelineOutputs> outs;
            std::vector<fs::path> all_outs;
            for (const auto& in : inputs) {
                outs.push_back(PipelineOutputs::for_input(in, dir));
                for (const auto& p : outs.back().all()) all_outs.push_back(p);
            }
            require_distinct(inputs, all_outs);
            const auto rules = rules_or_default(rules_path);
            const auto dict = dict_or_empty(dict_path);
            std::error_code ec;
            fs::create_directories(dir, ec);
            if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());

            std::vector<Warnings> warnings(inputs.size());
            std::vector<std::optional<std::string>> failures(inputs.size());
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (std::size_t i = next++; i < inputs.size(); i = next++) {
                    try {
                        warnings[i] = run_pipeline_one(inputs[i], outs[i], rules, dict, ledger);
                    } catch (const std::exception& e) {
                        failures[i] = e.what();
                    }
                }
            };
            {
                const auto workers = std::min<std::size_t>(pipe_jobs, inputs.size());
                std::vector<std::jthread> pool;
                for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
                worker();
            }
            bool failed = false;
            for (std::size_t i = 0; i < inputs.size(); ++i) {
                report(err, inputs[i].string(), warnings[i]);
                if (failures[i]) {
                    err << "error: " << inputs[i].string() << ": " << *failures[i] << '\n';
                    failed = true;
                }
            }
            if (failed) {
                ledger.rollback();
                return kExitFailure;
            }
        }
    } catch (const UsageError& e) {
        ledger.rollback();
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        ledger.rollback();
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace bwlf::cli
