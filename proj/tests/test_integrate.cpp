#include "bwlf/delimited.hpp"
#include "bwlf/error.hpp"
#include "bwlf/integrate.hpp"
#include "bwlf/lexicon.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bwlf;

TEST_CASE("import_external") {
    const auto t = import_external(testing_support::golden("liwc_appendix6.tsv"), Delimiter::tab);
    CHECK(t.identifier_header == "Filename");
    CHECK(t.numeric_headers == std::vector<std::string>{"Seg", "WC", "WPS", "Sixltr", "Dic"});
    CHECK(t.row_count() == 38);
    CHECK(t.identifiers[4] == "proWess");
    CHECK(t.values[4] == std::vector<std::string>{"5", "1", "1", "100", "0"});

    const auto empty = parse_external("Filename\tSeg\n", Delimiter::tab);
    CHECK(empty.row_count() == 0);
    CHECK(empty.numeric_headers.size() == 1);
}

TEST_CASE("import_external errors name the line") {
    try {
        parse_external("Filename\tSeg\tWC\nlo\t1\t1\npraise\t2\n", Delimiter::tab);
        FAIL("expected a ragged-row error");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        CHECK(std::string(e.what()).find("ragged") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_external("Filename,Seg\nlo,abc\n", Delimiter::comma), FormatError);
    CHECK_THROWS_AS(parse_external("", Delimiter::comma), FormatError);
    CHECK_NOTHROW(parse_external("Filename,Seg\nlo,4.55\nx,-1e3\n", Delimiter::comma));
}

TEST_CASE("join_rows") {
    const std::vector<BwlfRecord> records{{1, 1, "lo", 2, 0, 0}, {1, 1, "praise", 6, 0, 0}};
    const auto t = parse_external("Filename\tSeg\tDic\nlo\t1\t0\npraise\t2\t4.50\n", Delimiter::tab);
    const auto j = join_rows(records, t);
    CHECK(format_integrated(j) ==
          "canto,line,word,charnum,speech,eos,Seg,Dic\n1,1,lo,2,0,0,1,0\n1,1,praise,6,0,0,2,4.50\n");

    const auto short_table = parse_external("Filename\tSeg\tDic\nlo\t1\t0\n", Delimiter::tab);
    try {
        join_rows(records, short_table);
        FAIL("expected a mismatch");
    } catch (const MismatchError& e) {
        const std::string msg = e.what();
        CHECK(msg.find('2') != std::string::npos);
        CHECK(msg.find('1') != std::string::npos);
    }

    const auto zero = join_rows(std::vector<BwlfRecord>{}, parse_external("Filename\tSeg\n", Delimiter::tab));
    CHECK(format_integrated(zero) == "canto,line,word,charnum,speech,eos,Seg\n");
}

TEST_CASE("join_rows verify mode") {
    const std::vector<BwlfRecord> records{{1, 1, "lo", 2, 0, 0}, {1, 1, "prowess", 7, 0, 0}};
    const auto t = parse_external("Filename,Seg\nLO,1\nproWess,2\n", Delimiter::comma);
    CHECK(join_rows(records, t, true).warnings.empty());
    const auto off = parse_external("Filename,Seg\nlo,1\nfoes,2\n", Delimiter::comma);
    CHECK(join_rows(records, off, true).warnings.size() == 1);
    CHECK(join_rows(records, off, false).warnings.empty());
}

TEST_CASE("property: internal analysis output always joins") {
    const std::vector<BwlfRecord> records{
        {1, 1, "a,b", 3, 0, 0}, {1, 1, "\"who", 3, 1, 0}, {1, 2, "ye\"", 2, 1, 0}, {1, 2, "done.", 4, 0, 1}};
    for (const char* dict_text : {"", "[x]\na*\n", "[p]\nwho\n[q]\ny*\ndone\n"}) {
        const auto dict = LexiconDictionary::parse(dict_text);
        const auto text = format_analysis(records, analyze(records, dict), dict);
        const auto table = parse_external(text, Delimiter::comma);
        const auto j = join_rows(records, table, true);
        CHECK(j.rows.size() == records.size());
        CHECK(j.warnings.empty());
        for (std::size_t i = 0; i < records.size(); ++i) {
            const auto f = record_fields(records[i]);
            CHECK(std::equal(f.begin(), f.end(), j.rows[i].begin()));
        }
    }
}
