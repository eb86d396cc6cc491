#include <sstream>

#include "bwlf/cli.hpp"
#include "bwlf/delimited.hpp"
#include "doctest.h"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace testing_support;
using bwlf::io::read_file;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = bwlf::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t file_count(const fs::path& dir) {
    return static_cast<std::size_t>(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}));
}

}  // namespace

TEST_CASE("cli usage handling") {
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("pipeline") != std::string::npos);

    CHECK(run({}).code == 2);
    CHECK(run({"clean", "--bogus"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"recur", "--input", sample_text().string(), "--lmin", "two"}).code == 2);
}

TEST_CASE("cli operational errors exit 1 and leave nothing behind") {
    const auto dir = scratch_dir("cli-err");
    const auto missing = run({"clean", "--input", (dir / "absent.txt").string(), "--output", (dir / "c.csv").string()});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("absent.txt") != std::string::npos);
    CHECK(file_count(dir) == 0);

    const auto same = run({"clean", "--input", sample_text().string(), "--output", sample_text().string()});
    CHECK(same.code == 2);

    // pipeline with one good and one missing input removes the good outputs too
    const auto out = dir / "out";
    const auto partial = run({"pipeline", "--input", sample_text().string(), "--input", (dir / "absent.txt").string(),
                              "--rules", sample_rules().string(), "--out", out.string()});
    CHECK(partial.code == 1);
    CHECK(file_count(out) == 0);
    fs::remove_all(dir);
}

TEST_CASE("cli join mismatch") {
    const auto dir = scratch_dir("cli-join");
    const auto matrix = dir / "m.csv";
    {
        std::string text = read_file(golden("appendix4.csv"));
        bwlf::io::write_file_atomic(matrix, text);
    }
    auto table = read_file(golden("liwc_appendix6.tsv"));
    table.erase(table.rfind('\n', table.size() - 2) + 1);  // drop the last row
    bwlf::io::write_file_atomic(dir / "short.tsv", table);

    const auto r = run({"join", "--matrix", matrix.string(), "--table", (dir / "short.tsv").string(), "--output",
                        (dir / "joined.csv").string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("38") != std::string::npos);
    CHECK(r.err.find("37") != std::string::npos);
    CHECK_FALSE(fs::exists(dir / "joined.csv"));

    const auto ok = run({"join", "--matrix", matrix.string(), "--table", golden("liwc_appendix6.tsv").string(),
                         "--output", (dir / "joined.csv").string(), "--verify"});
    CHECK(ok.code == 0);
    CHECK(ok.err.empty());
    fs::remove_all(dir);
}

TEST_CASE("cli pipeline equals the individual stages") {
    const auto dir = scratch_dir("cli-pipe");
    const auto out = dir / "out";
    const auto rules = sample_rules().string();
    const auto dict = sample_dict().string();
    REQUIRE(run({"pipeline", "--input", sample_text().string(), "--rules", rules, "--dict", dict, "--out",
                 out.string()})
                .code == 0);
    for (const char* name : {"beowulf.cleaned.csv", "beowulf.matrix.csv", "beowulf.wordlist.txt",
                             "beowulf.analysis.csv", "beowulf.integrated.csv"}) {
        CHECK(fs::exists(out / name));
    }

    const auto s = dir / "stages";
    fs::create_directories(s);
    REQUIRE(run({"clean", "-i", sample_text().string(), "-r", rules, "-o", (s / "c.csv").string()}).code == 0);
    REQUIRE(run({"build", "-i", (s / "c.csv").string(), "-r", rules, "-m", (s / "m.csv").string(), "-w",
                 (s / "w.txt").string()})
                .code == 0);
    REQUIRE(run({"analyze", "-i", (s / "m.csv").string(), "-d", dict, "-r", rules, "-o", (s / "a.csv").string()})
                .code == 0);
    REQUIRE(run({"join", "-m", (s / "m.csv").string(), "-t", (s / "a.csv").string(), "--delimiter", "comma", "-o",
                 (s / "j.csv").string()})
                .code == 0);

    CHECK(read_file(out / "beowulf.cleaned.csv") == read_file(s / "c.csv"));
    CHECK(read_file(out / "beowulf.matrix.csv") == read_file(s / "m.csv"));
    CHECK(read_file(out / "beowulf.wordlist.txt") == read_file(s / "w.txt"));
    CHECK(read_file(out / "beowulf.analysis.csv") == read_file(s / "a.csv"));
    CHECK(read_file(out / "beowulf.integrated.csv") == read_file(s / "j.csv"));

    const auto recur = run({"recur", "-i", (s / "m.csv").string(), "-c", "word", "--plot", (s / "p.csv").string(),
                            "--metrics", (s / "rqa.csv").string()});
    CHECK(recur.code == 0);
    CHECK(recur.out.find("rr=") != std::string::npos);
    CHECK(recur.out.find("det=") != std::string::npos);
    CHECK(read_file(s / "rqa.csv").starts_with("key,n,lmin,rr,det,maxline,meanline\nword,"));
    CHECK(run({"recur", "-i", (s / "j.csv").string(), "-c", "Sixltr"}).code == 0);
    CHECK(run({"recur", "-i", (s / "m.csv").string(), "-c", "missing"}).code == 1);
    fs::remove_all(dir);
}

TEST_CASE("cli pipeline runs several inputs in parallel") {
    const auto dir = scratch_dir("cli-par");
    const auto text = read_file(sample_text());
    std::vector<std::string> args{"pipeline", "--rules", sample_rules().string(), "--out", (dir / "out").string(),
                                  "--jobs", "3"};
    for (int i = 0; i < 4; ++i) {
        const auto p = dir / ("doc" + std::to_string(i) + ".txt");
        bwlf::io::write_file_atomic(p, text);
        args.push_back("--input");
        args.push_back(p.string());
    }
    REQUIRE(run(args).code == 0);
    CHECK(file_count(dir / "out") == 20);
    CHECK(read_file(dir / "out" / "doc0.integrated.csv") == read_file(dir / "out" / "doc3.integrated.csv"));
    fs::remove_all(dir);
}
