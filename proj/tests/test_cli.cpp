#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "rigclique/codec.hpp"

using namespace rigclique;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "rigclique");
    std::ostringstream out, err;
    int code = cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("rigclique_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("gen writes consistent graph and label files") {
    TempDir dir;
    const auto g = dir.file("g.txt"), l = dir.file("l.txt");
    auto r = run({"gen", "--n", "100", "--m", "10", "--p", "0.1", "--seed", "1", "--out-graph", g,
                  "--out-labels", l});
    REQUIRE(r.code == 0);
    const std::string graph_text = read_text_file(g);
    const std::string label_text = read_text_file(l);
    CHECK(decode_graph(graph_text) == induced_graph(decode_labels(label_text)));
    CHECK(encode_graph(decode_graph(graph_text)) == graph_text);
    CHECK(encode_labels(decode_labels(label_text)) == label_text);

    // Same seed, same files; labels go to stdout when no output is named.
    auto again = run({"gen", "--n", "100", "--m", "10", "--p", "0.1", "--seed", "1"});
    CHECK(again.out == label_text);
    auto alpha = run({"gen", "--n", "100", "--alpha", "0.5", "--mp2", "0.1", "--seed", "1"});
    CHECK(alpha.code == 0);
    CHECK(alpha.out.rfind("100 10\n", 0) == 0);
}

TEST_CASE("solve, oracle and from-labels agree on a generated instance") {
    TempDir dir;
    const auto g = dir.file("g.txt"), l = dir.file("l.txt");
    REQUIRE(run({"gen", "--n", "120", "--m", "12", "--p", "0.12", "--seed", "5", "--out-graph", g,
                 "--out-labels", l})
                .code == 0);
    auto solved = run({"solve", "--graph", g});
    auto exact = run({"oracle", "--graph", g});
    REQUIRE(solved.code == 0);
    REQUIRE(exact.code == 0);
    auto first_line = [](const std::string& s) { return s.substr(0, s.find('\n')); };
    CHECK(first_line(solved.out) == first_line(exact.out));
    CHECK(first_line(solved.out).rfind("size ", 0) == 0);

    auto labels = run({"from-labels", "--labels", l});
    REQUIRE(labels.code == 0);
    CHECK(labels.out.rfind("size ", 0) == 0);
}

TEST_CASE("solve output format") {
    TempDir dir;
    const auto g = dir.file("tt.txt");
    write_text_file(g, "4 5\n0 1\n0 2\n1 2\n1 3\n2 3\n");
    CHECK(run({"solve", "--graph", g}).out == "size 3\n0 1 2\n");
    CHECK(run({"oracle", "--graph", g}).out == "size 3\n0 1 2\n");
    CHECK(run({"chordal", "--graph", g}).out.rfind("chordal true\n", 0) == 0);
    write_text_file(g, "4 4\n0 1\n1 2\n2 3\n0 3\n");
    CHECK(run({"chordal", "--graph", g}).out == "chordal false\n");
    CHECK(run({"solve", "--graph", g, "--quotient-cap", "2"}).code == 1);
}

TEST_CASE("reconstruct") {
    TempDir dir;
    const auto g = dir.file("g.txt"), out = dir.file("rec.txt");
    write_text_file(g, "5 4\n0 1\n0 2\n1 2\n3 4\n");
    auto r = run({"reconstruct", "--graph", g, "--m", "2", "--p", "0.5", "--out-labels", out});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("status success\n", 0) == 0);
    CHECK(read_text_file(out) == "5 2\n0: 0\n1: 0\n2: 0\n3: 1\n4: 1\n");
    auto fail = run({"reconstruct", "--graph", g, "--m", "1", "--p", "0.5"});
    CHECK(fail.code == 1);
    CHECK(fail.out.rfind("status failure\n", 0) == 0);
}

TEST_CASE("experiment writes CSV, identical under --jobs") {
    TempDir dir;
    const auto a = dir.file("a.csv"), b = dir.file("b.csv");
    REQUIRE(run({"experiment", "sparse", "--n", "200", "--m", "15", "--p", "0.01", "--trials", "6",
                 "--seed", "3", "--csv", a})
                .code == 0);
    REQUIRE(run({"experiment", "sparse", "--n", "200", "--m", "15", "--p", "0.01", "--trials", "6",
                 "--seed", "3", "--jobs", "3", "--csv", b})
                .code == 0);
    CHECK(read_text_file(a) == read_text_file(b));
    auto stdout_run = run({"experiment", "concentration", "--n", "50", "--m", "5", "--p", "0.1"});
    CHECK(stdout_run.out.rfind("trial,max_label_size", 0) == 0);
}

TEST_CASE("exit codes") {
    SUBCASE("usage errors exit 2") {
        auto bogus = run({"solve", "--bogus"});
        CHECK(bogus.code == 2);
        CHECK(bogus.err.find("--graph") != std::string::npos);
        CHECK(run({}).code == 2);
        CHECK(run({"frobnicate"}).code == 2);
        CHECK(run({"gen", "--m", "3", "--p", "0.1"}).code == 2);
        CHECK(run({"gen", "--n", "3", "--m", "3", "--alpha", "0.5", "--p", "0.1"}).code == 2);
        CHECK(run({"experiment", "sparse", "--n", "5", "--m", "2", "--p", "0.1", "--jobs", "0"}).code == 2);
    }
    SUBCASE("runtime errors exit 1") {
        TempDir dir;
        const auto bad = dir.file("bad.txt");
        write_text_file(bad, "2 1\n1 1\n");
        auto loop = run({"solve", "--graph", bad});
        CHECK(loop.code == 1);
        CHECK(loop.err.find("self-loop") != std::string::npos);
        write_text_file(bad, "3 x\n");
        CHECK(run({"oracle", "--graph", bad}).code == 1);
        write_text_file(bad, "2 1\n0: 1\n1:\n");
        CHECK(run({"from-labels", "--labels", bad}).code == 1);
        CHECK(run({"chordal", "--graph", dir.file("missing.txt")}).code == 1);
        CHECK(run({"gen", "--n", "10", "--m", "1", "--mp2", "4"}).code == 1);
        CHECK(run({"gen", "--n", "10", "--m", "1"}).code == 1);
        CHECK(run({"experiment", "dense", "--n", "5", "--m", "2", "--p", "0.1"}).code == 1);
        CHECK(run({"experiment", "sparse", "--n", "5", "--m", "2", "--p", "0.1", "--trials", "0"}).code == 1);
        write_text_file(bad, "0 0\n");
        CHECK(run({"solve", "--graph", bad}).code == 1);
    }
    SUBCASE("help exits 0") { CHECK(run({"--help"}).code == 0); }
}
