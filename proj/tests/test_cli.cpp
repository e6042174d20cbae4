#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "qcube/cli.hpp"
#include "qcube/json_io.hpp"

namespace fs = std::filesystem;
using namespace qcube;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / "qcube_cli_test";
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(std::vector<std::string> args) { return run_cli(std::move(args)); }

}  // namespace

TEST_CASE("generate writes the dictator file") {
    TempDir dir;
    const std::string out = dir.file("d.json");
    CHECK(run({"generate", "--kind", "dictator", "--n", "2", "-o", out}) == 0);
    const std::string text = read_file(out);
    CHECK(text.find("\"30\": [1, 0]") != std::string::npos);

    // rerunning produces byte-identical output
    const std::string again = dir.file("d2.json");
    CHECK(run({"generate", "--kind", "dictator", "--n", "2", "-o", again}) == 0);
    CHECK(read_file(out) == read_file(again));

    // matrix format writes the dense array and reads back for analysis
    const std::string dense = dir.file("dense.json");
    CHECK(run({"generate", "--kind", "dictator", "--n", "2", "--format", "matrix", "-o", dense}) ==
          0);
    const ordered_json doc = ordered_json::parse(read_file(dense));
    CHECK(doc["format"] == "matrix");
    CHECK(doc["entries"].size() == 4);
    const std::string dense_report = dir.file("dense_report.json");
    CHECK(run({"analyze", dense, "-o", dense_report}) == 0);
    CHECK(ordered_json::parse(read_file(dense_report))["variance"] == 1.0);
}

TEST_CASE("generate embedded classical and random kinds") {
    TempDir dir;
    const std::string parity = dir.file("p.json");
    CHECK(run({"generate", "--kind", "embedded-classical", "--table", "-1,1,1,-1", "-o",
               parity}) == 0);
    const ordered_json doc = ordered_json::parse(read_file(parity));
    CHECK(doc["n"] == 2);
    CHECK(doc["entries"].contains("33"));

    const std::string r1 = dir.file("r1.json");
    const std::string r2 = dir.file("r2.json");
    CHECK(run({"generate", "--kind", "random-hermitian-unitary", "--n", "3", "--seed", "7", "-o",
               r1}) == 0);
    CHECK(run({"generate", "--kind", "random-hermitian-unitary", "--n", "3", "--seed", "7", "-o",
               r2}) == 0);
    CHECK(read_file(r1) == read_file(r2));
}

TEST_CASE("analyze reports influences, weights and stability") {
    TempDir dir;
    const std::string op = dir.file("d.json");
    REQUIRE(run({"generate", "--kind", "dictator", "--n", "2", "-o", op}) == 0);
    const std::string out = dir.file("report.json");
    CHECK(run({"analyze", op, "--p", "1", "--delta", "0.5", "-o", out}) == 0);
    const ordered_json doc = ordered_json::parse(read_file(out));
    CHECK(doc["variance"] == 1.0);
    CHECK(doc["influences"][0]["p"] == 1.0);
    CHECK(doc["influences"][0]["per_coordinate"][0] == 1.0);
    CHECK(doc["influences"][0]["per_coordinate"][1] == 0.0);
    CHECK(doc["noise_stability"][0]["value"] == 0.5);

    // sigma_1 x sigma_1 at delta = 0.5: stability 0.25
    const std::string xx = dir.file("xx.json");
    REQUIRE(run({"generate", "--kind", "pauli-string", "--word", "11", "-o", xx}) == 0);
    const std::string out_xx = dir.file("xx_report.json");
    CHECK(run({"analyze", xx, "--delta", "0.5", "-o", out_xx}) == 0);
    CHECK(ordered_json::parse(read_file(out_xx))["noise_stability"][0]["value"] == 0.25);

    // three-bit majority: W_{=1} = 3/4
    const std::string maj = dir.file("maj.json");
    REQUIRE(run({"generate", "--kind", "embedded-classical", "--table", "1,1,1,-1,1,-1,-1,-1",
                 "-o", maj}) == 0);
    const std::string out_maj = dir.file("maj_report.json");
    CHECK(run({"analyze", maj, "-o", out_maj}) == 0);
    CHECK(ordered_json::parse(read_file(out_maj))["weights"]["by_degree"][1] == 0.75);
}

TEST_CASE("verify exit codes and report contents") {
    TempDir dir;
    const std::string op = dir.file("d.json");
    REQUIRE(run({"generate", "--kind", "dictator", "--n", "2", "-o", op}) == 0);

    const std::string out = dir.file("verify.json");
    CHECK(run({"verify", op, "--laws", "poincare,logsob", "-o", out}) == 0);
    const ordered_json doc = ordered_json::parse(read_file(out));
    CHECK(doc["reports"].size() == 2);
    for (const auto& report : doc["reports"]) CHECK(report["verdict"] == "pass");

    // reports are bit-for-bit reproducible from (operator file, params, laws)
    const std::string out_again = dir.file("verify_again.json");
    CHECK(run({"verify", op, "--laws", "poincare,logsob", "-o", out_again}) == 0);
    CHECK(read_file(out) == read_file(out_again));

    // parity: talagrand_l1 right side serializes as "inf" and passes
    const std::string parity = dir.file("p.json");
    REQUIRE(run({"generate", "--kind", "embedded-classical", "--table", "1,-1,-1,1", "-o",
                 parity}) == 0);
    const std::string out_parity = dir.file("parity.json");
    CHECK(run({"verify", parity, "--laws", "talagrand_l1", "-o", out_parity}) == 0);
    const ordered_json parity_doc = ordered_json::parse(read_file(out_parity));
    CHECK(parity_doc["reports"][0]["rhs"] == "inf");
    CHECK(parity_doc["reports"][0]["verdict"] == "pass");

    // kkl_dimfree records the paper-proof provenance
    const std::string random_op = dir.file("r.json");
    REQUIRE(run({"generate", "--kind", "random-hermitian-unitary", "--n", "3", "--seed", "7",
                 "-o", random_op}) == 0);
    const std::string out_random = dir.file("random.json");
    CHECK(run({"verify", random_op, "--laws", "kkl_dimfree", "-o", out_random}) == 0);
    CHECK(ordered_json::parse(read_file(out_random))["reports"][0]["constant_provenance"] ==
          "paper-proof");

    // a failing law exits 1
    CHECK(run({"verify", op, "--laws", "kkl_logn", "--constant-override", "1e9"}) == 1);
    // a missing required constant is a usage error
    CHECK(run({"verify", op, "--laws", "kkl_logn"}) == 2);
    // unknown laws and unreadable files exit 2
    CHECK(run({"verify", op, "--laws", "definitely_not_a_law"}) == 2);
    CHECK(run({"verify", dir.file("missing.json"), "--laws", "poincare"}) == 2);
}

TEST_CASE("verify flags norm-precondition violations as degenerate, exit 0") {
    TempDir dir;
    const std::string op = dir.file("big.json");
    ordered_json doc;
    doc["n"] = 2;
    doc["format"] = "pauli";
    doc["entries"]["00"] = ordered_json::array({2.0, 0.0});
    doc["entries"]["30"] = ordered_json::array({0.5, 0.0});
    write_file(op, dump_json(doc));
    const std::string out = dir.file("report.json");
    CHECK(run({"verify", op, "--laws", "kkl_dimfree", "-o", out}) == 0);
    const ordered_json report = ordered_json::parse(read_file(out));
    CHECK(report["reports"][0]["verdict"] == "degenerate");
}

TEST_CASE("sweep produces deterministic CSV and replay files on failure") {
    TempDir dir;
    const std::string family = dir.file("family.json");
    ordered_json spec;
    spec["kind"] = "random-hermitian-unitary";
    spec["n"] = 3;
    spec["seed"] = 11;
    write_file(family, dump_json(spec));

    const std::string csv1 = dir.file("sweep1.csv");
    const std::string csv2 = dir.file("sweep2.csv");
    CHECK(run({"sweep", "--family", family, "--laws", "poincare,logsob,hyper", "--count", "10",
               "-o", csv1}) == 0);
    CHECK(run({"sweep", "--family", family, "--laws", "poincare,logsob,hyper", "--count", "10",
               "-o", csv2}) == 0);
    const std::string text = read_file(csv1);
    CHECK(text == read_file(csv2));
    CHECK(text.rfind("index,law,params,lhs,rhs,slack,verdict,constant_provenance\n", 0) == 0);
    // header + 30 rows
    CHECK(std::count(text.begin(), text.end(), '\n') == 31);

    // params containing commas (bmo's J) are CSV-quoted: every data row keeps
    // exactly 8 columns outside quotes
    const std::string bmo_csv = dir.file("bmo.csv");
    CHECK(run({"sweep", "--family", family, "--laws", "bmo", "--count", "3", "-o", bmo_csv}) == 0);
    const std::string bmo_text = read_file(bmo_csv);
    std::size_t line_start = bmo_text.find('\n') + 1;
    while (line_start < bmo_text.size()) {
        const std::size_t line_end = bmo_text.find('\n', line_start);
        const std::string line = bmo_text.substr(line_start, line_end - line_start);
        int commas = 0;
        bool in_quotes = false;
        for (char c : line) {
            if (c == '"') in_quotes = !in_quotes;
            else if (c == ',' && !in_quotes) ++commas;
        }
        CHECK(commas == 7);
        line_start = line_end + 1;
    }

    // dictator family widening over n
    const std::string dict_family = dir.file("dict.json");
    ordered_json dict_spec;
    dict_spec["kind"] = "dictator";
    dict_spec["n"] = 2;
    dict_spec["seed"] = 0;
    write_file(dict_family, dump_json(dict_spec));
    const std::string dict_csv = dir.file("dict.csv");
    CHECK(run({"sweep", "--family", dict_family, "--laws", "kkl_dimfree", "--count", "5", "-o",
               dict_csv}) == 0);
    const std::string dict_text = read_file(dict_csv);
    CHECK(std::count(dict_text.begin(), dict_text.end(), '\n') == 6);

    // forced failure leaves a replay operator behind
    const std::string fail_csv = dir.file("fail.csv");
    CHECK(run({"sweep", "--family", dict_family, "--laws", "kkl_logn", "--count", "2",
               "--constant-override", "1e9", "-o", fail_csv}) == 1);
    CHECK(fs::exists(fail_csv + ".offending.json"));
}

TEST_CASE("QCUBE_MAX_N lowers the capacity cap") {
    TempDir dir;
    setenv("QCUBE_MAX_N", "3", 1);
    const int rc = run({"generate", "--kind", "dictator", "--n", "4", "-o", dir.file("x.json")});
    unsetenv("QCUBE_MAX_N");
    CHECK(rc == 2);
    // raising beyond the hard cap is ignored
    setenv("QCUBE_MAX_N", "20", 1);
    const int rc2 =
        run({"generate", "--kind", "dictator", "--n", "13", "-o", dir.file("y.json")});
    unsetenv("QCUBE_MAX_N");
    CHECK(rc2 == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"no-such-command"}) == 2);
    CHECK(run({"generate", "--kind", "dictator"}) == 2);  // missing -o
}
