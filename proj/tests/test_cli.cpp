#include "doctest.h"

#include "wplink/cli.hpp"

#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = wplink::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    fs::path path;
    TempFile(const char* stem) {
        static std::mt19937_64 rng(std::random_device{}());
        path = fs::temp_directory_path() /
               (std::string(stem) + "-" + std::to_string(rng()) + ".jsonl");
    }
    ~TempFile() {
        std::error_code ec;
        fs::remove(path, ec);
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("betti prints the bare number") {
    RunResult r = run_cli({"betti", "--weights", "264,157,114,73", "--degree", "1213"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4\n");

    RunResult with_oracle =
        run_cli({"betti", "--weights", "9,18,4,4", "--degree", "36", "--oracle"});
    CHECK(with_oracle.exit_code == 0);
    CHECK(with_oracle.out == "8\n");

    RunResult with_divisor =
        run_cli({"betti", "--weights", "9,18,4,4", "--degree", "36", "--divisor"});
    CHECK(with_divisor.exit_code == 0);
    CHECK(with_divisor.out.find("7L36 - 7L18 + 7L9 + L4 - L2 + L1") != std::string::npos);

    RunResult js = run_cli({"betti", "--weights", "264,157,114,73", "--degree", "1213",
                            "--json"});
    CHECK(js.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(js.out);
    CHECK(j["b2"] == 4);
    REQUIRE(j["divisor"].size() == 2);
    CHECK(j["divisor"][0]["index"] == "1");
    CHECK(j["divisor"][0]["numerator"] == "1");
    CHECK(j["divisor"][0]["denominator"] == "1");
    CHECK(j["divisor"][1]["index"] == "1213");
    CHECK(j["divisor"][1]["numerator"] == "3");
}

TEST_CASE("genus subcommand") {
    RunResult r = run_cli({"genus", "--weights", "9,2,2", "--degree", "18"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n");

    RunResult big = run_cli({"genus", "--weights", "1,1,1", "--degree", "5"});
    CHECK(big.out == "6\n");

    // Integrality assertions map to a distinct exit code.
    RunResult bad = run_cli({"genus", "--weights", "1,2,2", "--degree", "3"});
    CHECK(bad.exit_code == 3);
    CHECK(bad.err.find("NonIntegralGenus") != std::string::npos);
}

TEST_CASE("analyze with a polynomial") {
    RunResult r = run_cli({"analyze", "--weights", "9,18,4,4", "--poly",
                           "x^4 + y^2 + z^9 + t^9"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("quasismooth") != std::string::npos);
    CHECK(r.out.find("#8 S^2 x S^3") != std::string::npos);

    RunResult failed =
        run_cli({"analyze", "--weights", "1,1,1,1", "--poly", "x^4 + y^4 + z^4"});
    CHECK(failed.exit_code == 2);
    CHECK(failed.out.find("condition 1") != std::string::npos);

    RunResult js = run_cli({"analyze", "--weights", "9,18,4,4", "--poly",
                            "x^4 + y^2 + z^9 + t^9", "--json"});
    CHECK(js.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(js.out);
    CHECK(j["b2"] == 8);
    CHECK(j["diffeo_type"] == "#8 S^2 x S^3");

    // Identical invocations produce identical bytes.
    RunResult js2 = run_cli({"analyze", "--weights", "9,18,4,4", "--poly",
                             "x^4 + y^2 + z^9 + t^9", "--json"});
    CHECK(js2.out == js.out);
}

TEST_CASE("analyze weights-only and mode selection") {
    RunResult general =
        run_cli({"analyze", "--weights", "2,2,3,3", "--degree", "12"});
    CHECK(general.exit_code == 0);

    RunResult missing = run_cli({"analyze", "--weights", "2,2,3,3"});
    CHECK(missing.exit_code == 1);

    RunResult support = run_cli({"analyze", "--weights", "2,2,3,3", "--poly",
                                 "x^6 + y^6 + x^3*z^2 + y^3*t^2"});
    CHECK(support.exit_code == 2);

    RunResult linear =
        run_cli({"analyze", "--weights", "2,2,3,3", "--poly",
                 "x^6 + y^6 + x^3*z^2 + y^3*t^2", "--mode", "linear_system"});
    CHECK(linear.exit_code == 0);

    RunResult bad_mode = run_cli({"analyze", "--weights", "2,2,3,3", "--degree",
                                  "12", "--mode", "banana"});
    CHECK(bad_mode.exit_code == 1);
}

TEST_CASE("family subcommands") {
    RunResult r = run_cli({"family", "caseI", "--k", "9", "--json"});
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["family"] == "case-I");
    CHECK(j["weights"] == nlohmann::json::array({9, 18, 4, 4}));
    CHECK(j["degree"] == 36);
    CHECK(j["polynomial"] == "x^4 + y^2 + z^9 + t^9");
    CHECK(j["expected"]["b2"] == 8);
    CHECK(j["report"]["b2"] == 8);

    RunResult even = run_cli({"family", "caseI", "--k", "4"});
    CHECK(even.exit_code == 1);
    CHECK(even.err.find("EvenK") != std::string::npos);

    RunResult c2 = run_cli({"family", "caseII", "--k", "1", "--json"});
    CHECK(c2.exit_code == 0);
    CHECK(nlohmann::json::parse(c2.out)["report"]["b2"] == 3);

    RunResult cyc = run_cli({"family", "cyclic", "--exps", "4,7,10,13", "--json"});
    CHECK(cyc.exit_code == 0);
    nlohmann::json cj = nlohmann::json::parse(cyc.out);
    CHECK(cj["weights"] == nlohmann::json::array({264, 157, 114, 73}));
    CHECK(cj["report"]["b2"] == 4);

    RunResult degen = run_cli({"family", "cyclic", "--exps", "1,1,1,2"});
    CHECK(degen.exit_code == 1);
    CHECK(degen.err.find("DegenerateSystem") != std::string::npos);
}

TEST_CASE("search writes jsonl and verify accepts it") {
    TempFile tmp("wplink-search");
    RunResult s = run_cli({"search", "--max-weight", "4", "--max-degree", "16",
                           "--out", tmp.path.string()});
    CHECK(s.exit_code == 0);
    CHECK(s.err.find("certificates") != std::string::npos);

    // Re-running the same search without --resume replaces the file
    // instead of appending a second copy of every certificate.
    std::string first_contents = slurp(tmp.path);
    RunResult again = run_cli({"search", "--max-weight", "4", "--max-degree", "16",
                               "--out", tmp.path.string()});
    CHECK(again.exit_code == 0);
    CHECK(slurp(tmp.path) == first_contents);

    RunResult v = run_cli({"verify", tmp.path.string()});
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("ok") != std::string::npos);

    RunResult vj = run_cli({"verify", tmp.path.string(), "--json"});
    CHECK(vj.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(vj.out);
    CHECK(j["all_ok"] == true);
    CHECK_FALSE(j["results"].empty());

    // Tamper with one b2 and watch verification fail.
    std::vector<nlohmann::json> lines;
    {
        std::ifstream in(tmp.path);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) lines.push_back(nlohmann::json::parse(line));
    }
    REQUIRE_FALSE(lines.empty());
    lines[0]["report"]["b2"] = lines[0]["report"]["b2"].get<long long>() + 1;
    TempFile tampered("wplink-tampered");
    {
        std::ofstream outf(tampered.path);
        for (const nlohmann::json& l : lines) outf << l.dump() << "\n";
    }
    RunResult bad = run_cli({"verify", tampered.path.string()});
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(bad.out.find("b2") != std::string::npos);
}

TEST_CASE("search to stdout, filters and config files") {
    RunResult direct = run_cli({"search", "--max-weight", "1", "--max-degree", "2"});
    CHECK(direct.exit_code == 0);
    nlohmann::json cert = nlohmann::json::parse(direct.out);
    CHECK(cert["discovered_by"]["weights"] == nlohmann::json::array({1, 1, 1, 1}));
    CHECK(cert["report"]["b2"] == 1);

    RunResult filtered = run_cli({"search", "--max-weight", "1", "--max-degree", "2",
                                  "--negative"});
    CHECK(filtered.exit_code == 0);
    CHECK(filtered.out.empty());

    TempFile cfg("wplink-config");
    {
        std::ofstream out(cfg.path);
        out << R"({"max_weight": 1, "max_degree": 2})";
    }
    RunResult from_cfg = run_cli({"search", "--config", cfg.path.string()});
    CHECK(from_cfg.exit_code == 0);
    CHECK(nlohmann::json::parse(from_cfg.out)["report"]["b2"] == 1);

    TempFile bad_cfg("wplink-bad-config");
    {
        std::ofstream out(bad_cfg.path);
        out << R"({"max_wieght": 1})";
    }
    CHECK(run_cli({"search", "--config", bad_cfg.path.string()}).exit_code == 1);
}

TEST_CASE("search resume appends the missing tail") {
    TempFile tmp("wplink-resume");
    RunResult first = run_cli({"search", "--max-weight", "4", "--max-degree", "16",
                               "--limit", "2", "--out", tmp.path.string()});
    CHECK(first.exit_code == 0);

    RunResult rest = run_cli({"search", "--max-weight", "4", "--max-degree", "16",
                              "--resume", "--out", tmp.path.string()});
    CHECK(rest.exit_code == 0);

    TempFile full("wplink-full");
    RunResult all = run_cli({"search", "--max-weight", "4", "--max-degree", "16",
                             "--out", full.path.string()});
    CHECK(all.exit_code == 0);

    std::ifstream a(tmp.path), b(full.path);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());

    // Resume needs a file to resume from.
    CHECK(run_cli({"search", "--max-weight", "4", "--resume"}).exit_code == 1);
}

TEST_CASE("parallel search equals sequential output") {
    TempFile seq("wplink-seq");
    TempFile par("wplink-par");
    CHECK(run_cli({"search", "--max-weight", "4", "--max-degree", "16", "--out",
                   seq.path.string()})
              .exit_code == 0);
    CHECK(run_cli({"search", "--max-weight", "4", "--max-degree", "16", "--jobs", "3",
                   "--out", par.path.string()})
              .exit_code == 0);
    std::ifstream a(seq.path), b(par.path);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).exit_code == 1);
    CHECK(run_cli({"frobnicate"}).exit_code == 1);
    CHECK(run_cli({"betti", "--weights", "1,2,3", "--degree", "6"}).exit_code == 1);
    CHECK(run_cli({"betti", "--degree", "6"}).exit_code == 1);
    CHECK(run_cli({"--help"}).exit_code == 0);
    CHECK(run_cli({"analyze", "--help"}).exit_code == 0);
    CHECK(run_cli({"verify", "/nonexistent/certs.jsonl"}).exit_code == 1);
}
