#include "wplink/cli.hpp"

#include "wplink/classify.hpp"
#include "wplink/divisor_ring.hpp"
#include "wplink/errors.hpp"
#include "wplink/families.hpp"
#include "wplink/search.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace wplink::cli {

namespace {

using nlohmann::ordered_json;

QsMode mode_from_flag(const std::string& s) {
    return s == "linear_system" ? QsMode::linear_system : QsMode::support;
}

ordered_json divisor_json(const DivisorElement& e) {
    ordered_json arr = ordered_json::array();
    for (const auto& [index, coeff] : e.terms())
        arr.push_back({{"index", index.str()},
                       {"numerator", numerator(coeff).str()},
                       {"denominator", denominator(coeff).str()}});
    return arr;
}

ordered_json family_json(const FamilyInstance& inst, const LinkReport& r) {
    ordered_json j;
    j["family"] = inst.family;
    j["params"] = inst.params;
    j["weights"] = inst.polynomial.system.weights;
    j["degree"] = inst.polynomial.system.degree;
    j["polynomial"] = to_string(inst.polynomial);
    ordered_json exp;
    exp["b2"] = inst.expected.b2 ? ordered_json(*inst.expected.b2) : ordered_json(nullptr);
    exp["index_gap"] =
        inst.expected.index_gap ? ordered_json(*inst.expected.index_gap) : ordered_json(nullptr);
    ordered_json br = ordered_json::array();
    for (const auto& [m, g] : inst.expected.branch) br.push_back({{"m", m}, {"genus", g.str()}});
    exp["branch"] = std::move(br);
    j["expected"] = std::move(exp);
    j["report"] = report_json(r);
    return j;
}

/// Compare the pipeline's answer against the closed forms attached to the
/// instance; returns human-readable mismatches (empty when consistent).
std::vector<std::string> family_mismatches(const FamilyInstance& inst, const LinkReport& r) {
    std::vector<std::string> bad;
    if (inst.expected.b2 && *inst.expected.b2 != r.b2)
        bad.push_back("b2: expected " + std::to_string(*inst.expected.b2) + ", got " +
                      std::to_string(r.b2));
    if (inst.expected.index_gap && *inst.expected.index_gap != r.sign.index_gap)
        bad.push_back("index_gap: expected " + std::to_string(*inst.expected.index_gap) +
                      ", got " + std::to_string(r.sign.index_gap));
    if (!inst.expected.branch.empty()) {
        bool same = inst.expected.branch.size() == r.branch.size();
        if (same)
            for (std::size_t i = 0; i < r.branch.size(); ++i)
                same = same && inst.expected.branch[i].first == r.branch[i].m &&
                       inst.expected.branch[i].second == r.branch[i].genus;
        if (!same) bad.push_back("branch components differ from the expected (m, genus) list");
    }
    return bad;
}

struct AnalyzeArgs {
    std::vector<long long> weights;
    std::string poly;
    long long degree = 0;
    std::string mode = "support";
    long long oracle_cap = 1000000;
    bool json = false;
};

struct BettiArgs {
    std::vector<long long> weights;
    long long degree = 0;
    bool oracle = false;
    bool divisor = false;
    long long oracle_cap = 1000000;
    bool json = false;
};

struct GenusArgs {
    std::vector<long long> weights;
    long long degree = 0;
    bool json = false;
};

struct FamilyArgs {
    long long k = 0;
    std::vector<long long> exps;
    long long oracle_cap = 1000000;
    bool json = false;
};

struct SearchArgs {
    std::string config_file;
    long long max_weight = 6;
    long long max_degree = 24;
    std::vector<long long> b2;
    bool negative = false;
    bool torsion_free = false;
    long long oracle_cap = 100000;
    long long limit = 0;
    long long w0_min = 0;
    long long w0_max = 0;
    std::string out_file;
    bool resume = false;
    int jobs = 1;
};

struct VerifyArgs {
    std::string file;
    long long oracle_cap = 100000;
    bool json = false;
};

int run_analyze(const AnalyzeArgs& a, const CLI::App& sub, std::ostream& out) {
    ClassifyOptions opt;
    opt.mode = mode_from_flag(a.mode);
    opt.oracle_cap = a.oracle_cap;
    LinkReport r;
    if (sub.count("--poly") > 0) {
        r = classify_link(parse_polynomial(a.poly, a.weights), opt);
    } else {
        if (sub.count("--degree") == 0)
            fail(errc::invalid_argument, "analyze needs --poly or --degree");
        r = classify_link(WeightSystem(a.weights, a.degree), opt);
    }
    if (a.json)
        out << report_json(r).dump(2) << "\n";
    else
        out << report_text(r);
    return r.quasismooth.passed ? 0 : 2;
}

int run_betti(const BettiArgs& a, std::ostream& out) {
    WeightSystem ws(a.weights, a.degree);
    long long b2 = betti2(ws);
    std::optional<long long> oracle;
    if (a.oracle) {
        oracle = betti2_oracle(ws, a.oracle_cap);
        if (*oracle != b2)
            fail(errc::non_integral_betti,
                 "divisor expansion gives b2 = " + std::to_string(b2) +
                     " but the group-ring oracle gives " + std::to_string(*oracle));
    }
    if (a.json) {
        ordered_json j;
        j["weights"] = ws.weights;
        j["degree"] = ws.degree;
        j["b2"] = b2;
        j["oracle"] = oracle ? ordered_json(*oracle) : ordered_json(nullptr);
        j["divisor"] = divisor_json(alexander_divisor(ws));
        out << j.dump(2) << "\n";
    } else {
        out << b2 << "\n";
        if (a.divisor) out << alexander_divisor(ws).str() << "\n";
    }
    return 0;
}

int run_genus(const GenusArgs& a, std::ostream& out) {
    Int g = curve_genus(a.weights, a.degree);
    if (a.json) {
        ordered_json j;
        j["weights"] = a.weights;
        j["degree"] = a.degree;
        j["genus"] = g.str();
        out << j.dump(2) << "\n";
    } else {
        out << g.str() << "\n";
    }
    return 0;
}

int run_family(const FamilyInstance& inst, const FamilyArgs& a, std::ostream& out,
               std::ostream& err) {
    ClassifyOptions opt;
    opt.oracle_cap = a.oracle_cap;
    LinkReport r = classify_link(inst.polynomial, opt);
    if (a.json) {
        out << family_json(inst, r).dump(2) << "\n";
    } else {
        out << "family " << inst.family << ", parameters (";
        for (std::size_t i = 0; i < inst.params.size(); ++i)
            out << (i ? "," : "") << inst.params[i];
        out << ")\n";
        out << "polynomial: " << to_string(inst.polynomial) << "\n";
        out << report_text(r);
    }
    std::vector<std::string> bad = family_mismatches(inst, r);
    for (const std::string& b : bad) err << "closed-form mismatch: " << b << "\n";
    return bad.empty() ? 0 : 2;
}

int run_search(const SearchArgs& a, const CLI::App& sub, std::ostream& out, std::ostream& err) {
    SearchConfig cfg;
    if (sub.count("--config") > 0) {
        std::ifstream in(a.config_file);
        if (!in) fail(errc::invalid_argument, "cannot open config file: " + a.config_file);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            fail(errc::syntax_error, std::string("bad config JSON: ") + e.what());
        }
        cfg = search_config_from_json(j);
    }
    if (sub.count("--max-weight") > 0) cfg.max_weight = a.max_weight;
    if (sub.count("--max-degree") > 0) cfg.max_degree = a.max_degree;
    if (sub.count("--b2") > 0) cfg.target_b2 = std::set<long long>(a.b2.begin(), a.b2.end());
    if (sub.count("--negative") > 0) cfg.require_negative = a.negative;
    if (sub.count("--torsion-free") > 0) cfg.require_torsion_free = a.torsion_free;
    if (sub.count("--oracle-cap") > 0) cfg.oracle_cap = a.oracle_cap;
    if (sub.count("--limit") > 0) cfg.limit = a.limit;
    if (sub.count("--w0-min") > 0) cfg.w0_min = a.w0_min;
    if (sub.count("--w0-max") > 0) cfg.w0_max = a.w0_max;

    std::optional<SearchCursor> resume_after;
    if (a.resume) {
        if (a.out_file.empty())
            fail(errc::invalid_argument, "--resume needs --out FILE to resume from");
        if (a.jobs > 1) fail(errc::invalid_argument, "--resume is single-threaded; drop --jobs");
        std::ifstream in(a.out_file);
        if (in) {
            std::vector<Certificate> prior = read_certificates(in);
            if (!prior.empty()) resume_after = prior.back().discovered_by;
        }
    }

    std::ofstream file_out;
    std::ostream* sink = &out;
    if (!a.out_file.empty()) {
        // Append only when resuming; a fresh search replaces the file.
        file_out.open(a.out_file, a.resume ? std::ios::app : std::ios::trunc);
        if (!file_out) fail(errc::invalid_argument, "cannot open output file: " + a.out_file);
        sink = &file_out;
    }

    long long count = 0;
    if (a.jobs > 1) {
        std::vector<Certificate> certs = enumerate_links_parallel(cfg, a.jobs);
        for (const Certificate& c : certs) *sink << certificate_json(c).dump() << std::endl;
        count = static_cast<long long>(certs.size());
    } else {
        count = enumerate_links(
            cfg,
            [&sink](const Certificate& c) { *sink << certificate_json(c).dump() << std::endl; },
            resume_after);
    }
    err << count << " certificate" << (count == 1 ? "" : "s") << " emitted\n";
    return 0;
}

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    std::ifstream in(a.file);
    if (!in) fail(errc::invalid_argument, "cannot open certificate file: " + a.file);
    std::vector<Certificate> certs = read_certificates(in);
    bool all_ok = true;
    ordered_json results = ordered_json::array();
    for (std::size_t i = 0; i < certs.size(); ++i) {
        VerifyResult v = verify_certificate(certs[i], a.oracle_cap);
        all_ok = all_ok && v.ok;
        if (a.json) {
            results.push_back({{"index", i}, {"ok", v.ok}, {"diffs", v.diffs}});
        } else {
            out << "certificate " << (i + 1) << ": " << (v.ok ? "ok" : "FAIL") << "\n";
            for (const std::string& d : v.diffs) out << "  " << d << "\n";
        }
    }
    if (a.json) {
        ordered_json j;
        j["results"] = std::move(results);
        j["all_ok"] = all_ok;
        out << j.dump(2) << "\n";
    } else {
        out << certs.size() << " certificate" << (certs.size() == 1 ? "" : "s") << ", "
            << (all_ok ? "all ok" : "FAILURES found") << "\n";
    }
    if (!all_ok) err << "verification failed\n";
    return all_ok ? 0 : 2;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Topology of links of weighted homogeneous hypersurface singularities"};
    app.name("wplink");
    app.require_subcommand(1);

    AnalyzeArgs an;
    CLI::App* analyze = app.add_subcommand("analyze", "Full report for one link");
    analyze->add_option("--weights", an.weights, "four weights w0,w1,w2,w3")
        ->required()
        ->delimiter(',');
    analyze->add_option("--poly", an.poly, "weighted homogeneous polynomial in x,y,z,t");
    analyze->add_option("--degree", an.degree, "degree (weights-only mode, general member)");
    analyze->add_option("--mode", an.mode, "quasismoothness mode")
        ->check(CLI::IsMember({"support", "linear_system"}))
        ->capture_default_str();
    analyze->add_option("--oracle-cap", an.oracle_cap, "largest lcm the Betti oracle will expand")
        ->capture_default_str();
    analyze->add_flag("--json", an.json, "machine-readable report");

    BettiArgs be;
    CLI::App* betti = app.add_subcommand("betti", "Second Betti number of the link");
    betti->add_option("--weights", be.weights, "four weights")->required()->delimiter(',');
    betti->add_option("--degree", be.degree, "degree")->required();
    betti->add_flag("--oracle", be.oracle, "cross-check with the group-ring oracle");
    betti->add_flag("--divisor", be.divisor, "also print the monodromy divisor");
    betti->add_option("--oracle-cap", be.oracle_cap, "largest lcm the oracle will expand")
        ->capture_default_str();
    betti->add_flag("--json", be.json, "machine-readable output");

    GenusArgs ge;
    CLI::App* genus = app.add_subcommand("genus", "Genus of a weighted plane curve");
    genus->add_option("--weights", ge.weights, "three weights")->required()->delimiter(',');
    genus->add_option("--degree", ge.degree, "degree")->required();
    genus->add_flag("--json", ge.json, "machine-readable output");

    CLI::App* family = app.add_subcommand("family", "Generate a family instance and its report");
    family->require_subcommand(1);
    FamilyArgs fa;
    CLI::App* case_i = family->add_subcommand("caseI", "x^4+y^2+z^k+t^k in P(k,2k,4,4)");
    case_i->add_option("--k", fa.k, "odd parameter k >= 3")->required();
    CLI::App* case_ii =
        family->add_subcommand("caseII", "x^4+y^(8k+2)+z^(4k+1)t+t^(2k+1)z, k >= 1");
    case_ii->add_option("--k", fa.k, "parameter k >= 1")->required();
    CLI::App* cyclic = family->add_subcommand("cyclic", "loop polynomial x^a0 y + ... + t^a3 x");
    cyclic->add_option("--exps", fa.exps, "four exponents a0,a1,a2,a3")
        ->required()
        ->delimiter(',');
    for (CLI::App* sub : {case_i, case_ii, cyclic}) {
        sub->add_option("--oracle-cap", fa.oracle_cap, "largest lcm the Betti oracle will expand")
            ->capture_default_str();
        sub->add_flag("--json", fa.json, "machine-readable output");
    }

    SearchArgs se;
    CLI::App* search = app.add_subcommand("search", "Enumerate links in a weight/degree box");
    search->add_option("--config", se.config_file, "JSON search configuration");
    search->add_option("--max-weight", se.max_weight, "largest weight")->capture_default_str();
    search->add_option("--max-degree", se.max_degree, "largest degree")->capture_default_str();
    search->add_option("--b2", se.b2, "keep only these b2 values")->delimiter(',');
    search->add_flag("--negative", se.negative, "keep only negative-sign links");
    search->add_flag("--torsion-free", se.torsion_free, "keep only torsion-free links");
    search->add_option("--oracle-cap", se.oracle_cap, "largest lcm the Betti oracle will expand")
        ->capture_default_str();
    search->add_option("--limit", se.limit, "stop after this many certificates (0 = all)")
        ->capture_default_str();
    search->add_option("--w0-min", se.w0_min, "restrict the smallest weight from below");
    search->add_option("--w0-max", se.w0_max, "restrict the smallest weight from above");
    search->add_option("--out", se.out_file, "append certificates to this JSONL file");
    search->add_flag("--resume", se.resume, "continue after the last certificate in --out");
    search->add_option("--jobs", se.jobs, "parallel workers")->capture_default_str();

    VerifyArgs ve;
    CLI::App* verify = app.add_subcommand("verify", "Re-check a certificate file");
    verify->add_option("file", ve.file, "JSONL certificate file")->required();
    verify->add_option("--oracle-cap", ve.oracle_cap, "largest lcm the Betti oracle will expand")
        ->capture_default_str();
    verify->add_flag("--json", ve.json, "machine-readable output");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("wplink");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        if (app.got_subcommand(analyze)) return run_analyze(an, *analyze, out);
        if (app.got_subcommand(betti)) return run_betti(be, out);
        if (app.got_subcommand(genus)) return run_genus(ge, out);
        if (app.got_subcommand(family)) {
            FamilyInstance inst;
            if (family->got_subcommand(case_i)) inst = case_I(fa.k);
            else if (family->got_subcommand(case_ii)) inst = case_II(fa.k);
            else {
                if (fa.exps.size() != 4)
                    fail(errc::invalid_argument, "cyclic needs exactly four exponents");
                inst = cyclic_instance(fa.exps[0], fa.exps[1], fa.exps[2], fa.exps[3]);
            }
            return run_family(inst, fa, out, err);
        }
        if (app.got_subcommand(search)) return run_search(se, *search, out, err);
        if (app.got_subcommand(verify)) return run_verify(ve, out, err);
        err << "error: no subcommand selected\n";
        return 1;
    } catch (const DomainError& e) {
        err << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
        return e.internal() ? 3 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace wplink::cli
