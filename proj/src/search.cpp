#include "wplink/search.hpp"

#include "wplink/errors.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <thread>

namespace wplink {

namespace {

void validate_config(const SearchConfig& cfg) {
    if (cfg.max_weight < 1)
        fail(errc::invalid_argument, "max_weight must be positive");
    if (cfg.max_degree < cfg.max_weight)
        fail(errc::invalid_argument, "max_degree must be at least max_weight");
    if (cfg.oracle_cap < 1)
        fail(errc::invalid_argument, "oracle_cap must be positive");
    if (cfg.limit < 0)
        fail(errc::invalid_argument, "limit must be nonnegative");
    for (long long b : cfg.target_b2)
        if (b < 0)
            fail(errc::invalid_argument, "target_b2 entries must be nonnegative");
}

/// Does every variable get a smoothing monomial z_i^m (m >= 2) or
/// z_i^m z_j (m >= 1) of degree d?  Cheap necessary condition run before the
/// full pipeline.
bool vertex_monomials_exist(const std::array<long long, 4>& w, long long d) {
    for (int i = 0; i < 4; ++i) {
        bool ok = d % w[i] == 0 && d / w[i] >= 2;
        for (int j = 0; j < 4 && !ok; ++j) {
            if (j == i) continue;
            long long rest = d - w[j];
            ok = rest >= 1 && rest % w[i] == 0;
        }
        if (!ok) return false;
    }
    return true;
}

bool strictly_after(const std::array<long long, 4>& w, long long d, const SearchCursor& cur) {
    if (cur.weights.size() != 4)
        fail(errc::invalid_argument, "resume cursor needs 4 weights");
    for (int i = 0; i < 4; ++i) {
        if (w[i] != cur.weights[static_cast<std::size_t>(i)])
            return w[i] > cur.weights[static_cast<std::size_t>(i)];
    }
    return d > cur.degree;
}

} // namespace

SearchConfig search_config_from_json(const nlohmann::json& j) {
    SearchConfig cfg;
    if (!j.is_object()) fail(errc::invalid_argument, "search config must be a JSON object");
    try {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string& k = it.key();
            if (k == "max_weight") cfg.max_weight = it.value().get<long long>();
            else if (k == "max_degree") cfg.max_degree = it.value().get<long long>();
            else if (k == "target_b2") cfg.target_b2 = it.value().get<std::set<long long>>();
            else if (k == "require_negative") cfg.require_negative = it.value().get<bool>();
            else if (k == "require_torsion_free") cfg.require_torsion_free = it.value().get<bool>();
            else if (k == "oracle_cap") cfg.oracle_cap = it.value().get<long long>();
            else if (k == "limit") cfg.limit = it.value().get<long long>();
            else if (k == "w0_min") cfg.w0_min = it.value().get<long long>();
            else if (k == "w0_max") cfg.w0_max = it.value().get<long long>();
            else fail(errc::invalid_argument, "unknown search config key: " + k);
        }
    } catch (const nlohmann::json::exception& e) {
        fail(errc::invalid_argument, std::string("bad search config value: ") + e.what());
    }
    validate_config(cfg);
    return cfg;
}

long long enumerate_links(const SearchConfig& cfg,
                          const std::function<void(const Certificate&)>& emit,
                          const std::optional<SearchCursor>& resume_after) {
    validate_config(cfg);
    long long lo = std::max<long long>(1, cfg.w0_min.value_or(1));
    long long hi = std::min(cfg.max_weight, cfg.w0_max.value_or(cfg.max_weight));
    ClassifyOptions opt;
    opt.oracle_cap = cfg.oracle_cap;

    long long count = 0;
    std::array<long long, 4> w{};
    for (w[0] = lo; w[0] <= hi; ++w[0])
        for (w[1] = w[0]; w[1] <= cfg.max_weight; ++w[1])
            for (w[2] = w[1]; w[2] <= cfg.max_weight; ++w[2])
                for (w[3] = w[2]; w[3] <= cfg.max_weight; ++w[3]) {
                    if (std::gcd(std::gcd(w[0], w[1]), std::gcd(w[2], w[3])) != 1) continue;
                    for (long long d = 1; d <= cfg.max_degree; ++d) {
                        if (resume_after && !strictly_after(w, d, *resume_after)) continue;
                        // A weight equal to the degree puts a linear monomial
                        // in the system: outside the smoothness criterion.
                        if (w[0] == d || w[1] == d || w[2] == d || w[3] == d) continue;
                        if (!vertex_monomials_exist(w, d)) continue;
                        if (cfg.require_negative && d - (w[0] + w[1] + w[2] + w[3]) <= 0) continue;

                        LinkReport report;
                        try {
                            report = classify_link(
                                WeightSystem({w[0], w[1], w[2], w[3]}, d), opt);
                        } catch (const DomainError&) {
                            continue;
                        }
                        if (!report.quasismooth.passed) continue;
                        if (cfg.require_negative && report.sign.sign != Sign::negative) continue;
                        if (cfg.require_torsion_free && !report.homology.torsion_free()) continue;
                        if (!cfg.target_b2.empty() && cfg.target_b2.count(report.b2) == 0) continue;

                        Certificate cert;
                        cert.discovered_by.weights = {w[0], w[1], w[2], w[3]};
                        cert.discovered_by.degree = d;
                        cert.report = std::move(report);
                        emit(cert);
                        ++count;
                        if (cfg.limit > 0 && count >= cfg.limit) return count;
                    }
                }
    return count;
}

std::vector<Certificate> enumerate_links(const SearchConfig& cfg,
                                         const std::optional<SearchCursor>& resume_after) {
    std::vector<Certificate> out;
    enumerate_links(cfg, [&out](const Certificate& c) { out.push_back(c); }, resume_after);
    return out;
}

std::vector<Certificate> enumerate_links_parallel(const SearchConfig& cfg, int jobs) {
    validate_config(cfg);
    if (jobs < 1) fail(errc::invalid_argument, "jobs must be positive");
    long long lo = std::max<long long>(1, cfg.w0_min.value_or(1));
    long long hi = std::min(cfg.max_weight, cfg.w0_max.value_or(cfg.max_weight));
    if (lo > hi) return {};
    long long span = hi - lo + 1;
    int n = static_cast<int>(std::min<long long>(jobs, span));
    if (n <= 1) return enumerate_links(cfg);

    std::vector<std::vector<Certificate>> parts(static_cast<std::size_t>(n));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        SearchConfig sub = cfg;
        sub.w0_min = lo + span * i / n;
        sub.w0_max = lo + span * (i + 1) / n - 1;
        sub.limit = 0;      // the shared limit is applied after the ordered merge
        threads.emplace_back([&parts, &errors, i, sub]() {
            try {
                parts[static_cast<std::size_t>(i)] = enumerate_links(sub);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        });
    }
    for (std::thread& t : threads) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);

    // w0 is the outermost enumeration coordinate, so concatenating the
    // partitions in range order reproduces the single-threaded order.
    std::vector<Certificate> out;
    for (std::vector<Certificate>& p : parts)
        for (Certificate& c : p) {
            out.push_back(std::move(c));
            if (cfg.limit > 0 && static_cast<long long>(out.size()) >= cfg.limit) return out;
        }
    return out;
}

nlohmann::ordered_json certificate_json(const Certificate& c) {
    nlohmann::ordered_json j;
    j["discovered_by"] = {{"weights", c.discovered_by.weights}, {"degree", c.discovered_by.degree}};
    j["report"] = report_json(c.report);
    return j;
}

namespace {

QsMode mode_from_string(const std::string& s) {
    if (s == "support") return QsMode::support;
    if (s == "linear_system") return QsMode::linear_system;
    fail(errc::invalid_argument, "unknown quasismooth mode: " + s);
}

Sign sign_from_string(const std::string& s) {
    if (s == "negative") return Sign::negative;
    if (s == "null") return Sign::null_sign;
    if (s == "positive") return Sign::positive;
    fail(errc::invalid_argument, "unknown sign: " + s);
}

Int int_from_string(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        fail(errc::invalid_argument, "bad integer literal: " + s);
    }
}

WellFormedResult well_formed_from_json(const nlohmann::json& j) {
    WellFormedResult r;
    r.ok = j.at("ok").get<bool>();
    r.offending_index = j.at("offending_index").get<int>();
    r.gcd = j.at("gcd").get<long long>();
    return r;
}

Stratum stratum_from_json(const nlohmann::json& j) {
    Stratum s;
    s.zero_set = j.at("indices").get<std::vector<int>>();
    s.order = j.at("order").get<long long>();
    return s;
}

LinkReport report_from_json(const nlohmann::json& j) {
    LinkReport r;
    r.system = WeightSystem(j.at("weights").get<std::vector<long long>>(),
                            j.at("degree").get<long long>());
    if (!j.at("polynomial").is_null()) r.polynomial = j.at("polynomial").get<std::string>();
    r.general_member = j.at("general_member").get<bool>();

    const nlohmann::json& qs = j.at("quasismooth");
    r.quasismooth.passed = qs.at("passed").get<bool>();
    r.quasismooth.mode = mode_from_string(qs.at("mode").get<std::string>());
    for (const nlohmann::json& f : qs.at("failures")) {
        QsFailure x;
        x.condition = f.at("condition").get<int>();
        x.indices = f.at("indices").get<std::vector<int>>();
        x.detail = f.at("detail").get<std::string>();
        r.quasismooth.failures.push_back(std::move(x));
    }
    for (const nlohmann::json& wj : qs.at("witnesses")) {
        QsWitness x;
        x.condition = wj.at("condition").get<int>();
        x.indices = wj.at("indices").get<std::vector<int>>();
        x.monomials = wj.at("monomials").get<std::vector<std::vector<int>>>();
        r.quasismooth.witnesses.push_back(std::move(x));
    }

    r.ambient = well_formed_from_json(j.at("ambient_well_formed"));
    const nlohmann::json& hs = j.at("hypersurface_well_formed");
    r.hypersurface.ok = hs.at("ok").get<bool>();
    if (!hs.at("ambient_failure").is_null())
        r.hypersurface.ambient_failure = well_formed_from_json(hs.at("ambient_failure"));
    if (!hs.at("contained_stratum").is_null())
        r.hypersurface.contained_stratum = stratum_from_json(hs.at("contained_stratum"));

    for (const nlohmann::json& s : j.at("singular_strata"))
        r.strata.push_back(stratum_from_json(s));

    for (const nlohmann::json& b : j.at("branch")) {
        BranchComponent c;
        c.index = b.at("index").get<int>();
        c.m = b.at("m").get<long long>();
        c.curve_weights = b.at("weights").get<std::vector<long long>>();
        c.curve_degree = b.at("degree").get<long long>();
        c.genus = int_from_string(b.at("genus").get<std::string>());
        r.branch.push_back(std::move(c));
    }

    r.b2 = j.at("b2").get<long long>();
    r.b2_oracle_checked = j.at("b2_oracle_checked").get<bool>();

    const nlohmann::json& hom = j.at("homology");
    r.homology.rank = hom.at("rank").get<long long>();
    for (const nlohmann::json& t : hom.at("torsion")) {
        TorsionPart p;
        p.order = t.at("order").get<long long>();
        p.exponent = int_from_string(t.at("exponent").get<std::string>());
        r.homology.torsion.push_back(std::move(p));
    }

    const nlohmann::json& sg = j.at("sign");
    r.sign.index_gap = sg.at("index_gap").get<long long>();
    r.sign.sign = sign_from_string(sg.at("sign").get<std::string>());
    r.sign.certified = sg.at("certified").get<bool>();

    if (!j.at("diffeo_type").is_null()) r.diffeo_type = j.at("diffeo_type").get<std::string>();
    const nlohmann::json& fl = j.at("flags");
    r.negative_eta_einstein = fl.at("negative_eta_einstein").get<bool>();
    r.lorentzian_sasaki_einstein = fl.at("lorentzian_sasaki_einstein").get<bool>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

} // namespace

Certificate certificate_from_json(const nlohmann::json& j) {
    try {
        Certificate c;
        const nlohmann::json& db = j.at("discovered_by");
        c.discovered_by.weights = db.at("weights").get<std::vector<long long>>();
        c.discovered_by.degree = db.at("degree").get<long long>();
        c.report = report_from_json(j.at("report"));
        return c;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::invalid_argument, std::string("malformed certificate: ") + e.what());
    }
}

VerifyResult verify_certificate(const Certificate& c, long long oracle_cap) {
    VerifyResult res;
    LinkReport fresh;
    try {
        ClassifyOptions opt;
        opt.oracle_cap = oracle_cap;
        if (c.report.polynomial) {
            opt.mode = c.report.quasismooth.mode;
            fresh = classify_link(parse_polynomial(*c.report.polynomial, c.report.system.weights),
                                  opt);
        } else {
            fresh = classify_link(c.report.system, opt);
        }
    } catch (const DomainError& e) {
        res.ok = false;
        res.diffs.push_back(std::string("recomputation failed: ") + e.what());
        return res;
    }
    nlohmann::ordered_json expected = report_json(c.report);
    nlohmann::ordered_json got = report_json(fresh);
    for (auto it = expected.begin(); it != expected.end(); ++it) {
        if (got.at(it.key()) != it.value())
            res.diffs.push_back(it.key() + ": expected " + it.value().dump() + ", got " +
                                got.at(it.key()).dump());
    }
    res.ok = res.diffs.empty();
    return res;
}

void write_certificates(std::ostream& out, const std::vector<Certificate>& cs) {
    for (const Certificate& c : cs) out << certificate_json(c).dump() << "\n";
}

std::vector<Certificate> read_certificates(std::istream& in) {
    std::vector<Certificate> out;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            fail(errc::syntax_error,
                 "certificate line " + std::to_string(lineno) + ": " + e.what());
        }
        out.push_back(certificate_from_json(j));
    }
    return out;
}

} // namespace wplink
