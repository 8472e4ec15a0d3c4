#include "wplink/classify.hpp"

#include "wplink/errors.hpp"

#include <sstream>

namespace wplink {

const char* to_string(Sign s) {
    switch (s) {
        case Sign::negative: return "negative";
        case Sign::null_sign: return "null";
        case Sign::positive: return "positive";
    }
    return "?";
}

SignResult sasakian_sign(const WeightSystem& ws) {
    require_arity(ws, 4, "sasakian_sign");
    SignResult r;
    r.index_gap = ws.degree - ws.sum();
    if (r.index_gap > 0) {
        r.sign = Sign::negative;
        r.certified = true;
    } else if (r.index_gap == 0) {
        r.sign = Sign::null_sign;
    } else {
        r.sign = Sign::positive;
    }
    return r;
}

namespace {

std::string homology_str(const HomologySummary& h) {
    std::ostringstream os;
    bool any = false;
    if (h.rank > 0) {
        os << "Z";
        if (h.rank > 1) os << "^" << h.rank;
        any = true;
    }
    for (const TorsionPart& t : h.torsion) {
        if (any) os << " + ";
        os << "(Z/" << t.order << ")";
        if (t.exponent != 1) os << "^" << t.exponent.str();
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

std::string weights_str(const std::vector<long long>& w) {
    std::string s = "P(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

/// Shared tail of both classify_link overloads, after the mode-specific
/// pieces (quasismooth verdict, hypersurface check, branch components) have
/// been computed on the normalized system.
void finish_report(LinkReport& r, const ClassifyOptions& opt) {
    const WeightSystem& ws = r.system;
    r.ambient = is_well_formed_space(ws.weights);
    r.strata = singular_strata(ws.weights);

    r.b2 = betti2(ws);
    if (oracle_lcm(ws) <= opt.oracle_cap) {
        long long check = betti2_oracle(ws, opt.oracle_cap);
        if (check != r.b2)
            fail(errc::non_integral_betti,
                 "divisor expansion gives b2 = " + std::to_string(r.b2) +
                     " but the group-ring oracle gives " + std::to_string(check) + " for " +
                     ws.str());
        r.b2_oracle_checked = true;
    }
    r.homology = second_homology(r.b2, r.branch);
    r.sign = sasakian_sign(ws);

    bool qs = r.quasismooth.passed;
    if (qs && r.homology.torsion_free())
        r.diffeo_type = (r.b2 == 0) ? std::string("S^5")
                                    : "#" + std::to_string(r.b2) + " S^2 x S^3";
    r.negative_eta_einstein = qs && r.sign.sign == Sign::negative;
    r.lorentzian_sasaki_einstein = r.negative_eta_einstein;

    // Notes, in a fixed order: input mode, sign provenance, per-curve
    // caveats, then anything withheld.
    if (r.general_member)
        r.notes.push_back("weights-only input: monomial tests use the general member of the degree-" +
                          std::to_string(ws.degree) + " linear system");
    if (r.sign.sign == Sign::negative)
        r.notes.push_back("index gap " + std::to_string(r.sign.index_gap) +
                          " > 0: negative structure certified");
    else if (r.sign.sign == Sign::null_sign)
        r.notes.push_back("index gap 0: null reading, indicative only");
    else
        r.notes.push_back("index gap " + std::to_string(r.sign.index_gap) +
                          " < 0: positive reading, indicative only");
    for (const BranchComponent& c : r.branch) {
        WellFormedResult wf = is_well_formed_space(c.curve_weights);
        if (!wf.ok)
            r.notes.push_back("branch curve at index " + std::to_string(c.index) + ": ambient " +
                              weights_str(c.curve_weights) +
                              " is not well-formed; the genus formula is evaluated on the stated weights");
    }
    if (!qs)
        r.notes.push_back("quasismoothness failed: diffeomorphism type and existence flags withheld");
    else if (!r.homology.torsion_free())
        r.notes.push_back("torsion in H2: no diffeomorphism type is claimed");
}

} // namespace

LinkReport classify_link(const WeightedPolynomial& f, const ClassifyOptions& opt) {
    require_arity(f.system, 4, "classify_link");
    WeightedPolynomial g = f;
    long long c = gcd_all(f.system.weights);
    if (c > 1) {
        std::vector<long long> w = f.system.weights;
        for (long long& x : w) x /= c;
        g = WeightedPolynomial::make(std::move(w), f.monomials);
    }
    LinkReport r;
    r.system = g.system;
    r.polynomial = to_string(g);
    r.general_member = false;
    r.quasismooth = check_quasismooth(g, opt.mode);
    r.hypersurface = is_well_formed_hypersurface(g);
    r.branch = branch_divisor(g);
    finish_report(r, opt);
    return r;
}

LinkReport classify_link(const WeightSystem& ws, const ClassifyOptions& opt) {
    require_arity(ws, 4, "classify_link");
    LinkReport r;
    r.system = normalize(ws);
    r.general_member = true;
    r.quasismooth = check_quasismooth(r.system);
    r.hypersurface = is_well_formed_hypersurface(r.system);
    r.branch = branch_divisor(r.system);
    finish_report(r, opt);
    return r;
}

bool operator==(const LinkReport& a, const LinkReport& b) {
    // The JSON rendering is a faithful, schema-stable image of every field.
    return report_json(a) == report_json(b);
}

nlohmann::ordered_json report_json(const LinkReport& r) {
    using json = nlohmann::ordered_json;
    json j;
    j["weights"] = r.system.weights;
    j["degree"] = r.system.degree;
    j["polynomial"] = r.polynomial ? json(*r.polynomial) : json(nullptr);
    j["general_member"] = r.general_member;

    json qs;
    qs["passed"] = r.quasismooth.passed;
    qs["mode"] = to_string(r.quasismooth.mode);
    qs["failures"] = json::array();
    for (const QsFailure& f : r.quasismooth.failures)
        qs["failures"].push_back(
            {{"condition", f.condition}, {"indices", f.indices}, {"detail", f.detail}});
    qs["witnesses"] = json::array();
    for (const QsWitness& w : r.quasismooth.witnesses)
        qs["witnesses"].push_back(
            {{"condition", w.condition}, {"indices", w.indices}, {"monomials", w.monomials}});
    j["quasismooth"] = std::move(qs);

    j["ambient_well_formed"] = {{"ok", r.ambient.ok},
                                {"offending_index", r.ambient.offending_index},
                                {"gcd", r.ambient.gcd}};

    json hs;
    hs["ok"] = r.hypersurface.ok;
    if (r.hypersurface.ambient_failure) {
        const WellFormedResult& a = *r.hypersurface.ambient_failure;
        hs["ambient_failure"] = {{"ok", a.ok}, {"offending_index", a.offending_index}, {"gcd", a.gcd}};
    } else {
        hs["ambient_failure"] = nullptr;
    }
    if (r.hypersurface.contained_stratum) {
        const Stratum& s = *r.hypersurface.contained_stratum;
        hs["contained_stratum"] = {{"indices", s.zero_set}, {"order", s.order}};
    } else {
        hs["contained_stratum"] = nullptr;
    }
    j["hypersurface_well_formed"] = std::move(hs);

    j["singular_strata"] = json::array();
    for (const Stratum& s : r.strata)
        j["singular_strata"].push_back({{"indices", s.zero_set}, {"order", s.order}});

    j["branch"] = json::array();
    for (const BranchComponent& c : r.branch)
        j["branch"].push_back({{"index", c.index},
                               {"m", c.m},
                               {"weights", c.curve_weights},
                               {"degree", c.curve_degree},
                               {"genus", c.genus.str()}});

    j["b2"] = r.b2;
    j["b2_oracle_checked"] = r.b2_oracle_checked;

    json hom;
    hom["rank"] = r.homology.rank;
    hom["torsion"] = json::array();
    for (const TorsionPart& t : r.homology.torsion)
        hom["torsion"].push_back({{"order", t.order}, {"exponent", t.exponent.str()}});
    j["homology"] = std::move(hom);

    j["sign"] = {{"index_gap", r.sign.index_gap},
                 {"sign", to_string(r.sign.sign)},
                 {"certified", r.sign.certified}};

    j["diffeo_type"] = r.diffeo_type ? json(*r.diffeo_type) : json(nullptr);
    j["flags"] = {{"negative_eta_einstein", r.negative_eta_einstein},
                  {"lorentzian_sasaki_einstein", r.lorentzian_sasaki_einstein}};
    j["notes"] = r.notes;
    return j;
}

std::string report_text(const LinkReport& r) {
    std::ostringstream os;
    os << "link of a hypersurface in " << weights_str(r.system.weights) << ", degree "
       << r.system.degree << "\n";
    if (r.polynomial)
        os << "polynomial: " << *r.polynomial << "\n";
    else
        os << "polynomial: general member of the degree-" << r.system.degree
           << " linear system\n";

    os << "quasismooth (" << to_string(r.quasismooth.mode) << " mode): "
       << (r.quasismooth.passed ? "passed" : "FAILED") << "\n";
    for (const QsFailure& f : r.quasismooth.failures) {
        os << "  failure: condition " << f.condition << " at indices (";
        for (std::size_t i = 0; i < f.indices.size(); ++i)
            os << (i ? "," : "") << f.indices[i];
        os << "): " << f.detail << "\n";
    }

    os << "ambient space well-formed: " << (r.ambient.ok ? "yes" : "no");
    if (!r.ambient.ok)
        os << " (dropping index " << r.ambient.offending_index << " leaves gcd " << r.ambient.gcd
           << ")";
    os << "\n";
    os << "hypersurface well-formed: " << (r.hypersurface.ok ? "yes" : "no");
    if (r.hypersurface.contained_stratum) {
        os << " (contains the stratum at indices ";
        const Stratum& s = *r.hypersurface.contained_stratum;
        for (std::size_t i = 0; i < s.zero_set.size(); ++i)
            os << (i ? "," : "") << s.zero_set[i];
        os << ", order " << s.order << ")";
    }
    os << "\n";

    if (r.strata.empty()) {
        os << "singular strata: none\n";
    } else {
        os << "singular strata:\n";
        for (const Stratum& s : r.strata) {
            os << "  indices (";
            for (std::size_t i = 0; i < s.zero_set.size(); ++i)
                os << (i ? "," : "") << s.zero_set[i];
            os << "), isotropy order " << s.order << "\n";
        }
    }

    if (r.branch.empty()) {
        os << "branch components: none\n";
    } else {
        os << "branch components:\n";
        for (const BranchComponent& c : r.branch)
            os << "  index " << c.index << ": m = " << c.m << ", curve "
               << weights_str(c.curve_weights) << " degree " << c.curve_degree << ", genus "
               << c.genus.str() << "\n";
    }

    os << "b2 = " << r.b2 << (r.b2_oracle_checked ? " (oracle checked)" : "") << "\n";
    os << "H2 = " << homology_str(r.homology) << "\n";
    os << "sign: " << to_string(r.sign.sign) << " (index gap " << r.sign.index_gap << ")"
       << (r.sign.certified ? ", certified" : ", indicative") << "\n";
    if (r.diffeo_type)
        os << "diffeomorphism type: " << *r.diffeo_type << "\n";
    os << "negative eta-Einstein structure: " << (r.negative_eta_einstein ? "yes" : "no") << "\n";
    os << "Lorentzian Sasaki-Einstein structure: "
       << (r.lorentzian_sasaki_einstein ? "yes" : "no") << "\n";
    for (const std::string& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

} // namespace wplink
