#pragma once

#include "wplink/ambient.hpp"
#include "wplink/divisor_ring.hpp"
#include "wplink/quasismooth.hpp"
#include "wplink/topology.hpp"

#include <optional>
#include <string>

#include "json.hpp"

namespace wplink {

/// Sign of the natural Sasakian structure on the link, read off the index
/// gap d - sum(w_i): positive gap -> negative structure (certified), zero ->
/// null, negative gap -> positive (both indicative only).
enum class Sign { negative, null_sign, positive };

const char* to_string(Sign s);

struct SignResult {
    long long index_gap = 0;
    Sign sign = Sign::null_sign;
    bool certified = false;     // only the negative case is certified
};

SignResult sasakian_sign(const WeightSystem& ws);

struct ClassifyOptions {
    QsMode mode = QsMode::support;      // ignored for weights-only input
    long long oracle_cap = 1000000;     // cross-check betti2 when lcm(u_i) <= cap
};

/// Everything the pipeline knows about one link, with normalized weights.
struct LinkReport {
    WeightSystem system;                    // primitive weights
    std::optional<std::string> polynomial;  // canonical form, when given
    bool general_member = false;            // weights-only input
    QuasismoothVerdict quasismooth;
    WellFormedResult ambient;
    HypersurfaceWellFormed hypersurface;
    std::vector<Stratum> strata;
    std::vector<BranchComponent> branch;
    long long b2 = 0;
    bool b2_oracle_checked = false;
    HomologySummary homology;
    SignResult sign;
    std::optional<std::string> diffeo_type; // only when quasismooth and torsion-free
    bool negative_eta_einstein = false;
    bool lorentzian_sasaki_einstein = false;
    std::vector<std::string> notes;
};

/// Full pipeline on a concrete polynomial.  The weight system is normalized
/// first (the polynomial is already homogeneous for the primitive system).
LinkReport classify_link(const WeightedPolynomial& f, const ClassifyOptions& opt = {});

/// Weights-only pipeline: quasismoothness over O(d), general-member reading
/// for containment checks.
LinkReport classify_link(const WeightSystem& ws, const ClassifyOptions& opt = {});

bool operator==(const LinkReport& a, const LinkReport& b);

/// Stable-schema JSON rendering; field order and value formatting are fixed,
/// so equal reports serialize byte-identically.
nlohmann::ordered_json report_json(const LinkReport& r);

/// Human-readable rendering with the same values as the JSON form.
std::string report_text(const LinkReport& r);

} // namespace wplink
