#pragma once

#include "wplink/polynomial.hpp"
#include "wplink/weight_system.hpp"

#include <optional>
#include <vector>

namespace wplink {

/// Divide weights and degree by their overall gcd.  The degree must stay
/// integral; per-index well-forming reductions are deliberately not applied.
WeightSystem normalize(const WeightSystem& ws);

struct WellFormedResult {
    bool ok = true;
    int offending_index = -1;   // first i (ascending) with gcd(w_j : j != i) > 1
    long long gcd = 1;
};

/// A weighted projective space is well-formed when dropping any single weight
/// leaves a coprime tuple.  Requires primitive weights.
WellFormedResult is_well_formed_space(const std::vector<long long>& weights);

/// A singular stratum: the coordinates in `zero_set` vanish, and the isotropy
/// of a generic surviving point has order `order` = gcd of the other weights.
struct Stratum {
    std::vector<int> zero_set;
    long long order = 1;

    bool operator==(const Stratum& o) const = default;
};

/// All strata with nontrivial isotropy, ordered by |zero_set| then
/// lexicographically by zero_set.
std::vector<Stratum> singular_strata(const std::vector<long long>& weights);

struct HypersurfaceWellFormed {
    bool ok = true;
    // On failure: either the ambient offence, or the contained stratum.
    std::optional<WellFormedResult> ambient_failure;
    std::optional<Stratum> contained_stratum;   // zero_set = the two vanishing coords
};

/// Well-formedness of the hypersurface cut out by `f` (4 variables): the
/// ambient space must be well-formed, and for every pair {k,l} with
/// h = gcd(w_k,w_l) > 1 and h | d some monomial must live on {k,l} alone, so
/// the hypersurface misses the singular stratum where only z_k,z_l survive.
/// Pairs with h not dividing d are skipped: no degree-d form can meet that
/// condition, every hypersurface of that degree contains the (rational)
/// stratum, and the convention here counts those as well-formed.
HypersurfaceWellFormed is_well_formed_hypersurface(const WeightedPolynomial& f);

/// Same test against the full linear system O(d) instead of the support of a
/// specific polynomial (general-member reading).
HypersurfaceWellFormed is_well_formed_hypersurface(const WeightSystem& ws);

} // namespace wplink
