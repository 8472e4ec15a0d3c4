#pragma once

#include "wplink/classify.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

namespace wplink {

/// Enumeration box and filters.  Weight tuples run over
/// w0 <= w1 <= w2 <= w3 <= max_weight with gcd 1, degrees over
/// 1..max_degree, in lexicographic (w, d) order.
struct SearchConfig {
    long long max_weight = 6;
    long long max_degree = 24;
    std::set<long long> target_b2;      // empty = no filter
    bool require_negative = false;
    bool require_torsion_free = false;
    long long oracle_cap = 100000;
    long long limit = 0;                // 0 = unbounded

    // Optional partition of the outer loop; full range when unset.
    std::optional<long long> w0_min;
    std::optional<long long> w0_max;
};

SearchConfig search_config_from_json(const nlohmann::json& j);

/// Position in the enumeration, for resuming and reproducibility.
struct SearchCursor {
    std::vector<long long> weights;
    long long degree = 0;

    bool operator==(const SearchCursor& o) const = default;
};

struct Certificate {
    SearchCursor discovered_by;
    LinkReport report;
};

nlohmann::ordered_json certificate_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

/// Run the enumeration; survivors (quasismooth over O(d), filters applied)
/// are passed to `emit` in deterministic order.  Returns the number emitted.
/// When `resume_after` is set, enumeration restarts strictly after that
/// cursor.  Candidates whose pipeline raises a domain error are skipped.
long long enumerate_links(const SearchConfig& cfg,
                          const std::function<void(const Certificate&)>& emit,
                          const std::optional<SearchCursor>& resume_after = {});

/// Convenience: collect into a vector.
std::vector<Certificate> enumerate_links(const SearchConfig& cfg,
                                         const std::optional<SearchCursor>& resume_after = {});

/// Partition the w0 range into `jobs` chunks, run them on threads, and merge
/// in enumeration order; identical output to the single-threaded run.
std::vector<Certificate> enumerate_links_parallel(const SearchConfig& cfg, int jobs);

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> diffs;     // "field: expected X, got Y"
};

/// Recompute the report for a certificate's weight system and compare
/// field-by-field; the Betti oracle is consulted when under `oracle_cap`.
VerifyResult verify_certificate(const Certificate& c, long long oracle_cap = 100000);

/// JSONL persistence for certificate streams.
void write_certificates(std::ostream& out, const std::vector<Certificate>& cs);
std::vector<Certificate> read_certificates(std::istream& in);

} // namespace wplink
