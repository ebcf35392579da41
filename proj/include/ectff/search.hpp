#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ectff/diffset.hpp"
#include "ectff/pairing.hpp"

namespace ectff {

struct FeasibleTriple {
    std::int64_t d = 0, e = 0, n = 0;
    std::int64_t r = 0;
    bool sums_to_n = false;
    // set only when a local enumeration has certified a difference set of size
    // d in some group of order n; never populated from external tables
    std::optional<bool> ds_known;
};

enum class ESideRule { OverNMinus1, OverN };

struct ScanReport {
    std::int64_t max_n = 0;
    ESideRule rule = ESideRule::OverNMinus1;
    std::vector<FeasibleTriple> triples;   // under `rule`, sorted by (N, D, E)
    std::int64_t count_over_n_minus_1 = 0; // totals under each rule, for the header
    std::int64_t count_over_n = 0;
};

/// Integer-feasibility scan: 1 < D <= E < N <= maxN with D(D-1)/(N-1), the
/// E-side condition under the selected rule, and R all integral. Passing no
/// rule selects the one reproducing the known 27-triple count (over N-1).
ScanReport scan_triples(std::int64_t max_n, std::optional<ESideRule> rule = std::nullopt);

/// One GroupSpec per isomorphism class of abelian groups of order n
/// (partitions of each prime-power exponent), factors in nondecreasing order.
std::vector<GroupSpec> enumerate_abelian_groups(std::int64_t n);

struct FeasibilityResult {
    bool pass = false;
    std::vector<std::string> reasons;  // which filters failed
};

/// Conjunction of the integrality filters and D+E <= N.
FeasibilityResult feasibility_filter(std::int64_t d, std::int64_t e, std::int64_t n);

struct SearchOptions {
    std::uint64_t max_nodes_per_side = UINT64_MAX;  // enumeration budget
    std::uint64_t max_class_pairs = UINT64_MAX;     // certification budget
    bool reverse_order = false;                     // candidate enumeration order
    bool include_trivial = false;
    Tolerance tol;
};

struct FoundPair {
    GroupSubset d_set;
    GroupSubset e_set;
    PairedDSCertificate certificate;
};

struct SearchReport {
    GroupSpec group;
    int d_size = 0;
    int e_size = 0;
    bool feasible = false;
    std::vector<std::string> infeasible_reasons;
    std::vector<FoundPair> pairs;  // translation-canonical on both sides, sorted
    std::uint64_t d_classes = 0;
    std::uint64_t e_classes = 0;
    std::uint64_t pairs_tested = 0;
    bool exhaustive = false;
    double elapsed_seconds = 0.0;
    std::uint64_t cap_nodes_per_side = UINT64_MAX;  // echo of the budgets used
    std::uint64_t cap_class_pairs = UINT64_MAX;
};

/// Exhaustive paired-difference-set search over translation classes under the
/// standard duality identification. Every reported pair re-certifies under the
/// character-sum criterion.
SearchReport search_pds(const GroupSpec& group, int d_size, int e_size,
                        const SearchOptions& options = {});

}  // namespace ectff
