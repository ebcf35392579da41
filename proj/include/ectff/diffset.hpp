#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ectff/abelian.hpp"
#include "ectff/rational.hpp"

namespace ectff {

/// A sorted, duplicate-free subset of a group, held as element indices into the
/// group's lexicographic enumeration.
class GroupSubset {
public:
    /// Placeholder state ({0} in Z_2) so certificate structs stay default-constructible.
    GroupSubset() : group_(std::vector<int>{2}), indices_{0} {}
    GroupSubset(GroupSpec group, std::vector<long long> indices);

    static GroupSubset parse(const GroupSpec& group, std::string_view literal);
    static GroupSubset full(const GroupSpec& group);

    const GroupSpec& group() const { return group_; }
    const std::vector<long long>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    bool contains(long long index) const;

    GroupSubset complement() const;
    GroupSubset translate(long long g) const;
    /// sigma maps element index -> element index; must be additive and bijective.
    GroupSubset apply_automorphism(const std::vector<long long>& sigma) const;

    std::string literal() const;
    std::vector<GroupElement> elements() const;

    bool operator==(const GroupSubset& o) const {
        return group_ == o.group_ && indices_ == o.indices_;
    }
    bool operator<(const GroupSubset& o) const { return indices_ < o.indices_; }

private:
    GroupSpec group_;
    std::vector<long long> indices_;
};

struct DifferenceSetCertificate {
    GroupSubset subset;
    Rational lambda;                      // D(D-1)/(N-1)
    bool verdict = false;
    std::optional<long long> witness;     // offending g when verdict is no
    std::vector<std::int64_t> autocorrelation;
};

/// Autocorrelation of the subset's indicator: value at g counts the pairs
/// (g1, g2) in the subset with g = g1 - g2.
std::vector<std::int64_t> autocorrelation(const GroupSubset& subset);

/// Difference-set verdict, cross-checked by the autocorrelation test and the
/// DFT-modulus test (the two must agree; exact on exponent-2 groups).
DifferenceSetCertificate is_difference_set(const GroupSubset& subset, const Tolerance& tol = {});

/// Validate an element permutation as a group automorphism.
bool is_additive_bijection(const GroupSpec& group, const std::vector<long long>& sigma);

/// Automorphism of an elementary abelian 2-group from an invertible binary
/// matrix acting on coordinates; returns the induced index permutation.
std::vector<long long> automorphism_from_binary_matrix(const GroupSpec& group,
                                                       const std::vector<std::vector<int>>& mat);
/// Seeded random invertible binary matrix (elementary abelian 2-groups only).
std::vector<std::vector<int>> random_invertible_binary_matrix(int dim, std::uint64_t seed);

/// The automorphism of the dual induced by sigma under the identification given
/// by `form`, i.e. the index permutation tau with
/// pairing(sigma^{-1} x, y) = pairing(x, tau(y)). Elementary abelian 2-groups only.
std::vector<long long> induced_dual_automorphism(const GroupSpec& group, const PairingForm& form,
                                                 const std::vector<std::vector<int>>& sigma_matrix);

struct EnumerationOptions {
    bool up_to_translation = false;
    std::uint64_t max_results = UINT64_MAX;
    std::uint64_t max_nodes = UINT64_MAX;  // search-tree budget; exceeded => not exhaustive
    bool reverse_order = false;            // enumerate candidate elements high-to-low
};

/// Streaming enumeration of difference sets of a given size, pruned by partial
/// autocorrelation. With up_to_translation, emits exactly one representative per
/// translation class (the lexicographically least translate containing 0).
class DifferenceSetEnumerator {
public:
    DifferenceSetEnumerator(GroupSpec group, int size, EnumerationOptions options = {});

    std::optional<GroupSubset> next();
    bool exhausted_fairly() const { return !budget_exceeded_; }
    std::uint64_t nodes_visited() const { return nodes_; }

private:
    bool feasible_ = true;
    GroupSpec group_;
    int size_;
    EnumerationOptions options_;
    std::int64_t lambda_ = 0;
    std::vector<long long> stack_;
    std::vector<std::int64_t> diff_counts_;
    std::vector<long long> candidate_order_;
    std::vector<std::size_t> cursor_;
    std::uint64_t emitted_ = 0;
    std::uint64_t nodes_ = 0;
    bool budget_exceeded_ = false;
    bool started_ = false;

    bool push(long long elem);
    void pop();
    bool is_translation_canonical(const std::vector<long long>& set) const;
};

/// Convenience: collect up to `limit` certified difference sets.
std::vector<GroupSubset> enumerate_difference_sets(const GroupSpec& group, int size,
                                                   bool up_to_translation,
                                                   std::uint64_t limit = UINT64_MAX);

/// Canonical translation-class representative (least translate containing 0).
GroupSubset translation_canonical(const GroupSubset& subset);

}  // namespace ectff
