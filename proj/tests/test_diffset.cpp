#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ectff/diffset.hpp"

using namespace ectff;

namespace {

const char* kQuadricLiteral = "0000,0100,1000,1101,1110,1111";

GroupSubset quadric16() {
    return GroupSubset::parse(GroupSpec::parse("Z2^4"), kQuadricLiteral);
}

// Independent oracle: count the difference table directly.
std::vector<std::int64_t> diff_table_counts(const GroupSubset& s) {
    const GroupSpec& g = s.group();
    std::vector<std::int64_t> counts(static_cast<std::size_t>(g.order()), 0);
    for (long long a : s.indices())
        for (long long b : s.indices()) {
            GroupElement ca = g.coords_of(a), cb = g.coords_of(b), diff(ca.size());
            for (std::size_t j = 0; j < ca.size(); ++j)
                diff[j] = (ca[j] - cb[j] + g.factors()[j]) % g.factors()[j];
            ++counts[static_cast<std::size_t>(g.index_of(diff))];
        }
    return counts;
}

}  // namespace

TEST_CASE("subset parsing, literals, complement") {
    GroupSubset d = quadric16();
    CHECK(d.size() == 6);
    CHECK(d.literal() == kQuadricLiteral);
    GroupSubset e = d.complement();
    CHECK(e.size() == 10);
    CHECK(e.literal() == "0001,0010,0011,0101,0110,0111,1001,1010,1011,1100");

    GroupSpec mixed = GroupSpec::parse("Z2xZ4");
    GroupSubset m = GroupSubset::parse(mixed, "0,0;1,3");
    CHECK(m.size() == 2);
    CHECK(m.literal() == "0,0;1,3");
}

TEST_CASE("autocorrelation of the order-16 quadric") {
    GroupSubset d = quadric16();
    auto ac = autocorrelation(d);
    CHECK(ac[0] == 6);
    for (std::size_t i = 1; i < 16; ++i) CHECK(ac[i] == 2);
    CHECK(ac == diff_table_counts(d));
}

TEST_CASE("autocorrelation degenerate cases") {
    GroupSpec g = GroupSpec::parse("Z6");
    GroupSubset zero(g, {0});
    auto ac = autocorrelation(zero);
    CHECK(ac[0] == 1);
    for (std::size_t i = 1; i < 6; ++i) CHECK(ac[i] == 0);

    auto full = autocorrelation(GroupSubset::full(g));
    for (auto v : full) CHECK(v == 6);
}

TEST_CASE("difference-set certificates") {
    GroupSubset d = quadric16();
    auto cert = is_difference_set(d);
    CHECK(cert.verdict);
    CHECK(cert.lambda == Rational(2));

    auto comp = is_difference_set(d.complement());
    CHECK(comp.verdict);
    CHECK(comp.lambda == Rational(6));

    GroupSpec z5 = GroupSpec::parse("Z5");
    auto bad = is_difference_set(GroupSubset(z5, {0, 1}));
    CHECK_FALSE(bad.verdict);
    CHECK(bad.witness.has_value());
    // oracle agreement
    auto counts = diff_table_counts(GroupSubset(z5, {0, 1}));
    std::set<std::int64_t> off(counts.begin() + 1, counts.end());
    CHECK(off.size() > 1);
}

TEST_CASE("autocorrelation of the complement identity") {
    std::mt19937 rng(31);
    GroupSpec g = GroupSpec::parse("Z2xZ6");
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<long long> pick;
        for (long long i = 0; i < g.order(); ++i)
            if (rng() % 3 == 0) pick.push_back(i);
        if (pick.empty() || static_cast<long long>(pick.size()) == g.order()) continue;
        GroupSubset s(g, pick);
        auto ac = autocorrelation(s);
        auto acc = autocorrelation(s.complement());
        std::int64_t n = g.order(), d = static_cast<std::int64_t>(s.size());
        for (long long i = 1; i < n; ++i)
            CHECK(acc[static_cast<std::size_t>(i)] ==
                  ac[static_cast<std::size_t>(i)] + n - 2 * d);
    }
}

TEST_CASE("translate and automorphism preserve the verdict") {
    GroupSubset d = quadric16();
    const GroupSpec& g = d.group();
    CHECK(d.translate(0) == d);
    for (long long t : {3LL, 9LL, 15LL}) CHECK(is_difference_set(d.translate(t)).verdict);

    // coordinate swap (1 2)(3 4) as a binary matrix
    std::vector<std::vector<int>> swap_mat{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    auto sigma = automorphism_from_binary_matrix(g, swap_mat);
    CHECK(is_difference_set(d.apply_automorphism(sigma)).verdict);

    // random automorphisms
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        auto mat = random_invertible_binary_matrix(4, seed);
        auto s = automorphism_from_binary_matrix(g, mat);
        CHECK(is_difference_set(d.apply_automorphism(s)).verdict);
    }

    // non-additive permutation is rejected
    std::vector<long long> bogus(16);
    for (long long i = 0; i < 16; ++i) bogus[static_cast<std::size_t>(i)] = i;
    std::swap(bogus[1], bogus[2]);
    std::swap(bogus[5], bogus[7]);
    CHECK_FALSE(is_additive_bijection(g, bogus));
    CHECK_THROWS_AS(d.apply_automorphism(bogus), std::invalid_argument);
}

TEST_CASE("enumeration finds the quadric class in Z2^4") {
    GroupSpec g = GroupSpec::parse("Z2^4");
    auto sets = enumerate_difference_sets(g, 6, true);
    CHECK(!sets.empty());
    GroupSubset canon = translation_canonical(quadric16());
    CHECK(std::find(sets.begin(), sets.end(), canon) != sets.end());
    for (const auto& s : sets) {
        CHECK(is_difference_set(s).verdict);
        CHECK(s.contains(0));
        CHECK(translation_canonical(s) == s);
    }
    // classes are pairwise distinct
    std::set<GroupSubset> unique(sets.begin(), sets.end());
    CHECK(unique.size() == sets.size());
}

TEST_CASE("integrality filter empties the stream") {
    auto sets = enumerate_difference_sets(GroupSpec::parse("Z5"), 3, false);
    CHECK(sets.empty());
}

TEST_CASE("Z7 enumeration matches the brute-force oracle") {
    GroupSpec g = GroupSpec::parse("Z7");
    auto sets = enumerate_difference_sets(g, 3, false);

    // oracle: test all C(7,3) subsets by difference table
    std::vector<GroupSubset> expected;
    for (long long a = 0; a < 7; ++a)
        for (long long b = a + 1; b < 7; ++b)
            for (long long c = b + 1; c < 7; ++c) {
                GroupSubset s(g, {a, b, c});
                auto counts = diff_table_counts(s);
                bool ok = true;
                for (std::size_t i = 1; i < 7; ++i)
                    if (counts[i] != 1) ok = false;
                if (ok) expected.push_back(s);
            }
    CHECK(sets.size() == expected.size());
    CHECK(std::is_permutation(sets.begin(), sets.end(), expected.begin()));
    GroupSubset qr(g, {1, 2, 4});
    CHECK(std::find(sets.begin(), sets.end(), qr) != sets.end());
}

TEST_CASE("enumeration result is order-invariant") {
    GroupSpec g = GroupSpec::parse("Z2^4");
    EnumerationOptions fwd, rev;
    fwd.up_to_translation = rev.up_to_translation = true;
    rev.reverse_order = true;
    DifferenceSetEnumerator ef(g, 6, fwd), er(g, 6, rev);
    std::set<GroupSubset> a, b;
    while (auto s = ef.next()) a.insert(*s);
    while (auto s = er.next()) b.insert(*s);
    CHECK(a == b);
}

TEST_CASE("node budget reports non-exhaustive") {
    GroupSpec g = GroupSpec::parse("Z2^4");
    EnumerationOptions opt;
    opt.up_to_translation = true;
    opt.max_nodes = 5;
    DifferenceSetEnumerator e(g, 6, opt);
    while (e.next()) {
    }
    CHECK_FALSE(e.exhausted_fairly());
}
