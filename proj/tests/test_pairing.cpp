#include <doctest.h>

#include <complex>
#include <set>

#include "ectff/pairing.hpp"
#include "ectff/search.hpp"

using namespace ectff;

namespace {

GroupSpec g16() { return GroupSpec::parse("Z2^4"); }

GroupSubset quadric16() {
    return GroupSubset::parse(g16(), "0000,0100,1000,1101,1110,1111");
}

PairedDSCandidate example_pair() {
    GroupSpec g = g16();
    GroupSubset d = quadric16();
    return PairedDSCandidate(g, PairingForm::symplectic(g), d, d.complement());
}

}  // namespace

TEST_CASE("rank formula") {
    CHECK(rank_formula(6, 10, 16) == Rational(5));
    CHECK(rank_formula(7, 1, 15) == Rational(1));
    CHECK(rank_formula(28, 36, 64) == Rational(21));
    CHECK(rank_formula(6, 9, 16) == Rational(81, 17));
    CHECK_FALSE(rank_formula(6, 9, 16).is_integer());
    CHECK_THROWS_AS(rank_formula(0, 1, 4), std::invalid_argument);
}

TEST_CASE("the order-16 pair certifies through the Gram test") {
    PairedDSCertificate cert = is_paired_gram(example_pair());
    CHECK(cert.verdict);
    CHECK(cert.rank_value == Rational(5));
    CHECK(cert.gram_rank == 5);
    CHECK(cert.tight_constant == Rational(12));
    CHECK(cert.exact);
    CHECK_FALSE(cert.trivial);
    CHECK(cert.necessary_check);
}

TEST_CASE("singleton D pairs trivially with any difference set") {
    GroupSpec g = g16();
    PairedDSCandidate cand(g, PairingForm::standard(g), GroupSubset(g, {3}),
                           quadric16().complement());
    PairedDSCertificate cert = is_paired_gram(cand);
    CHECK(cert.verdict);
    CHECK(cert.trivial);
    CHECK(cert.rank_value == Rational(1));

    CharsumResult cs = is_paired_charsum(cand);
    CHECK(cs.verdict);
    CHECK(cs.constant == std::complex<double>(10.0, 0.0));  // constant E
}

TEST_CASE("E equal to the whole dual pairs trivially") {
    GroupSpec g = g16();
    PairedDSCandidate cand(g, PairingForm::symplectic(g), quadric16(), GroupSubset::full(g));
    PairedDSCertificate cert = is_paired_gram(cand);
    CHECK(cert.verdict);
    CHECK(cert.trivial);
    CHECK(cert.tight_constant == Rational(16));
    CHECK(cert.rank_value == Rational(6));
}

TEST_CASE("(D, D) is not paired") {
    GroupSpec g = g16();
    GroupSubset d = quadric16();
    PairedDSCandidate cand(g, PairingForm::symplectic(g), d, d);
    PairedDSCertificate cert = is_paired_gram(cand);
    CHECK_FALSE(cert.verdict);

    // oracle: no scalar c can satisfy G^2 = c G on the raw integer Gram
    SynthesisMatrix phi = cand.restricted_synthesis();
    ExactMatrix gram = phi.mat.adjoint().multiply(phi.mat);
    ExactMatrix g2 = gram.multiply(gram);
    bool any = false;
    for (std::int64_t c = 0; c <= 36 && !any; ++c) any = g2.equals(gram.scaled_int(c));
    CHECK_FALSE(any);

    CharsumResult cs = is_paired_charsum(cand);
    CHECK_FALSE(cs.verdict);
    std::set<double> values;
    for (auto v : cs.profile) values.insert(v.real());
    CHECK(values.size() >= 2);
}

TEST_CASE("the character-sum criterion matches the Gram test on the example") {
    PairedDSCandidate cand = example_pair();
    CharsumResult cs = is_paired_charsum(cand);
    CHECK(cs.verdict);
    REQUIRE(cs.profile.size() == 60);
    for (auto v : cs.profile) CHECK(v == std::complex<double>(12.0, 0.0));
    CHECK(cs.constant.real() == doctest::Approx(is_paired_gram(cand).tight_constant.as_double()));
}

TEST_CASE("gram and charsum agree on every difference-set pair in small groups") {
    // exhaustive over all translation classes, all feasible sizes, orders <= 16
    for (std::int64_t n = 2; n <= 16; ++n) {
        for (const GroupSpec& g : enumerate_abelian_groups(n)) {
            std::vector<GroupSubset> all_sets;
            for (int d = 1; d <= static_cast<int>(n); ++d) {
                if (n > 1 && (static_cast<std::int64_t>(d) * (d - 1)) % (n - 1) != 0) continue;
                for (const auto& s : enumerate_difference_sets(g, d, true)) all_sets.push_back(s);
            }
            for (const auto& dset : all_sets)
                for (const auto& eset : all_sets) {
                    PairedDSCandidate cand(g, PairingForm::standard(g), dset, eset);
                    bool gram = is_paired_gram(cand).verdict;
                    bool charsum = is_paired_charsum(cand).verdict;
                    CHECK(gram == charsum);
                    // every proper pairing obeys the necessary condition D+E <= N
                    if (gram && dset.size() < static_cast<std::size_t>(n) &&
                        eset.size() < static_cast<std::size_t>(n))
                        CHECK(dset.size() + eset.size() <= static_cast<std::size_t>(n));
                }
        }
    }
}

TEST_CASE("pairing is invariant under translations on either side") {
    GroupSpec g = g16();
    GroupSubset d = quadric16(), e = d.complement();
    PairingForm form = PairingForm::symplectic(g);
    for (long long t : {1LL, 7LL, 12LL}) {
        CHECK(is_paired_gram(PairedDSCandidate(g, form, d.translate(t), e)).verdict);
        CHECK(is_paired_gram(PairedDSCandidate(g, form, d, e.translate(t))).verdict);
        CHECK(is_paired_gram(PairedDSCandidate(g, form, d.translate(t), e.translate(t))).verdict);
    }
}

TEST_CASE("pairing is invariant under a simultaneous automorphism") {
    GroupSpec g = g16();
    GroupSubset d = quadric16(), e = d.complement();
    PairingForm form = PairingForm::symplectic(g);
    for (std::uint64_t seed : {11ULL, 22ULL, 33ULL}) {
        auto mat = random_invertible_binary_matrix(4, seed);
        auto sigma = automorphism_from_binary_matrix(g, mat);
        auto tau = induced_dual_automorphism(g, form, mat);
        PairedDSCandidate cand(g, form, d.apply_automorphism(sigma), e.apply_automorphism(tau));
        CHECK(is_paired_gram(cand).verdict);
    }
}

TEST_CASE("necessary condition") {
    CHECK(check_necessary(example_pair()));
    CHECK(example_pair().d_set().size() + example_pair().e_set().size() == 16);

    // strict inequality happens for trivial pairs with D=1, E < N-1
    GroupSpec g = GroupSpec::parse("Z2^3");
    PairedDSCandidate tiny(g, PairingForm::standard(g), GroupSubset(g, {0}),
                           GroupSubset(g, {1}));
    CHECK(check_necessary(tiny));
    CHECK(tiny.d_set().size() + tiny.e_set().size() < 8);

    PairedDSCandidate full(g, PairingForm::standard(g), GroupSubset::full(g),
                           GroupSubset(g, {1}));
    CHECK_THROWS_AS(check_necessary(full), std::invalid_argument);
}

TEST_CASE("complements are paired exactly when D+E = N") {
    ComplementPairResult comp = complement_pair(example_pair());
    CHECK(comp.verdict);
    CHECK(is_paired_gram(comp.candidate).verdict);

    // a trivial pair with D+E < N: complements are not paired
    GroupSpec g = g16();
    PairedDSCandidate tiny(g, PairingForm::standard(g), GroupSubset(g, {0}),
                           GroupSubset(g, {2}));
    REQUIRE(is_paired_gram(tiny).verdict);
    ComplementPairResult tcomp = complement_pair(tiny);
    CHECK_FALSE(tcomp.verdict);
    CHECK_FALSE(is_paired_gram(tcomp.candidate).verdict);
}

TEST_CASE("transpose symmetry preserves R") {
    PairedDSCandidate cand = example_pair();
    PairedDSCandidate swapped = symmetry_transpose(cand);
    PairedDSCertificate cert = is_paired_gram(swapped);
    CHECK(cert.verdict);
    CHECK(cert.rank_value == Rational(5));
    CHECK(swapped.d_set().size() == 10);
    CHECK(swapped.e_set().size() == 6);

    // trivial pair transposes too
    GroupSpec g = g16();
    PairedDSCandidate tiny(g, PairingForm::standard(g), GroupSubset(g, {5}),
                           quadric16().complement());
    REQUIRE(is_paired_gram(tiny).verdict);
    CHECK(is_paired_gram(symmetry_transpose(tiny)).verdict);
}

TEST_CASE("non-difference-set inputs are rejected at construction") {
    GroupSpec z5 = GroupSpec::parse("Z5");
    CHECK_THROWS_AS(PairedDSCandidate(z5, PairingForm::standard(z5), GroupSubset(z5, {0, 1}),
                                      GroupSubset(z5, {0})),
                    std::invalid_argument);
}
