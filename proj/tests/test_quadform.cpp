#include <doctest.h>

#include <random>

#include "ectff/quadform.hpp"
#include "reference_fixtures.hpp"

using namespace ectff;

TEST_CASE("canonical forms and polarization") {
    BinaryQuadraticForm ell = BinaryQuadraticForm::canonical_elliptic(2);
    // Q(x) = x1 x2 + x3 x4 + x3^2 + x4^2
    CHECK(ell.evaluate({0, 0, 0, 0}) == 0);
    CHECK(ell.evaluate({1, 1, 0, 0}) == 1);
    CHECK(ell.evaluate({0, 0, 1, 0}) == 1);
    CHECK(ell.evaluate({0, 0, 1, 1}) == 1);
    CHECK(ell.evaluate({1, 1, 1, 1}) == 0);

    for (int m = 1; m <= 5; ++m) {
        PolarizeResult h = polarize(BinaryQuadraticForm::canonical_hyperbolic(m));
        PolarizeResult e = polarize(BinaryQuadraticForm::canonical_elliptic(m));
        CHECK(h.nondefective);
        CHECK(e.nondefective);
        CHECK(h.form == BinarySymplecticForm::canonical(m));
        CHECK(e.form == BinarySymplecticForm::canonical(m));
    }

    // the Example's bilinear form: B(x,y) = x1y2 + x2y1 + x3y4 + x4y3
    BinarySymplecticForm b = polarize(BinaryQuadraticForm::canonical_elliptic(2)).form;
    CHECK(b.evaluate({1, 0, 0, 0}, {0, 1, 0, 0}) == 1);
    CHECK(b.evaluate({1, 0, 0, 0}, {1, 0, 0, 0}) == 0);
    CHECK(b.evaluate({0, 0, 1, 0}, {0, 0, 0, 1}) == 1);
    CHECK(b.evaluate({1, 0, 0, 0}, {0, 0, 0, 1}) == 0);
}

TEST_CASE("defective forms polarize to degenerate bilinear forms") {
    PolarizeResult z = polarize(BinaryQuadraticForm::zero(4));
    CHECK_FALSE(z.nondefective);
    // Q(x) = x1^2 polarizes to zero: squares vanish under polarization
    BinaryQuadraticForm sq(2, {{1, 0}, {0, 0}});
    PolarizeResult s = polarize(sq);
    CHECK_FALSE(s.nondefective);
    for (const auto& row : s.form.gram())
        for (int v : row) CHECK(v == 0);
    CHECK_THROWS_AS(sign_of(sq), std::invalid_argument);
}

TEST_CASE("signs and quadric sizes of the canonical forms") {
    for (int m = 1; m <= 5; ++m) {
        BinaryQuadraticForm h = BinaryQuadraticForm::canonical_hyperbolic(m);
        BinaryQuadraticForm e = BinaryQuadraticForm::canonical_elliptic(m);
        CHECK(sign_of(h) == 1);
        CHECK(sign_of(e) == -1);
        std::int64_t half = 1LL << (m - 1), full = 1LL << m;
        CHECK(quadric(h).size() == static_cast<std::size_t>(half * (full + 1)));
        CHECK(quadric(e).size() == static_cast<std::size_t>(half * (full - 1)));
    }
    CHECK(quadric(BinaryQuadraticForm::canonical_hyperbolic(1)).literal() == "00,01,10");
    CHECK(quadric(BinaryQuadraticForm::canonical_elliptic(2)).literal() ==
          "0000,0100,1000,1101,1110,1111");
    // defective: the zero form's quadric is the whole space
    CHECK(quadric(BinaryQuadraticForm::zero(4)).size() == 16);
}

TEST_CASE("sign of a shifted form flips with the shift's value") {
    std::mt19937 rng(41);
    for (int m = 1; m <= 3; ++m) {
        for (auto base : {BinaryQuadraticForm::canonical_hyperbolic(m),
                          BinaryQuadraticForm::canonical_elliptic(m)}) {
            int base_sign = sign_of(base);
            for (int trial = 0; trial < 8; ++trial) {
                GroupElement v0(2 * m);
                for (auto& c : v0) c = static_cast<int>(rng() & 1);
                BinaryQuadraticForm shifted = base.shifted(v0);
                int expect = base.evaluate(v0) == 0 ? base_sign : -base_sign;
                CHECK(sign_of(shifted) == expect);
            }
        }
    }
}

TEST_CASE("quadrics are difference sets, including shifted forms") {
    std::mt19937 rng(43);
    for (int m = 1; m <= 5; ++m) {
        for (auto base : {BinaryQuadraticForm::canonical_hyperbolic(m),
                          BinaryQuadraticForm::canonical_elliptic(m)}) {
            CHECK(is_difference_set(quadric(base)).verdict);
            GroupElement v0(2 * m);
            for (auto& c : v0) c = static_cast<int>(rng() & 1);
            CHECK(is_difference_set(quadric(base.shifted(v0))).verdict);
        }
    }
}

TEST_CASE("chirp bundle of the M=2 elliptic form") {
    ChirpBundle bundle = chirp_bundle(BinaryQuadraticForm::canonical_elliptic(2));
    CHECK(bundle.sign == -1);
    CHECK(bundle.cubic_verified);
    std::string chirp;
    for (auto v : bundle.chirp) chirp.push_back(v > 0 ? '+' : '-');
    CHECK(chirp == fixtures::kChirpM2Elliptic);

    // (Gamma Delta)^3 = -64 I, recomputed here
    ExactMatrix gd = bundle.gamma.multiply(bundle.delta);
    ExactMatrix cubed = gd.multiply(gd).multiply(gd);
    CHECK(cubed.equals(ExactMatrix::identity(16).scaled_int(-64)));

    // the table matches the displayed one
    CHECK(bundle.gamma.equals(fixtures::sign_matrix(fixtures::kGamma16)));
}

TEST_CASE("chirp identities hold for small M, both kinds") {
    for (int m = 1; m <= 3; ++m) {
        for (auto q : {BinaryQuadraticForm::canonical_hyperbolic(m),
                       BinaryQuadraticForm::canonical_elliptic(m)}) {
            ChirpBundle b = chirp_bundle(q);  // throws if any identity fails
            CHECK(b.m == m);
            CHECK(b.gamma.multiply(b.delta).multiply(b.gamma.multiply(b.delta))
                      .multiply(b.gamma.multiply(b.delta))
                      .equals(ExactMatrix::identity(b.gamma.rows())
                                  .scaled_int(b.sign * (1LL << (3 * m)))));
        }
    }
    // Gamma = Delta C Delta spot check at M=1 (4x4)
    ChirpBundle b1 = chirp_bundle(BinaryQuadraticForm::canonical_hyperbolic(1));
    CHECK(b1.delta.multiply(b1.c).multiply(b1.delta).equals(b1.gamma));
}

TEST_CASE("C is group-circulant while Gamma is not") {
    ChirpBundle b = chirp_bundle(BinaryQuadraticForm::canonical_elliptic(2));
    GroupSpec g = GroupSpec::parse("Z2^4");
    bool c_circulant = true, gamma_circulant = true;
    for (long long i = 0; i < 16; ++i)
        for (long long j = 0; j < 16; ++j) {
            long long s = g.add(i, j);
            if (b.c.at_int(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) !=
                b.chirp[static_cast<std::size_t>(s)])
                c_circulant = false;
            if (b.gamma.at_int(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) !=
                b.gamma.at_int(0, static_cast<std::size_t>(s)))
                gamma_circulant = false;
        }
    CHECK(c_circulant);
    CHECK_FALSE(gamma_circulant);
}

TEST_CASE("memory guard and the cubic flag") {
    ChirpOptions opt;
    opt.max_m = 2;
    CHECK_THROWS_AS(chirp_bundle(BinaryQuadraticForm::canonical_hyperbolic(3), opt),
                    std::invalid_argument);
    CHECK_THROWS_AS(chirp_bundle(BinaryQuadraticForm::zero(4)), std::invalid_argument);
    CHECK_THROWS_AS(BinaryQuadraticForm::canonical_hyperbolic(0), std::invalid_argument);
}

TEST_CASE("closed-form DFT of the quadric indicator") {
    for (int m = 1; m <= 3; ++m) {
        for (auto q : {BinaryQuadraticForm::canonical_hyperbolic(m),
                       BinaryQuadraticForm::canonical_elliptic(m)}) {
            ChirpBundle b = chirp_bundle(q);
            GroupSubset d = quadric(q);
            std::size_t n = b.gamma.rows();
            std::vector<std::int64_t> chi(n, 0);
            for (long long i : d.indices()) chi[static_cast<std::size_t>(i)] = 1;
            // Gamma chi_D = 2^{M-1} [2^M delta_0 + sgn(Q)(2 chi_D - 1)]
            std::int64_t half = 1LL << (m - 1), full = 1LL << m;
            for (std::size_t v = 0; v < n; ++v) {
                std::int64_t acc = 0;
                for (std::size_t w = 0; w < n; ++w) acc += b.gamma.at_int(v, w) * chi[w];
                std::int64_t expect =
                    half * ((v == 0 ? full : 0) + b.sign * (2 * chi[v] - 1));
                CHECK(acc == expect);
            }
        }
    }
}

TEST_CASE("the harmonic Gram equals the chirp closed form") {
    for (int m = 1; m <= 3; ++m) {
        for (auto q : {BinaryQuadraticForm::canonical_hyperbolic(m),
                       BinaryQuadraticForm::canonical_elliptic(m)}) {
            ChirpBundle b = chirp_bundle(q);
            GroupSpec g = quadform_group(q);
            PairingForm form = polarize(q).form.pairing(g);
            SynthesisMatrix phi = harmonic_synthesis(g, quadric(q), std::nullopt, form);
            ExactMatrix gram = phi.mat.adjoint().multiply(phi.mat);
            std::int64_t half = 1LL << (m - 1), full = 1LL << m;
            ExactMatrix expect = ExactMatrix::identity(b.c.rows())
                                     .scaled_int(full)
                                     .add(b.c.scaled_int(b.sign))
                                     .scaled_int(half);
            CHECK(gram.equals(expect));
        }
    }
}

TEST_CASE("quadric pairs with its complement; normalized and plain constants") {
    for (int m = 1; m <= 5; ++m) {
        for (auto kind : {QuadKind::Hyperbolic, QuadKind::Elliptic}) {
            BinaryQuadraticForm q = kind == QuadKind::Hyperbolic
                                        ? BinaryQuadraticForm::canonical_hyperbolic(m)
                                        : BinaryQuadraticForm::canonical_elliptic(m);
            GroupSpec g = quadform_group(q);
            PairingForm form = polarize(q).form.pairing(g);
            GroupSubset d = quadric(q);
            PairedDSCandidate cand(g, form, d, d.complement());
            PairedDSCertificate cert = is_paired_gram(cand);
            CHECK(cert.verdict);
            std::int64_t r = ((1LL << (2 * m)) - 1) / 3;
            CHECK(cert.rank_value == Rational(r));
            // tight constant DE/R = 3*4^{M-1}
            CHECK(cert.tight_constant == Rational(3 * (1LL << (2 * m - 2))));

            // scale-normalized identity: (Gram/2^{M-1})^2 = 3*2^{M-1} (Gram/2^{M-1})
            SynthesisMatrix phi = cand.restricted_synthesis();
            ExactMatrix gram = phi.mat.adjoint().multiply(phi.mat);
            std::int64_t half = 1LL << (m - 1);
            ExactMatrix gnorm = ExactMatrix::integer(gram.rows(), gram.cols());
            bool divisible = true;
            for (std::size_t i = 0; i < gram.rows(); ++i)
                for (std::size_t j = 0; j < gram.cols(); ++j) {
                    divisible = divisible && gram.at_int(i, j) % half == 0;
                    gnorm.at_int(i, j) = gram.at_int(i, j) / half;
                }
            REQUIRE(divisible);
            CHECK(gnorm.multiply(gnorm).equals(gnorm.scaled_int(3 * half)));
        }
    }
}

TEST_CASE("the M=1 bundle is trivial but certified") {
    InfiniteFamilyBundle b = build_infinite_family(1, QuadKind::Elliptic);
    CHECK(b.sign == -1);
    CHECK(b.pds.verdict);
    CHECK(b.pds.trivial);
    CHECK(b.etf_a.rank == 1);
    CHECK(b.etf_a.count == 4);
    CHECK(b.ectff_c.rank == 1);
    CHECK(b.ectff_c.count == 4);
    CHECK(b.ectff_c.is_ectff);
    CHECK(b.etf_d.rank == 3);
    CHECK(b.ectff_f.ambient == 3);
    CHECK(b.ectff_f.is_ectff);

    InfiniteFamilyBundle h = build_infinite_family(1, QuadKind::Hyperbolic);
    CHECK(h.etf_a.rank == 3);
    CHECK(h.ectff_c.ambient == 3);
    CHECK(h.ectff_f.ambient == 1);
}

TEST_CASE("the M=2 elliptic bundle matches the worked example") {
    BundleOptions opt;
    opt.with_angles = true;
    InfiniteFamilyBundle b = build_infinite_family(2, QuadKind::Elliptic, opt);
    CHECK(b.sign == -1);
    CHECK(b.quadric_cert.subset.size() == 6);
    CHECK(b.pds.verdict);
    CHECK_FALSE(b.pds.trivial);
    CHECK(b.pds.rank_value == Rational(5));
    CHECK(b.pds.tight_constant == Rational(12));
    CHECK(b.charsum.verdict);

    CHECK(b.etf_a.is_etf);
    CHECK(b.etf_a.rank == 6);
    CHECK(b.etf_a.count == 16);
    CHECK(b.sub_etf_b.is_etf);
    CHECK(b.sub_etf_b.rank == 5);
    CHECK(b.sub_etf_b.count == 10);
    CHECK(b.sub_b_gram_invariant);
    CHECK(b.ectff_c.is_ectff);
    CHECK(b.ectff_c.ambient == 6);
    CHECK(b.ectff_c.count == 16);
    CHECK(b.ectff_c.rank == 5);
    REQUIRE(b.ectff_c.equiisoclinic.has_value());
    CHECK_FALSE(*b.ectff_c.equiisoclinic);

    CHECK(b.etf_d.is_etf);
    CHECK(b.etf_d.rank == 10);
    CHECK(b.sub_etf_e.is_etf);
    CHECK(b.sub_etf_e.rank == 5);
    CHECK(b.sub_etf_e.count == 6);
    CHECK(b.sub_e_gram_invariant);
    CHECK(b.ectff_f.is_ectff);
    CHECK(b.ectff_f.ambient == 10);
}

TEST_CASE("axial SRG closed forms on the M=3 sub-ETF(21,36)") {
    BundleOptions opt;
    InfiniteFamilyBundle b = build_infinite_family(3, QuadKind::Elliptic, opt);
    REQUIRE(b.sub_etf_b.is_etf);
    REQUIRE(b.sub_etf_b.rank == 21);
    REQUIRE(b.sub_etf_b.count == 36);

    // rebuild the representative synthesis and bridge it
    BinaryQuadraticForm q = BinaryQuadraticForm::canonical_elliptic(3);
    GroupSpec g = quadform_group(q);
    PairingForm form = polarize(q).form.pairing(g);
    GroupSubset d = quadric(q);
    SynthesisMatrix sub = harmonic_synthesis(g, d, d.complement(), form);
    SrgCertificate srg = etf_to_srg_axial(sub);
    CHECK(srg.v == 36);
    // K = (1/2)(2^{M-1}+1)[2^M - 1 - sgn(Q)]
    CHECK(srg.k == (5 * (8 - 1 + 1)) / 2);
    // U = 2^{M-3}[2^M + 3 - sgn(Q)]
    CHECK(srg.u == 1 * (8 + 3 + 1));
    CHECK(srg.identity_residual == 0);
}
