#include <doctest.h>

#include <complex>
#include <random>

#include "ectff/abelian.hpp"

using namespace ectff;

TEST_CASE("group spec parsing and enumeration") {
    GroupSpec z22 = GroupSpec::parse("Z2^2");
    auto elems = enumerate(z22);
    REQUIRE(elems.size() == 4);
    CHECK(elems[0] == GroupElement{0, 0});
    CHECK(elems[1] == GroupElement{0, 1});
    CHECK(elems[2] == GroupElement{1, 0});
    CHECK(elems[3] == GroupElement{1, 1});

    GroupSpec z4 = GroupSpec::parse("z4");
    auto e4 = enumerate(z4);
    REQUIRE(e4.size() == 4);
    CHECK(e4[0] == GroupElement{0});
    CHECK(e4[3] == GroupElement{3});

    GroupSpec mixed = GroupSpec::parse("Z2xZ4");
    auto em = enumerate(mixed);
    REQUIRE(em.size() == 8);
    CHECK(em.front() == GroupElement{0, 0});
    CHECK(em.back() == GroupElement{1, 3});
    CHECK(mixed.exponent() == 4);
    CHECK(mixed.to_string() == "Z2xZ4");

    CHECK(GroupSpec::parse("Z2^2xZ4").order() == 16);
    CHECK_THROWS_AS(GroupSpec::parse("Z1"), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::parse("4"), std::invalid_argument);
}

TEST_CASE("element literals round-trip") {
    GroupSpec z24 = GroupSpec::parse("Z2^4");
    CHECK(z24.element_literal(13) == "1101");
    CHECK(z24.parse_element("1101") == 13);
    GroupSpec mixed = GroupSpec::parse("Z2xZ4");
    CHECK(mixed.element_literal(7) == "1,3");
    CHECK(mixed.parse_element("1,3") == 7);
}

TEST_CASE("character values") {
    GroupSpec z24 = GroupSpec::parse("Z2^4");
    for (long long x = 0; x < 16; ++x)
        CHECK(character_value(z24, {0, 0, 0, 0}, z24.coords_of(x)).exponent == 0);

    GroupSpec z4 = GroupSpec::parse("Z4");
    RootOfUnity r = character_value(z4, {1}, {1});
    CHECK(r.exponent == 1);
    CHECK(r.modulus == 4);
    CHECK(r.value() == std::complex<double>(0.0, 1.0));

    GroupSpec z22 = GroupSpec::parse("Z2^2");
    CHECK(character_value(z22, {1, 1}, {1, 1}).exponent == 0);
}

TEST_CASE("character exponent is additive in each argument") {
    std::mt19937 rng(7);
    for (const char* name : {"Z2^3", "Z4xZ4", "Z2xZ6"}) {
        GroupSpec g = GroupSpec::parse(name);
        for (int trial = 0; trial < 50; ++trial) {
            long long y1 = rng() % g.order(), y2 = rng() % g.order(), x = rng() % g.order();
            auto lhs = character_value(g, g.coords_of(g.add(y1, y2)), g.coords_of(x));
            auto rhs = character_value(g, g.coords_of(y1), g.coords_of(x)) *
                       character_value(g, g.coords_of(y2), g.coords_of(x));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("character table of Z2 and orthogonality") {
    GroupSpec z2 = GroupSpec::parse("Z2");
    ExactMatrix gamma = character_table(z2);
    CHECK(gamma.at_int(0, 0) == 1);
    CHECK(gamma.at_int(0, 1) == 1);
    CHECK(gamma.at_int(1, 0) == 1);
    CHECK(gamma.at_int(1, 1) == -1);

    for (const char* name : {"Z2^4", "Z2^2xZ4", "Z6"}) {
        GroupSpec g = GroupSpec::parse(name);
        ExactMatrix t = character_table(g);
        ExactMatrix prod = t.multiply(t.adjoint());
        ExactMatrix target = ExactMatrix::identity(static_cast<std::size_t>(g.order()),
                                                   MatrixKind::Integer)
                                 .scaled_int(g.order());
        if (t.is_integer())
            CHECK(prod.equals(target));
        else
            CHECK(prod.approx_equals(target.to_complex(), 1e-10 * static_cast<double>(g.order())));
    }
}

TEST_CASE("degenerate bicharacter is rejected") {
    GroupSpec z22 = GroupSpec::parse("Z2^2");
    auto zero = PairingForm::from_matrix(z22, {{0, 0}, {0, 0}});
    CHECK_THROWS_AS(character_table(z22, zero), std::invalid_argument);
    CHECK_THROWS_AS(PairingForm::symplectic(GroupSpec::parse("Z2^3")), std::invalid_argument);
    CHECK_THROWS_AS(PairingForm::symplectic(GroupSpec::parse("Z4xZ4")), std::invalid_argument);
}

TEST_CASE("dimension and length mismatches are rejected") {
    GroupSpec g = GroupSpec::parse("Z2^4");
    CHECK_THROWS_AS(character_value(g, {1, 0}, {1, 0, 0, 0}), std::invalid_argument);
    std::vector<std::complex<double>> short_vec(3, 0.0);
    CHECK_THROWS_AS(dft(g, short_vec), std::invalid_argument);
    CHECK_THROWS_AS(convolve(g, short_vec, short_vec), std::invalid_argument);
    CHECK_THROWS_AS(involute(g, short_vec), std::invalid_argument);
}

TEST_CASE("dft of point mass and constants") {
    GroupSpec g = GroupSpec::parse("Z2xZ4");
    std::size_t n = static_cast<std::size_t>(g.order());
    std::vector<std::complex<double>> delta0(n, 0.0);
    delta0[0] = 1.0;
    auto hat = dft(g, delta0);
    for (auto v : hat) CHECK(std::abs(v - 1.0) < 1e-12);

    std::vector<std::complex<double>> ones(n, 1.0);
    auto hat2 = dft(g, ones);
    CHECK(std::abs(hat2[0] - static_cast<double>(n)) < 1e-9);
    for (std::size_t i = 1; i < n; ++i) CHECK(std::abs(hat2[i]) < 1e-9);
}

TEST_CASE("dft applied twice with conjugation recovers N x") {
    std::mt19937 rng(11);
    for (const char* name : {"Z2^3", "Z6", "Z4xZ4"}) {
        GroupSpec g = GroupSpec::parse(name);
        std::size_t n = static_cast<std::size_t>(g.order());
        std::vector<std::complex<double>> x(n);
        for (auto& v : x)
            v = {std::uniform_real_distribution<>(-1, 1)(rng),
                 std::uniform_real_distribution<>(-1, 1)(rng)};
        auto once = dft(g, x);
        for (auto& v : once) v = std::conj(v);
        auto twice = dft(g, once);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::abs(std::conj(twice[i]) - static_cast<double>(n) * x[i]) < 1e-9);
    }
}

TEST_CASE("convolution theorem and involution") {
    std::mt19937 rng(23);
    for (const char* name : {"Z2^3", "Z6"}) {
        GroupSpec g = GroupSpec::parse(name);
        std::size_t n = static_cast<std::size_t>(g.order());
        std::vector<std::complex<double>> x1(n), x2(n);
        for (auto& v : x1) v = std::uniform_real_distribution<>(-2, 2)(rng);
        for (auto& v : x2) v = std::uniform_real_distribution<>(-2, 2)(rng);

        auto conv = convolve(g, x1, x2);
        auto lhs = dft(g, conv);
        auto h1 = dft(g, x1);
        auto h2 = dft(g, x2);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(lhs[i] - h1[i] * h2[i]) < 1e-9);

        // delta_0 * x = x
        std::vector<std::complex<double>> delta0(n, 0.0);
        delta0[0] = 1.0;
        auto idc = convolve(g, delta0, x1);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(idc[i] - x1[i]) < 1e-12);

        // involute twice = identity; dft(involute(x)) = conj(dft(x))
        auto invol = involute(g, involute(g, x1));
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(invol[i] - x1[i]) < 1e-12);
        auto hi = dft(g, involute(g, x1));
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(hi[i] - std::conj(h1[i])) < 1e-9);
    }
}
