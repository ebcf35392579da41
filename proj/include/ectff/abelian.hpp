#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ectff/linalg.hpp"

namespace ectff {

/// Element of a finite abelian group, as a coordinate vector against the
/// group's cyclic factors. The same representation serves the Pontryagin
/// dual under the standard self-duality.
using GroupElement = std::vector<int>;
using DualElement = std::vector<int>;

/// An L-th root of unity stored as its exact exponent k mod L
/// (value = exp(2*pi*i*k/L)). Products add exponents, conjugation negates.
struct RootOfUnity {
    int exponent = 0;
    int modulus = 1;

    RootOfUnity() = default;
    RootOfUnity(int k, int L) : exponent(((k % L) + L) % L), modulus(L) {}

    RootOfUnity operator*(const RootOfUnity& o) const {
        return RootOfUnity(exponent + o.exponent, modulus);
    }
    RootOfUnity conj() const { return RootOfUnity(-exponent, modulus); }
    std::complex<double> value() const;
    /// Exact +1/-1 for exponent-2 data; throws otherwise.
    std::int64_t sign_value() const;
    bool operator==(const RootOfUnity& o) const = default;
};

/// A finite abelian group given as a product of cyclic factors Z_{n_1} x ... x Z_{n_k}.
/// Elements are enumerated lexicographically in coordinates; index 0 is the zero
/// element. Factor order is significant: Z2xZ4 and Z4xZ2 are distinct specs.
class GroupSpec {
public:
    explicit GroupSpec(std::vector<int> factors);

    /// Parse "Z2^4", "Z4xZ4", "Z2^2xZ4" (case-insensitive).
    static GroupSpec parse(std::string_view text);

    const std::vector<int>& factors() const { return factors_; }
    int num_factors() const { return static_cast<int>(factors_.size()); }
    long long order() const { return order_; }
    int exponent() const { return exponent_; }
    bool is_exponent_two() const { return exponent_ <= 2; }

    GroupElement coords_of(long long index) const;
    long long index_of(const GroupElement& coords) const;
    long long add(long long a, long long b) const;
    long long negate(long long a) const;

    std::string element_literal(long long index) const;
    long long parse_element(std::string_view text) const;

    /// "Z2^2xZ4"-style canonical rendering of the factor list as given.
    std::string to_string() const;

    bool operator==(const GroupSpec& o) const { return factors_ == o.factors_; }

private:
    std::vector<int> factors_;
    std::vector<long long> strides_;
    long long order_ = 1;
    int exponent_ = 1;
};

/// Total lexicographic enumeration of the group's elements.
std::vector<GroupElement> enumerate(const GroupSpec& group);

/// A biadditive pairing G x G -> Z_L identifying the group with its dual:
/// exponent(x, y) = sum_{j,l} x_j * m[j][l] * y_l mod L. The standard pairing
/// has m = diag(L/n_j); the symplectic pairing (exponent-2 groups of even
/// coordinate count) has the block-diagonal [0 1; 1 0] form.
class PairingForm {
public:
    static PairingForm standard(const GroupSpec& group);
    static PairingForm symplectic(const GroupSpec& group);
    static PairingForm from_matrix(const GroupSpec& group, std::vector<std::vector<int>> m,
                                   std::string name = "custom");

    int exponent(const GroupSpec& group, long long x_index, long long y_index) const;
    int exponent_coords(const GroupSpec& group, const GroupElement& x, const GroupElement& y) const;

    PairingForm transposed() const;
    bool is_standard() const { return standard_; }
    const std::vector<std::vector<int>>& matrix() const { return m_; }
    std::string name() const { return name_; }

private:
    PairingForm() = default;
    std::vector<std::vector<int>> m_;
    int modulus_ = 1;
    bool standard_ = true;
    std::string name_ = "standard";
};

/// Value of the character indexed by y at the element x under the standard pairing.
RootOfUnity character_value(const GroupSpec& group, const DualElement& y, const GroupElement& x);

/// N x N character table Gamma(x, y) = (character y)(x); integer +/-1 entries for
/// exponent-2 groups, complex entries otherwise. A supplied bicharacter must be
/// nondegenerate (the row map must be injective) or the call throws.
ExactMatrix character_table(const GroupSpec& group,
                            const std::optional<PairingForm>& bicharacter = std::nullopt);

/// Analysis DFT over the group (standard duality): (Gamma^* x).
std::vector<std::complex<double>> dft(const GroupSpec& group,
                                      const std::vector<std::complex<double>>& x);
/// Exact integer DFT for exponent-2 groups.
std::vector<std::int64_t> dft_exact(const GroupSpec& group, const std::vector<std::int64_t>& x);

std::vector<std::complex<double>> convolve(const GroupSpec& group,
                                           const std::vector<std::complex<double>>& x1,
                                           const std::vector<std::complex<double>>& x2);
std::vector<std::int64_t> convolve_exact(const GroupSpec& group,
                                         const std::vector<std::int64_t>& x1,
                                         const std::vector<std::int64_t>& x2);

std::vector<std::complex<double>> involute(const GroupSpec& group,
                                           const std::vector<std::complex<double>>& x);
std::vector<std::int64_t> involute_exact(const GroupSpec& group,
                                         const std::vector<std::int64_t>& x);

}  // namespace ectff
