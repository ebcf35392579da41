#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ectff/abelian.hpp"
#include "ectff/diffset.hpp"
#include "ectff/frames.hpp"
#include "ectff/fusion.hpp"
#include "ectff/pairing.hpp"

namespace ectff {

/// Quadratic form Q(x) = x^T U x over F_2 with U upper-triangular; diagonal
/// entries carry the square terms (x_j^2 = x_j over F_2).
class BinaryQuadraticForm {
public:
    BinaryQuadraticForm(int dimension, std::vector<std::vector<int>> upper);

    static BinaryQuadraticForm zero(int dimension);
    static BinaryQuadraticForm canonical_hyperbolic(int m);
    static BinaryQuadraticForm canonical_elliptic(int m);

    int dimension() const { return dim_; }
    const std::vector<std::vector<int>>& upper() const { return u_; }
    int evaluate(const GroupElement& x) const;
    /// Q~(v) = Q(v + v0) + Q(v0); the linear term folds into the diagonal since
    /// v_j = v_j^2 over F_2, so the result is again upper-triangular.
    BinaryQuadraticForm shifted(const GroupElement& v0) const;

private:
    int dim_;
    std::vector<std::vector<int>> u_;
};

/// Symplectic (nondegenerate alternating) bilinear form as a binary Gram matrix.
class BinarySymplecticForm {
public:
    BinarySymplecticForm(int dimension, std::vector<std::vector<int>> gram);
    static BinarySymplecticForm canonical(int m);

    int dimension() const { return dim_; }
    const std::vector<std::vector<int>>& gram() const { return b_; }
    bool nondegenerate() const;
    int evaluate(const GroupElement& x, const GroupElement& y) const;
    PairingForm pairing(const GroupSpec& group) const;
    bool operator==(const BinarySymplecticForm& o) const {
        return dim_ == o.dim_ && b_ == o.b_;
    }

private:
    int dim_;
    std::vector<std::vector<int>> b_;
};

struct PolarizeResult {
    BinarySymplecticForm form;
    bool nondefective = false;
};

/// B(x,y) = Q(x+y)+Q(x)+Q(y), i.e. U + U^T; nondefective iff invertible over F_2.
PolarizeResult polarize(const BinaryQuadraticForm& q);

/// Gauss sum 2^{-M} sum (-1)^{Q(v)}; exactly +1 or -1 for nondefective forms,
/// throws otherwise.
int sign_of(const BinaryQuadraticForm& q);

/// The group Z_2^{2M} the form lives on.
GroupSpec quadform_group(const BinaryQuadraticForm& q);

/// All singular points {v : Q(v) = 0}.
GroupSubset quadric(const BinaryQuadraticForm& q);

/// The chirp matrices of a nondefective form, all identities verified exactly:
/// Gamma^2 = 2^{2M} I = C^2, Delta^2 = I, Gamma = Delta C Delta,
/// (Gamma Delta)^3 = 2^{3M} sgn(Q) I.
struct ChirpBundle {
    int m = 0;
    int sign = 0;
    ExactMatrix gamma;
    ExactMatrix c;
    ExactMatrix delta;
    std::vector<std::int64_t> chirp;  // c(v) = (-1)^{Q(v)} in lexicographic order
    bool cubic_verified = false;
};

struct ChirpOptions {
    int max_m = 5;             // memory guard
    bool verify_cubic = true;  // above M=4 the cubic check runs only when forced
    bool force_cubic = false;
};

ChirpBundle chirp_bundle(const BinaryQuadraticForm& q, const ChirpOptions& options = {});

enum class QuadKind { Hyperbolic, Elliptic };

/// Everything the canonical form of one sign yields: the paired difference sets,
/// both harmonic ETFs, representative sub-ETFs with the translation-invariance
/// check, and both fusion frames.
struct InfiniteFamilyBundle {
    int m = 0;
    QuadKind kind = QuadKind::Hyperbolic;
    int sign = 0;
    DifferenceSetCertificate quadric_cert;
    DifferenceSetCertificate complement_cert;
    PairedDSCertificate pds;
    CharsumResult charsum;
    FrameCertificate etf_a;
    FrameCertificate sub_etf_b;
    EctffCertificate ectff_c;
    FrameCertificate etf_d;
    FrameCertificate sub_etf_e;
    EctffCertificate ectff_f;
    bool sub_b_gram_invariant = false;
    bool sub_e_gram_invariant = false;
};

struct BundleOptions {
    bool with_angles = false;  // principal-angle spectra on the fusion certificates
    Tolerance tol;
};

InfiniteFamilyBundle build_infinite_family(int m, QuadKind kind, const BundleOptions& options = {});

std::string to_string(QuadKind kind);
QuadKind quad_kind_from_string(const std::string& s);

}  // namespace ectff
