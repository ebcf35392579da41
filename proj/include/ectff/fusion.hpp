#pragma once

#include <optional>
#include <vector>

#include "ectff/linalg.hpp"
#include "ectff/pairing.hpp"
#include "ectff/rational.hpp"

namespace ectff {

struct PackingBounds {
    Rational simplex2;   // squared simplex bound R(D-R)N/(D(N-1))
    Rational orthoplex2; // squared orthoplex bound R(D-R)/D
    double simplex = 0.0;
    double orthoplex = 0.0;
    std::int64_t gerzon_r = 0;  // (D-1)(D+2)/2 + 1
    std::int64_t gerzon_c = 0;  // D^2
};

/// N equal-dimensional subspaces of a D-dimensional space. Projections are kept
/// as P_n = proj_scale * proj_mats[n]; integer matrices with a rational scale on
/// exponent-2 data keep every certificate identity exact.
class SubspaceFamily {
public:
    static SubspaceFamily from_scaled_projections(std::size_t ambient, int rank,
                                                  std::vector<ExactMatrix> mats, Rational scale,
                                                  std::vector<ExactMatrix> synthesis = {});
    static SubspaceFamily from_projections(std::vector<ExactMatrix> projections,
                                           const Tolerance& tol = {});

    std::size_t ambient() const { return ambient_; }
    std::size_t count() const { return mats_.size(); }
    int rank() const { return rank_; }
    bool exact() const { return exact_; }
    const Rational& proj_scale() const { return scale_; }
    const ExactMatrix& proj_mat(std::size_t i) const { return mats_[i]; }
    ExactMatrix projection(std::size_t i) const;  // complex P_n
    bool has_synthesis() const { return !synthesis_.empty(); }
    const ExactMatrix& synthesis(std::size_t i) const { return synthesis_[i]; }

    /// D x R matrix with orthonormal columns spanning subspace i (cached).
    const ExactMatrix& onb(std::size_t i, const Tolerance& tol = {}) const;

private:
    std::size_t ambient_ = 0;
    int rank_ = 0;
    bool exact_ = false;
    Rational scale_ = Rational(1);
    std::vector<ExactMatrix> mats_;
    std::vector<ExactMatrix> synthesis_;
    mutable std::vector<ExactMatrix> onb_cache_;
};

struct EctffCertificate {
    bool tight = false;
    Rational tight_constant;      // NR/D
    double tight_residual = 0.0;
    bool equichordal = false;
    Rational common_trace;        // common Tr(P_i P_j) (exact path)
    double common_trace_value = 0.0;
    double max_trace_deviation = 0.0;
    Rational theoretical_trace;   // R(NR-D)/(D(N-1))
    bool matches_theoretical = false;
    double min_chordal_distance = 0.0;
    PackingBounds bounds;
    bool meets_simplex = false;
    std::optional<bool> equiisoclinic;
    double sigma = 0.0;
    std::vector<std::vector<double>> angle_spectra;  // per pair i<j when computed
    bool is_ectff = false;
    std::size_t ambient = 0;
    std::size_t count = 0;
    int rank = 0;
    bool exact = false;
};

PackingBounds bounds(std::int64_t d, std::int64_t n, std::int64_t r);

/// Build the fusion frame of a certified pairing: subspace gamma is spanned by
/// the gamma-modulated characters restricted to D, with projections
/// (R/DE) Phi_gamma Phi_gamma^*. Throws when the candidate fails the Gram test.
SubspaceFamily ectff_from_pds(const PairedDSCandidate& candidate, const Tolerance& tol = {});

struct CertifyOptions {
    bool with_angles = true;  // principal-angle spectra and the equi-isoclinic flag
};

EctffCertificate certify_ectff(const SubspaceFamily& family, const Tolerance& tol = {},
                               const CertifyOptions& options = {});

/// Descending cosines of the principal angles between subspaces i and j.
std::vector<double> principal_angles(const SubspaceFamily& family, std::size_t i, std::size_t j,
                                     const Tolerance& tol = {});

struct EquiisoclinicResult {
    bool verdict = false;
    double sigma = 0.0;
};
EquiisoclinicResult check_equiisoclinic(const SubspaceFamily& family, const Tolerance& tol = {});

/// Orthogonal complements; chordal distances are preserved pairwise.
SubspaceFamily spatial_complement(const SubspaceFamily& family);

/// Naimark complement of the concatenated subspace ONBs, regrouped; maps an
/// ECTFF(D,N,R) with D < NR to an ECTFF(NR-D,N,R).
SubspaceFamily naimark_fusion(const SubspaceFamily& family, const Tolerance& tol = {});

}  // namespace ectff
