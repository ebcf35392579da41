#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ectff/diffset.hpp"
#include "ectff/linalg.hpp"
#include "ectff/rational.hpp"

namespace ectff {

/// Synthesis operator of a vector sequence: rows index the ambient space, one
/// column per vector.
struct SynthesisMatrix {
    ExactMatrix mat;
    std::size_t ambient_dim = 0;
    std::size_t vector_count = 0;
};

struct FrameCertificate {
    bool tight = false;
    Rational tight_constant;        // A with Phi Phi^* Phi = A Phi (exact when integral data)
    double tight_constant_value = 0.0;
    bool equal_norm = false;
    Rational norm2;                 // common squared norm when equal-norm (exact path)
    double norm2_value = 0.0;
    bool equiangular = false;
    double inner_modulus = 0.0;     // common |<phi_i, phi_j>| when equiangular
    double coherence = 0.0;
    double welch_bound = 0.0;
    bool is_etf = false;
    std::size_t rank = 0;           // span dimension; Welch bound is span-relative
    std::size_t ambient = 0;
    std::size_t count = 0;
    bool exact = false;             // identities verified in integer arithmetic
    double max_residual = 0.0;
};

struct SrgCertificate {
    std::int64_t v = 0;
    std::int64_t k = 0;
    std::int64_t lambda_graph = 0;
    std::int64_t u = 0;
    ExactMatrix adjacency;
    std::int64_t identity_residual = 0;  // max |A^2 - (Λ-U)A - (K-U)I - UJ| entry
    bool degenerate = false;             // complete graph / single vertex
};

/// Harmonic synthesis: rows restricted to `rows`, one column per dual element in
/// `cols` (all of the dual when omitted), entry (d, gamma) = gamma(d) under the
/// given identification (standard pairing when omitted).
SynthesisMatrix harmonic_synthesis(const GroupSpec& group, const GroupSubset& rows,
                                   const std::optional<GroupSubset>& cols = std::nullopt,
                                   const std::optional<PairingForm>& bicharacter = std::nullopt);

/// Same, but with the columns in exactly the order given (used where a shifted
/// index set must stay aligned with its unshifted counterpart).
SynthesisMatrix harmonic_synthesis_ordered(const GroupSpec& group, const GroupSubset& rows,
                                           const std::vector<long long>& cols,
                                           const std::optional<PairingForm>& bicharacter);

/// Certify tightness (for the span), equal norms, equiangularity, coherence and
/// the span-relative Welch bound; is_etf requires the coherence and Welch routes
/// to agree.
FrameCertificate certify_frame(const SynthesisMatrix& phi, const Tolerance& tol = {});

/// Naimark complement on the Gram side: A*I - G. Requires G tight for its span
/// (G^2 = A G) with rank < N.
ExactMatrix naimark_complement_gram(const ExactMatrix& gram, const Rational& a,
                                    const Tolerance& tol = {});

/// Real axial ETF -> strongly regular graph on all N vertices; adjacency is
/// positivity of the inner product, K and U from the axial closed forms.
SrgCertificate etf_to_srg_axial(const SynthesisMatrix& phi, const Tolerance& tol = {});

/// Real ETF -> SRG on N-1 vertices after sign-normalizing against a pivot
/// column; K = 2U closed form. Throws when some inner product against the pivot
/// is zero.
SrgCertificate etf_to_srg_punctured(const SynthesisMatrix& phi, std::size_t pivot,
                                    const Tolerance& tol = {});

}  // namespace ectff
