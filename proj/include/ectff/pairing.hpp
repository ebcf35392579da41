#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "ectff/diffset.hpp"
#include "ectff/frames.hpp"
#include "ectff/linalg.hpp"

namespace ectff {

/// A candidate pairing: a difference set D of the group, a difference set E of
/// the dual (both certified at construction), and the duality identification.
class PairedDSCandidate {
public:
    PairedDSCandidate(GroupSpec group, PairingForm bicharacter, GroupSubset d_set,
                      GroupSubset e_set, const Tolerance& tol = {});

    const GroupSpec& group() const { return group_; }
    const PairingForm& bicharacter() const { return form_; }
    const GroupSubset& d_set() const { return d_; }
    const GroupSubset& e_set() const { return e_; }
    bool trivial() const;  // singleton or whole-group on either side

    /// The (D x E)-indexed submatrix of the character table.
    SynthesisMatrix restricted_synthesis() const;

private:
    GroupSpec group_;
    PairingForm form_;
    GroupSubset d_;
    GroupSubset e_;
};

struct PairedDSCertificate {
    bool verdict = false;
    Rational rank_value;        // R from the closed form (may be non-integral => not paired)
    std::size_t gram_rank = 0;  // measured rank of the restricted Gram
    Rational tight_constant;    // A = DE/R
    double idempotency_residual = 0.0;
    bool necessary_check = false;  // D+E <= N
    bool trivial = false;
    bool exact = false;
    // candidate echo for reports
    std::string group_name;
    std::string bicharacter_name;
    std::string d_literal;
    std::string e_literal;
};

struct CharsumResult {
    bool verdict = false;
    std::complex<double> constant;             // the common value (conj(A)) when constant
    std::vector<std::complex<double>> profile;  // one entry per (eps, d), eps-major
    bool exact = false;
};

/// R = DE(N-1)/((D+E-1)N - DE), exact rational. Throws on zero denominator.
Rational rank_formula(std::int64_t d, std::int64_t e, std::int64_t n);

/// Gram-idempotency criterion: G = Phi^* Phi with Phi the (D x E) submatrix;
/// paired iff G^2 = (DE/R) G (exact on exponent-2 groups) and rank(G) = R.
PairedDSCertificate is_paired_gram(const PairedDSCandidate& candidate, const Tolerance& tol = {});

/// Character-sum criterion: sum over (D-d) x (eps^{-1} E) of eps'(d') must be
/// constant over all (d, eps) in D x E; the constant equals conj(A).
CharsumResult is_paired_charsum(const PairedDSCandidate& candidate, const Tolerance& tol = {});

/// Necessary condition D+E <= N for paired difference sets with D != G, E != dual.
bool check_necessary(const PairedDSCandidate& candidate);

struct ComplementPairResult {
    PairedDSCandidate candidate;
    bool verdict = false;  // paired iff D+E = N, cross-checked by the Gram test
};

/// Complements (D^c, E^c); requires a certified nontrivial input pairing.
ComplementPairResult complement_pair(const PairedDSCandidate& candidate,
                                     const Tolerance& tol = {});

/// Swap the roles of D and E through the double-dual identification.
PairedDSCandidate symmetry_transpose(const PairedDSCandidate& candidate);

}  // namespace ectff
