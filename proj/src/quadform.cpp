#include "ectff/quadform.hpp"

#include <stdexcept>

namespace ectff {

BinaryQuadraticForm::BinaryQuadraticForm(int dimension, std::vector<std::vector<int>> upper)
    : dim_(dimension), u_(std::move(upper)) {
    if (dim_ < 1) throw std::invalid_argument("quadratic form needs positive dimension");
    if (static_cast<int>(u_.size()) != dim_)
        throw std::invalid_argument("coefficient matrix size mismatch");
    for (int i = 0; i < dim_; ++i) {
        if (static_cast<int>(u_[i].size()) != dim_)
            throw std::invalid_argument("coefficient matrix is not square");
        for (int j = 0; j < dim_; ++j) {
            u_[i][j] &= 1;
            if (j < i && u_[i][j] != 0)
                throw std::invalid_argument("coefficient matrix must be upper-triangular");
        }
    }
}

BinaryQuadraticForm BinaryQuadraticForm::zero(int dimension) {
    return BinaryQuadraticForm(dimension,
                               std::vector<std::vector<int>>(dimension, std::vector<int>(dimension, 0)));
}

BinaryQuadraticForm BinaryQuadraticForm::canonical_hyperbolic(int m) {
    if (m < 1) throw std::invalid_argument("canonical forms need M >= 1");
    int n = 2 * m;
    std::vector<std::vector<int>> u(n, std::vector<int>(n, 0));
    for (int k = 0; k < m; ++k) u[2 * k][2 * k + 1] = 1;  // x_{2k-1} x_{2k}
    return BinaryQuadraticForm(n, std::move(u));
}

BinaryQuadraticForm BinaryQuadraticForm::canonical_elliptic(int m) {
    BinaryQuadraticForm q = canonical_hyperbolic(m);
    auto u = q.upper();
    int n = 2 * m;
    u[n - 2][n - 2] ^= 1;  // + x_{2M-1}^2
    u[n - 1][n - 1] ^= 1;  // + x_{2M}^2
    return BinaryQuadraticForm(n, std::move(u));
}

int BinaryQuadraticForm::evaluate(const GroupElement& x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("element dimension mismatch");
    int acc = 0;
    for (int i = 0; i < dim_; ++i) {
        if (!(x[i] & 1)) continue;
        for (int j = i; j < dim_; ++j) acc ^= u_[i][j] & (x[j] & 1);
    }
    return acc;
}

BinaryQuadraticForm BinaryQuadraticForm::shifted(const GroupElement& v0) const {
    if (static_cast<int>(v0.size()) != dim_)
        throw std::invalid_argument("shift vector dimension mismatch");
    auto u = u_;
    for (int i = 0; i < dim_; ++i) {
        int lin = 0;  // B(e_i, v0) = sum_j (U + U^T)[i][j] v0[j]
        for (int j = 0; j < dim_; ++j) {
            int bij = (j >= i ? u_[i][j] : 0) ^ (j <= i ? u_[j][i] : 0);
            if (i == j) bij = 0;
            lin ^= bij & (v0[j] & 1);
        }
        u[i][i] ^= lin;
    }
    return BinaryQuadraticForm(dim_, std::move(u));
}

BinarySymplecticForm::BinarySymplecticForm(int dimension, std::vector<std::vector<int>> gram)
    : dim_(dimension), b_(std::move(gram)) {
    if (static_cast<int>(b_.size()) != dim_)
        throw std::invalid_argument("symplectic Gram size mismatch");
    for (int i = 0; i < dim_; ++i) {
        if (static_cast<int>(b_[i].size()) != dim_)
            throw std::invalid_argument("symplectic Gram is not square");
        for (int j = 0; j < dim_; ++j) b_[i][j] &= 1;
        if (b_[i][i] != 0) throw std::invalid_argument("symplectic form must be alternating");
        for (int j = 0; j < i; ++j)
            if (b_[i][j] != b_[j][i]) throw std::invalid_argument("symplectic form must be symmetric");
    }
}

BinarySymplecticForm BinarySymplecticForm::canonical(int m) {
    if (m < 1) throw std::invalid_argument("canonical forms need M >= 1");
    int n = 2 * m;
    std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
    for (int k = 0; k < m; ++k) {
        b[2 * k][2 * k + 1] = 1;
        b[2 * k + 1][2 * k] = 1;
    }
    return BinarySymplecticForm(n, std::move(b));
}

bool BinarySymplecticForm::nondegenerate() const {
    auto m = b_;
    int rank = 0;
    for (int c = 0; c < dim_; ++c) {
        int pivot = -1;
        for (int r = rank; r < dim_; ++r)
            if (m[r][c]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        for (int r = 0; r < dim_; ++r)
            if (r != rank && m[r][c])
                for (int cc = 0; cc < dim_; ++cc) m[r][cc] ^= m[rank][cc];
        ++rank;
    }
    return rank == dim_;
}

int BinarySymplecticForm::evaluate(const GroupElement& x, const GroupElement& y) const {
    int acc = 0;
    for (int i = 0; i < dim_; ++i) {
        if (!(x[i] & 1)) continue;
        for (int j = 0; j < dim_; ++j) acc ^= b_[i][j] & (y[j] & 1);
    }
    return acc;
}

PairingForm BinarySymplecticForm::pairing(const GroupSpec& group) const {
    if (group.num_factors() != dim_ || !group.is_exponent_two())
        throw std::invalid_argument("pairing needs the matching Z_2^{2M} group");
    bool canonical = dim_ % 2 == 0 && *this == BinarySymplecticForm::canonical(dim_ / 2);
    return PairingForm::from_matrix(group, b_, canonical ? "symplectic" : "custom");
}

PolarizeResult polarize(const BinaryQuadraticForm& q) {
    int n = q.dimension();
    std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
    const auto& u = q.upper();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) b[i][j] = (j > i ? u[i][j] : u[j][i]) & 1;
    BinarySymplecticForm form(n, std::move(b));
    return PolarizeResult{form, form.nondegenerate()};
}

GroupSpec quadform_group(const BinaryQuadraticForm& q) {
    return GroupSpec(std::vector<int>(static_cast<std::size_t>(q.dimension()), 2));
}

int sign_of(const BinaryQuadraticForm& q) {
    if (q.dimension() % 2 != 0)
        throw std::invalid_argument("sign is defined for even-dimensional forms");
    int m = q.dimension() / 2;
    GroupSpec g = quadform_group(q);
    std::int64_t gauss = 0;
    for (long long v = 0; v < g.order(); ++v)
        gauss += q.evaluate(g.coords_of(v)) == 0 ? 1 : -1;
    std::int64_t denom = 1LL << m;
    if (gauss != denom && gauss != -denom)
        throw std::invalid_argument("Gauss sum is not +/-2^M: the form is defective");
    return gauss > 0 ? 1 : -1;
}

GroupSubset quadric(const BinaryQuadraticForm& q) {
    GroupSpec g = quadform_group(q);
    std::vector<long long> idx;
    for (long long v = 0; v < g.order(); ++v)
        if (q.evaluate(g.coords_of(v)) == 0) idx.push_back(v);
    return GroupSubset(g, std::move(idx));
}

ChirpBundle chirp_bundle(const BinaryQuadraticForm& q, const ChirpOptions& options) {
    if (q.dimension() % 2 != 0) throw std::invalid_argument("chirp bundle needs dimension 2M");
    int m = q.dimension() / 2;
    if (m > options.max_m)
        throw std::invalid_argument("M exceeds the memory guard; raise max_m to override");
    PolarizeResult pol = polarize(q);
    if (!pol.nondefective) throw std::invalid_argument("chirp bundle needs a nondefective form");

    GroupSpec g = quadform_group(q);
    std::size_t n = static_cast<std::size_t>(g.order());
    std::vector<GroupElement> coords = enumerate(g);

    ChirpBundle bundle;
    bundle.m = m;
    bundle.sign = sign_of(q);
    bundle.chirp.resize(n);
    std::vector<int> qv(n);
    for (std::size_t v = 0; v < n; ++v) {
        qv[v] = q.evaluate(coords[v]);
        bundle.chirp[v] = qv[v] == 0 ? 1 : -1;
    }
    bundle.gamma = ExactMatrix::integer(n, n);
    bundle.c = ExactMatrix::integer(n, n);
    bundle.delta = ExactMatrix::integer(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        bundle.delta.at_int(i, i) = bundle.chirp[i];
        for (std::size_t j = 0; j < n; ++j) {
            bundle.gamma.at_int(i, j) = pol.form.evaluate(coords[i], coords[j]) == 0 ? 1 : -1;
            long long sum = g.add(static_cast<long long>(i), static_cast<long long>(j));
            bundle.c.at_int(i, j) = bundle.chirp[static_cast<std::size_t>(sum)];
        }
    }

    std::int64_t big_n = static_cast<std::int64_t>(n);
    ExactMatrix eye = ExactMatrix::identity(n, MatrixKind::Integer);
    if (!bundle.gamma.multiply(bundle.gamma).equals(eye.scaled_int(big_n)))
        throw std::logic_error("chirp identity Gamma^2 = 2^{2M} I failed");
    if (!bundle.c.multiply(bundle.c).equals(eye.scaled_int(big_n)))
        throw std::logic_error("chirp identity C^2 = 2^{2M} I failed");
    if (!bundle.delta.multiply(bundle.delta).equals(eye))
        throw std::logic_error("chirp identity Delta^2 = I failed");
    if (!bundle.delta.multiply(bundle.c).multiply(bundle.delta).equals(bundle.gamma))
        throw std::logic_error("chirp identity Gamma = Delta C Delta failed");
    bool do_cubic = options.verify_cubic && (m <= 4 || options.force_cubic);
    if (do_cubic) {
        ExactMatrix gd = bundle.gamma.multiply(bundle.delta);
        ExactMatrix cubed = gd.multiply(gd).multiply(gd);
        std::int64_t scale = bundle.sign * (1LL << (3 * m));
        if (!cubed.equals(eye.scaled_int(scale)))
            throw std::logic_error("chirp identity (Gamma Delta)^3 = 2^{3M} sgn(Q) I failed");
        bundle.cubic_verified = true;
    }
    return bundle;
}

std::string to_string(QuadKind kind) {
    return kind == QuadKind::Hyperbolic ? "hyperbolic" : "elliptic";
}

QuadKind quad_kind_from_string(const std::string& s) {
    if (s == "hyperbolic") return QuadKind::Hyperbolic;
    if (s == "elliptic") return QuadKind::Elliptic;
    throw std::invalid_argument("quadratic form kind must be hyperbolic or elliptic");
}

InfiniteFamilyBundle build_infinite_family(int m, QuadKind kind, const BundleOptions& options) {
    if (m < 1) throw std::invalid_argument("infinite family needs M >= 1");
    const Tolerance& tol = options.tol;
    BinaryQuadraticForm q = kind == QuadKind::Hyperbolic
                                ? BinaryQuadraticForm::canonical_hyperbolic(m)
                                : BinaryQuadraticForm::canonical_elliptic(m);
    PolarizeResult pol = polarize(q);
    if (!pol.nondefective) throw std::logic_error("canonical form polarized to a degenerate form");

    InfiniteFamilyBundle bundle;
    bundle.m = m;
    bundle.kind = kind;
    bundle.sign = sign_of(q);

    GroupSpec g = quadform_group(q);
    PairingForm form = pol.form.pairing(g);
    GroupSubset d_set = quadric(q);
    GroupSubset e_set = d_set.complement();
    bundle.quadric_cert = is_difference_set(d_set, tol);
    bundle.complement_cert = is_difference_set(e_set, tol);
    if (!bundle.quadric_cert.verdict || !bundle.complement_cert.verdict)
        throw std::logic_error("quadric failed difference-set certification");

    PairedDSCandidate candidate(g, form, d_set, e_set, tol);
    bundle.pds = is_paired_gram(candidate, tol);
    bundle.charsum = is_paired_charsum(candidate, tol);
    if (!bundle.pds.verdict || !bundle.charsum.verdict)
        throw std::logic_error("quadric pair failed certification");

    CertifyOptions copt;
    copt.with_angles = options.with_angles;

    bundle.etf_a = certify_frame(harmonic_synthesis(g, d_set, std::nullopt, form), tol);
    bundle.etf_d = certify_frame(harmonic_synthesis(g, e_set, std::nullopt, form), tol);

    SubspaceFamily fam_c = ectff_from_pds(candidate, tol);
    bundle.sub_etf_b = certify_frame(SynthesisMatrix{fam_c.synthesis(0), d_set.size(),
                                                     e_set.size()},
                                     tol);
    ExactMatrix gram_b = fam_c.synthesis(0).adjoint().multiply(fam_c.synthesis(0));
    bundle.sub_b_gram_invariant = true;
    for (std::size_t i = 1; i < fam_c.count(); ++i) {
        ExactMatrix gi = fam_c.synthesis(i).adjoint().multiply(fam_c.synthesis(i));
        if (!gi.equals(gram_b)) bundle.sub_b_gram_invariant = false;
    }
    bundle.ectff_c = certify_ectff(fam_c, tol, copt);

    PairedDSCandidate transposed = symmetry_transpose(candidate);
    SubspaceFamily fam_f = ectff_from_pds(transposed, tol);
    bundle.sub_etf_e = certify_frame(SynthesisMatrix{fam_f.synthesis(0), e_set.size(),
                                                     d_set.size()},
                                     tol);
    ExactMatrix gram_e = fam_f.synthesis(0).adjoint().multiply(fam_f.synthesis(0));
    bundle.sub_e_gram_invariant = true;
    for (std::size_t i = 1; i < fam_f.count(); ++i) {
        ExactMatrix gi = fam_f.synthesis(i).adjoint().multiply(fam_f.synthesis(i));
        if (!gi.equals(gram_e)) bundle.sub_e_gram_invariant = false;
    }
    bundle.ectff_f = certify_ectff(fam_f, tol, copt);
    return bundle;
}

}  // namespace ectff
