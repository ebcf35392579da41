#include "ectff/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ectff/parallel.hpp"

namespace ectff {

namespace {

// Modified Gram-Schmidt with one reorthogonalization pass; rank cut at
// tol.rel * (largest column norm).
ExactMatrix orthonormalize(const ExactMatrix& synth, const Tolerance& tol) {
    std::size_t rows = synth.rows(), cols = synth.cols();
    ExactMatrix m = synth.to_complex();
    double max_norm = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        double nn = 0;
        for (std::size_t r = 0; r < rows; ++r) nn += std::norm(m.at(r, c));
        max_norm = std::max(max_norm, std::sqrt(nn));
    }
    double cut = tol.abs + tol.rel * max_norm;
    std::vector<std::vector<std::complex<double>>> q;
    for (std::size_t c = 0; c < cols; ++c) {
        std::vector<std::complex<double>> v(rows);
        for (std::size_t r = 0; r < rows; ++r) v[r] = m.at(r, c);
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& col : q) {
                std::complex<double> ip = 0;
                for (std::size_t r = 0; r < rows; ++r) ip += std::conj(col[r]) * v[r];
                for (std::size_t r = 0; r < rows; ++r) v[r] -= ip * col[r];
            }
        }
        double nn = 0;
        for (std::size_t r = 0; r < rows; ++r) nn += std::norm(v[r]);
        nn = std::sqrt(nn);
        if (nn > cut) {
            for (std::size_t r = 0; r < rows; ++r) v[r] /= nn;
            q.push_back(std::move(v));
        }
    }
    ExactMatrix out = ExactMatrix::complex(rows, q.size());
    for (std::size_t c = 0; c < q.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) out.at_complex(r, c) = q[c][r];
    return out;
}

Rational trace_product_scaled(const ExactMatrix& a, const ExactMatrix& b, const Rational& scale) {
    // Tr(P_i P_j) = scale^2 * sum_{r,c} a(r,c) * b(c,r), exact for integer mats.
    __int128 acc = 0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            acc += static_cast<__int128>(a.at_int(r, c)) * b.at_int(c, r);
    return Rational(checked_narrow(acc, "trace product overflow")) * scale * scale;
}

double trace_product_value(const ExactMatrix& pa, const ExactMatrix& pb) {
    std::complex<double> acc = 0;
    for (std::size_t r = 0; r < pa.rows(); ++r)
        for (std::size_t c = 0; c < pa.cols(); ++c) acc += pa.at(r, c) * pb.at(c, r);
    return acc.real();
}

}  // namespace

PackingBounds bounds(std::int64_t d, std::int64_t n, std::int64_t r) {
    if (r < 1 || r > d || n < 2) throw std::invalid_argument("bounds need 1 <= R <= D, N >= 2");
    PackingBounds b;
    b.simplex2 = Rational(checked_mul(checked_mul(r, d - r), n), checked_mul(d, n - 1));
    b.orthoplex2 = Rational(checked_mul(r, d - r), d);
    b.simplex = std::sqrt(b.simplex2.as_double());
    b.orthoplex = std::sqrt(b.orthoplex2.as_double());
    b.gerzon_r = (d - 1) * (d + 2) / 2 + 1;
    b.gerzon_c = d * d;
    return b;
}

SubspaceFamily SubspaceFamily::from_scaled_projections(std::size_t ambient, int rank,
                                                       std::vector<ExactMatrix> mats,
                                                       Rational scale,
                                                       std::vector<ExactMatrix> synthesis) {
    SubspaceFamily f;
    f.ambient_ = ambient;
    f.rank_ = rank;
    f.scale_ = scale;
    f.mats_ = std::move(mats);
    f.synthesis_ = std::move(synthesis);
    f.exact_ = true;
    for (const auto& m : f.mats_)
        if (!m.is_integer()) f.exact_ = false;
    f.onb_cache_.resize(f.mats_.size());
    return f;
}

SubspaceFamily SubspaceFamily::from_projections(std::vector<ExactMatrix> projections,
                                                const Tolerance& tol) {
    if (projections.empty()) throw std::invalid_argument("family needs at least one subspace");
    std::size_t n = projections.front().rows();
    int rank = -1;
    for (const auto& p : projections) {
        if (p.rows() != n || p.cols() != n) throw std::invalid_argument("projection shape mismatch");
        if (!p.is_self_adjoint(tol)) throw std::invalid_argument("projection is not self-adjoint");
        ExactMatrix resid = p.to_complex().multiply(p.to_complex()).sub(p.to_complex());
        if (resid.frobenius_norm() > tol.abs + tol.rel * std::max(1.0, p.frobenius_norm()))
            throw std::invalid_argument("matrix is not idempotent");
        int r = static_cast<int>(std::llround(p.trace().real()));
        if (rank < 0) rank = r;
        if (r != rank) throw std::invalid_argument("subspace dimensions differ");
    }
    SubspaceFamily f;
    f.ambient_ = n;
    f.rank_ = rank;
    f.scale_ = Rational(1);
    f.mats_ = std::move(projections);
    f.exact_ = true;
    for (const auto& m : f.mats_)
        if (!m.is_integer()) f.exact_ = false;
    f.onb_cache_.resize(f.mats_.size());
    return f;
}

ExactMatrix SubspaceFamily::projection(std::size_t i) const {
    return mats_[i].to_complex().scaled(scale_.as_double());
}

const ExactMatrix& SubspaceFamily::onb(std::size_t i, const Tolerance& tol) const {
    if (onb_cache_[i].rows() != 0) return onb_cache_[i];
    ExactMatrix q = has_synthesis() ? orthonormalize(synthesis_[i], tol)
                                    : orthonormalize(spectral_factor(projection(i), tol).adjoint(), tol);
    if (q.cols() != static_cast<std::size_t>(rank_))
        throw std::invalid_argument("degenerate ONB extraction: rank mismatch");
    onb_cache_[i] = std::move(q);
    return onb_cache_[i];
}

SubspaceFamily ectff_from_pds(const PairedDSCandidate& candidate, const Tolerance& tol) {
    PairedDSCertificate cert = is_paired_gram(candidate, tol);
    if (!cert.verdict) throw std::invalid_argument("candidate is not a certified pairing");
    const GroupSpec& g = candidate.group();
    std::int64_t n = g.order();
    std::int64_t d = static_cast<std::int64_t>(candidate.d_set().size());
    std::int64_t e = static_cast<std::int64_t>(candidate.e_set().size());
    std::int64_t r = cert.rank_value.as_integer();

    std::vector<ExactMatrix> synths;
    std::vector<ExactMatrix> mats;
    synths.reserve(static_cast<std::size_t>(n));
    mats.reserve(static_cast<std::size_t>(n));
    for (long long gamma = 0; gamma < n; ++gamma) {
        // columns stay in E's enumeration order so translated Grams compare entrywise
        std::vector<long long> shifted;
        shifted.reserve(static_cast<std::size_t>(e));
        for (long long eps : candidate.e_set().indices()) shifted.push_back(g.add(gamma, eps));
        SynthesisMatrix phi = harmonic_synthesis_ordered(g, candidate.d_set(), shifted,
                                                         candidate.bicharacter());
        mats.push_back(phi.mat.multiply(phi.mat.adjoint()));
        synths.push_back(std::move(phi.mat));
    }
    // P_gamma = (R/DE) Phi_gamma Phi_gamma^*
    Rational scale(r, checked_mul(d, e));
    return SubspaceFamily::from_scaled_projections(static_cast<std::size_t>(d),
                                                   static_cast<int>(r), std::move(mats), scale,
                                                   std::move(synths));
}

EctffCertificate certify_ectff(const SubspaceFamily& family, const Tolerance& tol,
                               const CertifyOptions& options) {
    if (family.count() < 2)
        throw std::invalid_argument("certification needs at least two subspaces");
    EctffCertificate cert;
    cert.ambient = family.ambient();
    cert.count = family.count();
    cert.rank = family.rank();
    cert.exact = family.exact();
    std::int64_t d = static_cast<std::int64_t>(cert.ambient);
    std::int64_t n = static_cast<std::int64_t>(cert.count);
    std::int64_t r = cert.rank;
    cert.tight_constant = Rational(checked_mul(n, r), d);
    cert.bounds = bounds(d, n, r);
    cert.theoretical_trace =
        Rational(checked_mul(r, checked_mul(n, r) - d), checked_mul(d, n - 1));

    if (cert.exact) {
        ExactMatrix total = family.proj_mat(0);
        for (std::size_t i = 1; i < family.count(); ++i) total = total.add(family.proj_mat(i));
        bool scalar = true;
        std::int64_t diag = total.at_int(0, 0);
        for (std::size_t i = 0; i < total.rows() && scalar; ++i)
            for (std::size_t j = 0; j < total.cols(); ++j) {
                std::int64_t want = i == j ? diag : 0;
                if (total.at_int(i, j) != want) {
                    scalar = false;
                    break;
                }
            }
        cert.tight = scalar && Rational(diag) * family.proj_scale() == cert.tight_constant;
        cert.tight_residual = 0.0;
        if (scalar && !cert.tight)
            throw std::logic_error("scalar fusion operator with unexpected constant");

        std::vector<std::pair<std::size_t, std::size_t>> pair_idx;
        for (std::size_t i = 0; i < family.count(); ++i)
            for (std::size_t j = i + 1; j < family.count(); ++j) pair_idx.emplace_back(i, j);
        std::vector<Rational> traces(pair_idx.size());
        parallel_for(pair_idx.size(), [&](std::size_t k) {
            traces[k] = trace_product_scaled(family.proj_mat(pair_idx[k].first),
                                             family.proj_mat(pair_idx[k].second),
                                             family.proj_scale());
        });
        bool constant = true;
        Rational ref, worst_dev(0);
        Rational max_trace(0);
        bool first = true;
        for (const Rational& t : traces) {
            if (first) {
                ref = t;
                max_trace = t;
                first = false;
            } else {
                if (t != ref) constant = false;
                Rational dev = t > ref ? t - ref : ref - t;
                if (dev > worst_dev) worst_dev = dev;
                if (t > max_trace) max_trace = t;
            }
        }
        cert.equichordal = constant;  // trivially equichordal with fewer than two subspaces
        cert.common_trace = ref;
        cert.common_trace_value = ref.as_double();
        cert.max_trace_deviation = worst_dev.as_double();
        cert.matches_theoretical = constant && ref == cert.theoretical_trace;
        Rational mind2 = Rational(r) - max_trace;
        cert.min_chordal_distance = std::sqrt(std::max(0.0, mind2.as_double()));
        cert.meets_simplex = mind2 == cert.bounds.simplex2;
        cert.is_ectff = cert.tight && cert.equichordal;
        if (cert.is_ectff && !cert.matches_theoretical)
            throw std::logic_error("equichordal tight family off the theoretical common trace");
    } else {
        std::size_t dd = cert.ambient;
        ExactMatrix total = ExactMatrix::complex(dd, dd);
        for (std::size_t i = 0; i < family.count(); ++i) total = total.add(family.projection(i));
        ExactMatrix target =
            ExactMatrix::identity(dd, MatrixKind::Complex).scaled(cert.tight_constant.as_double());
        cert.tight_residual = total.sub(target).frobenius_norm();
        cert.tight = cert.tight_residual <=
                     tol.abs + tol.rel * cert.tight_constant.as_double() * std::sqrt(double(dd));

        double ref = 0, lo = 0, hi = 0;
        bool first = true;
        for (std::size_t i = 0; i < family.count(); ++i)
            for (std::size_t j = i + 1; j < family.count(); ++j) {
                double t = trace_product_value(family.projection(i), family.projection(j));
                if (first) {
                    ref = t;
                    lo = hi = t;
                    first = false;
                } else {
                    lo = std::min(lo, t);
                    hi = std::max(hi, t);
                }
            }
        double band = tol.abs + tol.rel * static_cast<double>(r);
        cert.equichordal = first || (hi - lo) <= band;
        cert.common_trace_value = ref;
        cert.max_trace_deviation = hi - lo;
        cert.matches_theoretical =
            cert.equichordal && std::abs(ref - cert.theoretical_trace.as_double()) <= band;
        double mind2 = static_cast<double>(r) - hi;
        cert.min_chordal_distance = std::sqrt(std::max(0.0, mind2));
        cert.meets_simplex = std::abs(mind2 - cert.bounds.simplex2.as_double()) <= band;
        cert.is_ectff = cert.tight && cert.equichordal;
    }

    if (options.with_angles && family.count() > 1) {
        cert.angle_spectra.reserve(family.count() * (family.count() - 1) / 2);
        for (std::size_t i = 0; i < family.count(); ++i)
            for (std::size_t j = i + 1; j < family.count(); ++j)
                cert.angle_spectra.push_back(principal_angles(family, i, j, tol));
        EquiisoclinicResult eq = check_equiisoclinic(family, tol);
        cert.equiisoclinic = eq.verdict;
        cert.sigma = eq.sigma;
    }
    return cert;
}

std::vector<double> principal_angles(const SubspaceFamily& family, std::size_t i, std::size_t j,
                                     const Tolerance& tol) {
    if (i == j) throw std::invalid_argument("principal angles need two distinct subspaces");
    const ExactMatrix& qi = family.onb(i, tol);
    const ExactMatrix& qj = family.onb(j, tol);
    ExactMatrix cross = qi.adjoint().multiply(qj);
    SvdResult s = svd(cross, tol);
    std::vector<double> cosines = s.singular_values;
    for (double& c : cosines) c = std::clamp(c, 0.0, 1.0);
    return cosines;
}

EquiisoclinicResult check_equiisoclinic(const SubspaceFamily& family, const Tolerance& tol) {
    EquiisoclinicResult res;
    double lo = 2.0, hi = -1.0;
    for (std::size_t i = 0; i < family.count(); ++i)
        for (std::size_t j = i + 1; j < family.count(); ++j) {
            auto cosines = principal_angles(family, i, j, tol);
            for (double c : cosines) {
                lo = std::min(lo, c);
                hi = std::max(hi, c);
            }
        }
    if (hi < 0) {  // fewer than two subspaces
        res.verdict = true;
        res.sigma = 0.0;
        return res;
    }
    double band = tol.abs + tol.rel + 1e-7;
    res.verdict = (hi - lo) <= band;
    res.sigma = 0.5 * (hi + lo);
    return res;
}

SubspaceFamily spatial_complement(const SubspaceFamily& family) {
    if (family.rank() >= static_cast<int>(family.ambient()))
        throw std::invalid_argument("spatial complement needs R < D");
    std::size_t d = family.ambient();
    int newrank = static_cast<int>(d) - family.rank();
    std::vector<ExactMatrix> mats;
    mats.reserve(family.count());
    if (family.exact()) {
        // I - (p/q) S = (1/q)(q I - p S)
        Rational s = family.proj_scale();
        ExactMatrix qi = ExactMatrix::identity(d, MatrixKind::Integer).scaled_int(s.den());
        for (std::size_t i = 0; i < family.count(); ++i)
            mats.push_back(qi.sub(family.proj_mat(i).scaled_int(s.num())));
        return SubspaceFamily::from_scaled_projections(d, newrank, std::move(mats),
                                                       Rational(1, s.den()));
    }
    ExactMatrix eye = ExactMatrix::identity(d, MatrixKind::Complex);
    for (std::size_t i = 0; i < family.count(); ++i) mats.push_back(eye.sub(family.projection(i)));
    return SubspaceFamily::from_scaled_projections(d, newrank, std::move(mats), Rational(1));
}

SubspaceFamily naimark_fusion(const SubspaceFamily& family, const Tolerance& tol) {
    std::size_t d = family.ambient();
    std::size_t n = family.count();
    std::size_t r = static_cast<std::size_t>(family.rank());
    if (d >= n * r) throw std::invalid_argument("Naimark fusion needs D < NR");
    // Concatenate the subspace ONBs; tightness makes their Gram A-idempotent.
    ExactMatrix concat = ExactMatrix::complex(d, n * r);
    for (std::size_t i = 0; i < n; ++i) {
        const ExactMatrix& q = family.onb(i, tol);
        for (std::size_t rr = 0; rr < d; ++rr)
            for (std::size_t c = 0; c < r; ++c) concat.at_complex(rr, i * r + c) = q.at(rr, c);
    }
    double a = static_cast<double>(n * r) / static_cast<double>(d);
    ExactMatrix gram = concat.adjoint().multiply(concat);
    ExactMatrix resid = gram.multiply(gram).sub(gram.scaled(a));
    double gnorm = gram.frobenius_norm();
    if (resid.frobenius_norm() > (tol.abs + tol.rel * gnorm) * (gnorm + a))
        throw std::invalid_argument("family is not tight; Naimark complement undefined");
    ExactMatrix ngram =
        ExactMatrix::identity(n * r, MatrixKind::Complex).scaled(a).sub(gram);
    ExactMatrix psi = spectral_factor(ngram, tol);
    if (psi.rows() != n * r - d)
        throw std::invalid_argument("Naimark complement has unexpected rank");

    // Each block satisfies Psi_i^* Psi_i = (A-1) I, so P_i = Psi_i Psi_i^*/(A-1).
    std::vector<ExactMatrix> synths, mats;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> rows_all(psi.rows()), cols_block(r);
        for (std::size_t k = 0; k < psi.rows(); ++k) rows_all[k] = k;
        for (std::size_t k = 0; k < r; ++k) cols_block[k] = i * r + k;
        ExactMatrix block = psi.submatrix(rows_all, cols_block);
        mats.push_back(block.multiply(block.adjoint()).scaled(1.0 / (a - 1.0)));
        synths.push_back(std::move(block));
    }
    return SubspaceFamily::from_scaled_projections(n * r - d, static_cast<int>(r), std::move(mats),
                                                   Rational(1), std::move(synths));
}

}  // namespace ectff
