#include "ectff/frames.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ectff {

namespace {

std::optional<std::int64_t> exact_isqrt(std::int64_t v) {
    if (v < 0) return std::nullopt;
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
    for (std::int64_t c = std::max<std::int64_t>(0, r - 2); c <= r + 2; ++c)
        if (c * c == v) return c;
    return std::nullopt;
}

std::optional<Rational> exact_sqrt(const Rational& v) {
    auto n = exact_isqrt(v.num());
    auto d = exact_isqrt(v.den());
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
}

}  // namespace

SynthesisMatrix harmonic_synthesis(const GroupSpec& group, const GroupSubset& rows,
                                   const std::optional<GroupSubset>& cols,
                                   const std::optional<PairingForm>& bicharacter) {
    std::vector<long long> col_idx;
    if (cols.has_value()) {
        col_idx = cols->indices();
    } else {
        for (long long i = 0; i < group.order(); ++i) col_idx.push_back(i);
    }
    return harmonic_synthesis_ordered(group, rows, col_idx, bicharacter);
}

SynthesisMatrix harmonic_synthesis_ordered(const GroupSpec& group, const GroupSubset& rows,
                                           const std::vector<long long>& col_idx,
                                           const std::optional<PairingForm>& bicharacter) {
    if (rows.size() == 0) throw std::invalid_argument("harmonic synthesis needs nonempty rows");
    PairingForm form = bicharacter.value_or(PairingForm::standard(group));
    int L = group.exponent();
    std::size_t nr = rows.size(), nc = col_idx.size();
    SynthesisMatrix out;
    out.ambient_dim = nr;
    out.vector_count = nc;
    std::vector<GroupElement> row_coords;
    for (long long i : rows.indices()) row_coords.push_back(group.coords_of(i));
    if (L <= 2) {
        out.mat = ExactMatrix::integer(nr, nc);
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c) {
                int e = form.exponent_coords(group, row_coords[r], group.coords_of(col_idx[c]));
                out.mat.at_int(r, c) = e == 0 ? 1 : -1;
            }
    } else {
        out.mat = ExactMatrix::complex(nr, nc);
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c) {
                int e = form.exponent_coords(group, row_coords[r], group.coords_of(col_idx[c]));
                out.mat.at_complex(r, c) = RootOfUnity(e, L).value();
            }
    }
    return out;
}

FrameCertificate certify_frame(const SynthesisMatrix& phi, const Tolerance& tol) {
    const ExactMatrix& m = phi.mat;
    std::size_t n = m.cols();
    if (n == 0) throw std::invalid_argument("frame with no vectors");
    for (std::size_t c = 0; c < n; ++c) {
        double colnorm = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) colnorm += std::norm(m.at(r, c));
        if (colnorm <= tol.abs) throw std::invalid_argument("zero column in synthesis matrix");
    }

    FrameCertificate cert;
    cert.ambient = m.rows();
    cert.count = n;
    cert.exact = m.is_integer();

    ExactMatrix gram = m.adjoint().multiply(m);
    cert.rank = rank(gram, tol);
    std::size_t r = cert.rank;

    if (cert.exact) {
        std::int64_t tr = gram.trace_int();
        cert.tight_constant = Rational(tr, static_cast<std::int64_t>(r));
        ExactMatrix lhs = gram.multiply(gram).scaled_int(static_cast<std::int64_t>(r));
        ExactMatrix rhs = gram.scaled_int(tr);
        cert.tight = lhs.equals(rhs);
        cert.max_residual = 0.0;

        std::int64_t d0 = gram.at_int(0, 0);
        cert.equal_norm = true;
        for (std::size_t i = 1; i < n; ++i)
            if (gram.at_int(i, i) != d0) cert.equal_norm = false;
        cert.norm2 = Rational(d0);
        cert.norm2_value = static_cast<double>(d0);

        cert.equiangular = true;
        std::int64_t off2 = -1;
        for (std::size_t i = 0; i < n && cert.equiangular; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                std::int64_t v = gram.at_int(i, j);
                std::int64_t v2 = checked_mul(v, v);
                if (off2 < 0)
                    off2 = v2;
                else if (v2 != off2) {
                    cert.equiangular = false;
                    break;
                }
            }
        if (off2 < 0) off2 = 0;  // single vector
        cert.inner_modulus = std::sqrt(static_cast<double>(off2));
        cert.coherence = d0 > 0 ? cert.inner_modulus / static_cast<double>(d0) : 0.0;

        cert.tight_constant_value = cert.tight_constant.as_double();
        bool welch_equal = false;
        if (n > 1) {
            // coherence^2 == (N-R)/(R(N-1)), cross-multiplied in integers
            Rational c2(off2, checked_mul(d0, d0));
            Rational w2(static_cast<std::int64_t>(n - r),
                        checked_mul(static_cast<std::int64_t>(r), static_cast<std::int64_t>(n - 1)));
            welch_equal = c2 == w2;
            cert.welch_bound = std::sqrt(w2.as_double());
        } else {
            cert.welch_bound = 0.0;
            welch_equal = true;
        }
        cert.is_etf = cert.tight && cert.equal_norm && cert.equiangular;
        if (cert.equal_norm && (cert.is_etf != (welch_equal && cert.tight && cert.equal_norm)))
            throw std::logic_error("ETF criteria disagree (exact path)");
        if (cert.is_etf && n > 1 && !welch_equal)
            throw std::logic_error("ETF certificate does not meet the Welch bound");
        return cert;
    }

    double gnorm = gram.frobenius_norm();
    double bound = tol.abs + tol.rel * std::max(1.0, gnorm);
    std::complex<double> tr = gram.trace();
    double a = tr.real() / static_cast<double>(r);
    cert.tight_constant_value = a;
    ExactMatrix g2 = gram.multiply(gram);
    ExactMatrix resid = g2.sub(gram.scaled(a));
    cert.max_residual = resid.frobenius_norm();
    cert.tight = cert.max_residual <= tol.abs + tol.rel * gnorm * gnorm + tol.rel * gnorm * a;

    double d0 = gram.at(0, 0).real();
    cert.equal_norm = true;
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs(gram.at(i, i).real() - d0) > bound) cert.equal_norm = false;
    cert.norm2_value = d0;

    double off = -1.0;
    double offmax = 0.0;
    cert.equiangular = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = std::abs(gram.at(i, j));
            offmax = std::max(offmax, v);
            if (off < 0)
                off = v;
            else if (std::abs(v - off) > bound)
                cert.equiangular = false;
        }
    if (off < 0) off = 0;
    cert.inner_modulus = off;
    cert.coherence = d0 > 0 ? offmax / d0 : 0.0;
    cert.welch_bound =
        n > 1 ? std::sqrt(static_cast<double>(n - r) /
                          (static_cast<double>(r) * static_cast<double>(n - 1)))
              : 0.0;
    cert.is_etf = cert.tight && cert.equal_norm && cert.equiangular;
    bool welch_equal = std::abs(cert.coherence - cert.welch_bound) <=
                       tol.abs + tol.rel * std::max(1.0, cert.welch_bound) + 1e-7;
    if (cert.is_etf && !welch_equal)
        throw std::logic_error("ETF certificate does not meet the Welch bound");
    return cert;
}

ExactMatrix naimark_complement_gram(const ExactMatrix& gram, const Rational& a,
                                    const Tolerance& tol) {
    if (gram.rows() != gram.cols()) throw std::invalid_argument("Gram matrix must be square");
    std::size_t n = gram.rows();
    std::size_t r = rank(gram, tol);
    if (r >= n) throw std::invalid_argument("full-rank Gram has no Naimark complement");

    if (gram.is_integer() && a.is_integer()) {
        std::int64_t ai = a.as_integer();
        ExactMatrix lhs = gram.multiply(gram);
        if (!lhs.equals(gram.scaled_int(ai)))
            throw std::invalid_argument("Gram is not tight for its span");
        return ExactMatrix::identity(n, MatrixKind::Integer).scaled_int(ai).sub(gram);
    }
    double av = a.as_double();
    ExactMatrix g = gram.to_complex();
    ExactMatrix resid = g.multiply(g).sub(g.scaled(av));
    double gnorm = g.frobenius_norm();
    if (resid.frobenius_norm() > tol.abs + tol.rel * (gnorm * gnorm + gnorm * std::abs(av)))
        throw std::invalid_argument("Gram is not tight for its span");
    return ExactMatrix::identity(n, MatrixKind::Complex).scaled(av).sub(g);
}

namespace {

struct SrgParams {
    std::int64_t v, k, u, lambda;
    bool degenerate;
};

// Fill lambda from U(V-K-1) = K(K-Λ-1); verify the quadratic identity exactly.
SrgCertificate finish_srg(const std::vector<std::size_t>& vertices, const ExactMatrix& gram_signed,
                          std::int64_t v, const Rational& k_closed, const Rational& u_closed) {
    if (!k_closed.is_integer() || !u_closed.is_integer())
        throw std::invalid_argument("SRG closed-form parameters are not integral");
    std::int64_t k = k_closed.as_integer();
    std::int64_t u = u_closed.as_integer();

    SrgCertificate cert;
    cert.v = v;
    cert.k = k;
    cert.u = u;
    std::size_t nv = vertices.size();
    cert.adjacency = ExactMatrix::integer(nv, nv);
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j) {
            if (i == j) continue;
            double val = gram_signed.at(vertices[i], vertices[j]).real();
            cert.adjacency.at_int(i, j) = val > 0 ? 1 : 0;
        }

    // lambda from U(V-K-1) = K(K-Λ-1); a complete graph pins Λ = K-1.
    if (v - k - 1 > 0 && k > 0) {
        Rational lam = Rational(k) - 1 - Rational(u * (v - k - 1), k);
        if (!lam.is_integer()) throw std::invalid_argument("SRG lambda parameter not integral");
        cert.lambda_graph = lam.as_integer();
    } else {
        cert.degenerate = true;
        cert.lambda_graph = k > 0 ? k - 1 : 0;
    }
    if (v <= 1) cert.degenerate = true;

    const ExactMatrix& adj = cert.adjacency;
    ExactMatrix a2 = adj.multiply(adj);
    ExactMatrix rhs = adj.scaled_int(cert.lambda_graph - cert.u);
    rhs = rhs.add(ExactMatrix::identity(nv, MatrixKind::Integer).scaled_int(cert.k - cert.u));
    ExactMatrix jmat = ExactMatrix::integer(nv, nv);
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j) jmat.at_int(i, j) = 1;
    rhs = rhs.add(jmat.scaled_int(cert.u));
    std::int64_t worst = 0;
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j)
            worst = std::max(worst, std::abs(a2.at_int(i, j) - rhs.at_int(i, j)));
    cert.identity_residual = worst;
    return cert;
}

Rational eval_sqrt_term(std::size_t d, std::size_t n) {
    Rational s2(static_cast<std::int64_t>(d) * static_cast<std::int64_t>(n - 1),
                static_cast<std::int64_t>(n - d));
    auto s = exact_sqrt(s2);
    if (!s) throw std::invalid_argument("D(N-1)/(N-D) is not a perfect square; no real SRG bridge");
    return *s;
}

}  // namespace

SrgCertificate etf_to_srg_axial(const SynthesisMatrix& phi, const Tolerance& tol) {
    if (!phi.mat.is_real(tol.abs + 1e-12)) throw std::invalid_argument("ETF is not real");
    FrameCertificate fc = certify_frame(phi, tol);
    if (!fc.is_etf) throw std::invalid_argument("input is not an ETF");
    std::size_t n = fc.count, d = fc.rank;

    ExactMatrix gram = phi.mat.adjoint().multiply(phi.mat);
    // Axial test: the all-ones vector must lie in range(G); the least-squares
    // residual against the rows of Phi is ||(1/A) G 1 - 1||.
    if (gram.is_integer() && fc.tight_constant.is_integer()) {
        std::int64_t a = fc.tight_constant.as_integer();
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t rowsum = 0;
            for (std::size_t j = 0; j < n; ++j) rowsum = checked_add(rowsum, gram.at_int(i, j));
            if (rowsum != a) throw std::invalid_argument("ETF is not axial");
        }
    } else {
        double a = fc.tight_constant_value;
        double resid2 = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> rowsum = 0;
            for (std::size_t j = 0; j < n; ++j) rowsum += gram.at(i, j);
            resid2 += std::norm(rowsum / a - 1.0);
        }
        if (std::sqrt(resid2) > tol.abs + tol.rel * std::sqrt(static_cast<double>(n)))
            throw std::invalid_argument("ETF is not axial");
    }

    Rational s = eval_sqrt_term(d, n);
    Rational k = Rational(static_cast<std::int64_t>(n - 1), 2) +
                 Rational(1, 2) * (Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)) - 1) * s;
    std::int64_t v = static_cast<std::int64_t>(n);
    if (!k.is_integer()) throw std::invalid_argument("axial SRG degree is not integral");
    std::int64_t ki = k.as_integer();
    Rational u;
    if (v - 2 * ki - 1 != 0) {
        u = Rational(ki, 2) * Rational(v - 2 * ki - 2, v - 2 * ki - 1);
    } else {
        throw std::invalid_argument("axial SRG closed form degenerates (V = 2K+1)");
    }
    std::vector<std::size_t> vertices(n);
    for (std::size_t i = 0; i < n; ++i) vertices[i] = i;
    SrgCertificate cert = finish_srg(vertices, gram, v, k, u);
    if (ki == v - 1) cert.degenerate = true;  // complete graph
    return cert;
}

SrgCertificate etf_to_srg_punctured(const SynthesisMatrix& phi, std::size_t pivot,
                                    const Tolerance& tol) {
    if (!phi.mat.is_real(tol.abs + 1e-12)) throw std::invalid_argument("ETF is not real");
    FrameCertificate fc = certify_frame(phi, tol);
    if (!fc.is_etf) throw std::invalid_argument("input is not an ETF");
    std::size_t n = fc.count, d = fc.rank;
    if (pivot >= n) throw std::out_of_range("pivot out of range");

    ExactMatrix gram = phi.mat.adjoint().multiply(phi.mat).to_complex();
    // Sign-normalize so every inner product with the pivot is positive.
    std::vector<double> signs(n, 1.0);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == pivot) continue;
        double v = gram.at(pivot, j).real();
        if (std::abs(v) <= tol.abs)
            throw std::invalid_argument("sign normalization impossible: zero inner product");
        signs[j] = v > 0 ? 1.0 : -1.0;
    }
    // Adjacency below follows the closed form K = N/2 - 1 - (N/(2D)-1)[...]^{1/2}:
    // after the positive-pivot normalization, vertices are adjacent when their
    // inner product is negative, so the entries are negated for finish_srg.
    ExactMatrix signed_gram = ExactMatrix::complex(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            signed_gram.at_complex(i, j) = -gram.at(i, j) * signs[i] * signs[j];

    std::int64_t v = static_cast<std::int64_t>(n) - 1;
    Rational k;
    if (v == 0) {
        k = Rational(0);
    } else {
        Rational s = eval_sqrt_term(d, n);
        k = Rational(static_cast<std::int64_t>(n), 2) - 1 -
            (Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(2 * d)) - 1) * s;
    }
    Rational u = k / 2;
    std::vector<std::size_t> vertices;
    for (std::size_t i = 0; i < n; ++i)
        if (i != pivot) vertices.push_back(i);
    return finish_srg(vertices, signed_gram, v, k, u);
}

}  // namespace ectff
