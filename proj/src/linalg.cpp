#include "ectff/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ectff {

namespace {

std::size_t idx(std::size_t r, std::size_t c, std::size_t cols) { return r * cols + c; }

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

ExactMatrix ExactMatrix::integer(std::size_t rows, std::size_t cols) {
    ExactMatrix m;
    m.kind_ = MatrixKind::Integer;
    m.rows_ = rows;
    m.cols_ = cols;
    m.ivals_.assign(rows * cols, 0);
    return m;
}

ExactMatrix ExactMatrix::complex(std::size_t rows, std::size_t cols) {
    ExactMatrix m;
    m.kind_ = MatrixKind::Complex;
    m.rows_ = rows;
    m.cols_ = cols;
    m.cvals_.assign(rows * cols, {0.0, 0.0});
    return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n, MatrixKind kind) {
    ExactMatrix m = kind == MatrixKind::Integer ? integer(n, n) : complex(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (kind == MatrixKind::Integer)
            m.ivals_[idx(i, i, n)] = 1;
        else
            m.cvals_[idx(i, i, n)] = 1.0;
    }
    return m;
}

std::int64_t& ExactMatrix::at_int(std::size_t r, std::size_t c) {
    require(kind_ == MatrixKind::Integer, "integer access on complex matrix");
    return ivals_[idx(r, c, cols_)];
}

std::int64_t ExactMatrix::at_int(std::size_t r, std::size_t c) const {
    require(kind_ == MatrixKind::Integer, "integer access on complex matrix");
    return ivals_[idx(r, c, cols_)];
}

std::complex<double>& ExactMatrix::at_complex(std::size_t r, std::size_t c) {
    require(kind_ == MatrixKind::Complex, "complex access on integer matrix");
    return cvals_[idx(r, c, cols_)];
}

std::complex<double> ExactMatrix::at(std::size_t r, std::size_t c) const {
    if (kind_ == MatrixKind::Integer) return {static_cast<double>(ivals_[idx(r, c, cols_)]), 0.0};
    return cvals_[idx(r, c, cols_)];
}

ExactMatrix ExactMatrix::multiply(const ExactMatrix& other) const {
    require(cols_ == other.rows_, "shape mismatch in multiply");
    if (kind_ == MatrixKind::Integer && other.kind_ == MatrixKind::Integer) {
        ExactMatrix out = integer(rows_, other.cols_);
        // ikj order keeps the inner loop contiguous in both operands.
        for (std::size_t i = 0; i < rows_; ++i) {
            std::vector<__int128> acc(other.cols_, 0);
            for (std::size_t k = 0; k < cols_; ++k) {
                __int128 a = ivals_[idx(i, k, cols_)];
                if (a == 0) continue;
                const std::int64_t* brow = &other.ivals_[idx(k, 0, other.cols_)];
                for (std::size_t j = 0; j < other.cols_; ++j) acc[j] += a * brow[j];
            }
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.ivals_[idx(i, j, other.cols_)] = checked_narrow(acc[j], "matrix product overflow");
        }
        return out;
    }
    ExactMatrix a = to_complex();
    ExactMatrix b = other.to_complex();
    ExactMatrix out = complex(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            std::complex<double> av = a.cvals_[idx(i, k, cols_)];
            if (av == std::complex<double>{}) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.cvals_[idx(i, j, other.cols_)] += av * b.cvals_[idx(k, j, other.cols_)];
        }
    return out;
}

ExactMatrix ExactMatrix::adjoint() const {
    if (kind_ == MatrixKind::Integer) return transpose();
    ExactMatrix out = complex(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out.cvals_[idx(c, r, rows_)] = std::conj(cvals_[idx(r, c, cols_)]);
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out = kind_ == MatrixKind::Integer ? integer(cols_, rows_) : complex(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            if (kind_ == MatrixKind::Integer)
                out.ivals_[idx(c, r, rows_)] = ivals_[idx(r, c, cols_)];
            else
                out.cvals_[idx(c, r, rows_)] = cvals_[idx(r, c, cols_)];
        }
    return out;
}

ExactMatrix ExactMatrix::add(const ExactMatrix& other) const {
    require(rows_ == other.rows_ && cols_ == other.cols_, "shape mismatch in add");
    if (kind_ == MatrixKind::Integer && other.kind_ == MatrixKind::Integer) {
        ExactMatrix out = integer(rows_, cols_);
        for (std::size_t i = 0; i < ivals_.size(); ++i)
            out.ivals_[i] = checked_add(ivals_[i], other.ivals_[i]);
        return out;
    }
    ExactMatrix a = to_complex(), b = other.to_complex(), out = complex(rows_, cols_);
    for (std::size_t i = 0; i < out.cvals_.size(); ++i) out.cvals_[i] = a.cvals_[i] + b.cvals_[i];
    return out;
}

ExactMatrix ExactMatrix::sub(const ExactMatrix& other) const {
    return add(other.scaled_int(-1));
}

ExactMatrix ExactMatrix::scaled_int(std::int64_t s) const {
    if (kind_ == MatrixKind::Integer) {
        ExactMatrix out = integer(rows_, cols_);
        for (std::size_t i = 0; i < ivals_.size(); ++i) out.ivals_[i] = checked_mul(ivals_[i], s);
        return out;
    }
    return scaled(static_cast<double>(s));
}

ExactMatrix ExactMatrix::scaled(std::complex<double> s) const {
    ExactMatrix out = to_complex();
    for (auto& v : out.cvals_) v *= s;
    return out;
}

ExactMatrix ExactMatrix::to_complex() const {
    if (kind_ == MatrixKind::Complex) return *this;
    ExactMatrix out = complex(rows_, cols_);
    for (std::size_t i = 0; i < ivals_.size(); ++i)
        out.cvals_[i] = {static_cast<double>(ivals_[i]), 0.0};
    return out;
}

ExactMatrix ExactMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                   const std::vector<std::size_t>& col_idx) const {
    ExactMatrix out = kind_ == MatrixKind::Integer ? integer(row_idx.size(), col_idx.size())
                                                   : complex(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r)
        for (std::size_t c = 0; c < col_idx.size(); ++c) {
            require(row_idx[r] < rows_ && col_idx[c] < cols_, "submatrix index out of range");
            if (kind_ == MatrixKind::Integer)
                out.ivals_[idx(r, c, col_idx.size())] = ivals_[idx(row_idx[r], col_idx[c], cols_)];
            else
                out.cvals_[idx(r, c, col_idx.size())] = cvals_[idx(row_idx[r], col_idx[c], cols_)];
        }
    return out;
}

std::int64_t ExactMatrix::trace_int() const {
    require(kind_ == MatrixKind::Integer, "integer trace on complex matrix");
    require(rows_ == cols_, "trace of non-square matrix");
    std::int64_t t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t = checked_add(t, ivals_[idx(i, i, cols_)]);
    return t;
}

std::complex<double> ExactMatrix::trace() const {
    require(rows_ == cols_, "trace of non-square matrix");
    std::complex<double> t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

std::int64_t ExactMatrix::frobenius_norm2_int() const {
    require(kind_ == MatrixKind::Integer, "integer norm on complex matrix");
    __int128 s = 0;
    for (std::int64_t v : ivals_) s += static_cast<__int128>(v) * v;
    return checked_narrow(s, "frobenius norm overflow");
}

double ExactMatrix::frobenius_norm() const {
    double s = 0;
    if (kind_ == MatrixKind::Integer) {
        for (std::int64_t v : ivals_) s += static_cast<double>(v) * static_cast<double>(v);
    } else {
        for (const auto& v : cvals_) s += std::norm(v);
    }
    return std::sqrt(s);
}

bool ExactMatrix::equals(const ExactMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    if (kind_ == MatrixKind::Integer && other.kind_ == MatrixKind::Integer)
        return ivals_ == other.ivals_;
    return approx_equals(other, 0.0);
}

bool ExactMatrix::approx_equals(const ExactMatrix& other, double eps) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (std::abs(at(r, c) - other.at(r, c)) > eps) return false;
    return true;
}

bool ExactMatrix::is_self_adjoint(const Tolerance& tol) const {
    if (rows_ != cols_) return false;
    if (kind_ == MatrixKind::Integer) {
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r + 1; c < cols_; ++c)
                if (ivals_[idx(r, c, cols_)] != ivals_[idx(c, r, cols_)]) return false;
        return true;
    }
    double bound = tol.abs + tol.rel * frobenius_norm();
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            if (std::abs(cvals_[idx(r, c, cols_)] - std::conj(cvals_[idx(c, r, cols_)])) > bound)
                return false;
    return true;
}

bool ExactMatrix::is_real(double eps) const {
    if (kind_ == MatrixKind::Integer) return true;
    for (const auto& v : cvals_)
        if (std::abs(v.imag()) > eps) return false;
    return true;
}

void ExactMatrix::dump(std::ostream& os) const {
    os << rows_ << ' ' << cols_ << ' ' << (kind_ == MatrixKind::Integer ? "integer" : "complex")
       << '\n';
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            if (kind_ == MatrixKind::Integer) {
                os << ivals_[idx(r, c, cols_)];
            } else {
                const auto& v = cvals_[idx(r, c, cols_)];
                os << v.real() << ',' << v.imag();
            }
        }
        os << '\n';
    }
}

ExactMatrix ExactMatrix::parse_dump(std::istream& is) {
    std::size_t rows = 0, cols = 0;
    std::string kind;
    if (!(is >> rows >> cols >> kind)) throw std::invalid_argument("bad matrix dump header");
    if (kind == "integer") {
        ExactMatrix m = integer(rows, cols);
        for (auto& v : m.ivals_)
            if (!(is >> v)) throw std::invalid_argument("truncated integer matrix dump");
        return m;
    }
    if (kind != "complex") throw std::invalid_argument("unknown matrix dump kind");
    ExactMatrix m = complex(rows, cols);
    for (auto& v : m.cvals_) {
        std::string tok;
        if (!(is >> tok)) throw std::invalid_argument("truncated complex matrix dump");
        auto comma = tok.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad complex entry");
        v = {std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1))};
    }
    return m;
}

namespace {

// One cyclic sweep of complex Jacobi rotations; returns remaining off-diagonal mass.
double jacobi_sweep(std::vector<std::complex<double>>& a, std::vector<std::complex<double>>& v,
                    std::size_t n, double thresh) {
    using C = std::complex<double>;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            C apq = a[idx(p, q, n)];
            double m = std::abs(apq);
            if (m <= thresh) continue;
            double app = a[idx(p, p, n)].real();
            double aqq = a[idx(q, q, n)].real();
            C u = apq / m;  // phase
            double tau = (aqq - app) / (2.0 * m);
            double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            double c = 1.0 / std::sqrt(1.0 + t * t);
            double s = t * c;
            // J restricted to the (p,q) plane is [[c, s], [-conj(u)*s, conj(u)*c]];
            // it diagonalizes the 2x2 block, A <- J^* A J.
            for (std::size_t k = 0; k < n; ++k) {
                C akp = a[idx(k, p, n)];
                C akq = a[idx(k, q, n)];
                a[idx(k, p, n)] = c * akp - s * std::conj(u) * akq;
                a[idx(k, q, n)] = s * akp + c * std::conj(u) * akq;
            }
            for (std::size_t k = 0; k < n; ++k) {
                C apk = a[idx(p, k, n)];
                C aqk = a[idx(q, k, n)];
                a[idx(p, k, n)] = c * apk - s * u * aqk;
                a[idx(q, k, n)] = s * apk + c * u * aqk;
            }
            a[idx(p, q, n)] = 0.0;
            a[idx(q, p, n)] = 0.0;
            a[idx(p, p, n)] = C(a[idx(p, p, n)].real(), 0.0);
            a[idx(q, q, n)] = C(a[idx(q, q, n)].real(), 0.0);
            for (std::size_t k = 0; k < n; ++k) {
                C vkp = v[idx(k, p, n)];
                C vkq = v[idx(k, q, n)];
                v[idx(k, p, n)] = c * vkp - s * std::conj(u) * vkq;
                v[idx(k, q, n)] = s * vkp + c * std::conj(u) * vkq;
            }
        }
    }
    double off = 0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (p != q) off += std::norm(a[idx(p, q, n)]);
    return std::sqrt(off);
}

}  // namespace

EigResult eig_self_adjoint(const ExactMatrix& m, const Tolerance& tol) {
    require(m.rows() == m.cols(), "eig of non-square matrix");
    if (!m.is_self_adjoint(tol)) throw std::invalid_argument("matrix is not self-adjoint");
    std::size_t n = m.rows();
    ExactMatrix mc = m.to_complex();
    std::vector<std::complex<double>> a(n * n), v(n * n, 0.0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[idx(r, c, n)] = mc.at(r, c);
    // Symmetrize away representation noise.
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r + 1; c < n; ++c) {
            std::complex<double> avg = 0.5 * (a[idx(r, c, n)] + std::conj(a[idx(c, r, n)]));
            a[idx(r, c, n)] = avg;
            a[idx(c, r, n)] = std::conj(avg);
        }
        a[idx(r, r, n)] = {a[idx(r, r, n)].real(), 0.0};
    }
    for (std::size_t i = 0; i < n; ++i) v[idx(i, i, n)] = 1.0;

    double norm = m.frobenius_norm();
    double target = std::max(tol.abs, tol.rel * norm * 1e-3);
    for (int sweep = 0; sweep < 64 && n > 1; ++sweep) {
        double off = jacobi_sweep(a, v, n, 0.0);
        if (off <= target) break;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a[idx(i, i, n)].real();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return diag[x] > diag[y]; });

    EigResult res;
    res.values.resize(n);
    res.vectors = ExactMatrix::complex(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        res.values[j] = diag[order[j]];
        for (std::size_t i = 0; i < n; ++i)
            res.vectors.at_complex(i, j) = v[idx(i, order[j], n)];
    }
    return res;
}

namespace {

// Exact rank of an integer matrix by fraction-free (Bareiss) elimination with
// full pivoting. Throws std::overflow_error if intermediates leave 64 bits.
std::size_t rank_integer_exact(const ExactMatrix& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::int64_t> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[idx(r, c, cols)] = m.at_int(r, c);
    std::int64_t prev = 1;
    std::size_t rank = 0;
    for (std::size_t step = 0; step < std::min(rows, cols); ++step) {
        std::size_t pr = rows, pc = cols;
        for (std::size_t r = rank; r < rows && pr == rows; ++r)
            for (std::size_t c = rank; c < cols; ++c)
                if (a[idx(r, c, cols)] != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr == rows) break;
        if (pr != rank)
            for (std::size_t c = 0; c < cols; ++c)
                std::swap(a[idx(pr, c, cols)], a[idx(rank, c, cols)]);
        if (pc != rank)
            for (std::size_t r = 0; r < rows; ++r)
                std::swap(a[idx(r, pc, cols)], a[idx(r, rank, cols)]);
        std::int64_t piv = a[idx(rank, rank, cols)];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = rank + 1; c < cols; ++c) {
                __int128 num = static_cast<__int128>(piv) * a[idx(r, c, cols)] -
                               static_cast<__int128>(a[idx(r, rank, cols)]) * a[idx(rank, c, cols)];
                if (num % prev != 0) throw std::overflow_error("bareiss divisibility failure");
                a[idx(r, c, cols)] = checked_narrow(num / prev, "bareiss overflow");
            }
            a[idx(r, rank, cols)] = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

// Rank of an integer matrix modulo a prime; a lower bound on the rational rank,
// tight unless the prime divides an invariant factor.
std::size_t rank_integer_mod_p(const ExactMatrix& m, std::int64_t p) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::int64_t> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[idx(r, c, cols)] = ((m.at_int(r, c) % p) + p) % p;
    auto powmod = [&](std::int64_t base, std::int64_t exp) {
        std::int64_t out = 1;
        base %= p;
        while (exp) {
            if (exp & 1) out = out * base % p;
            base = base * base % p;
            exp >>= 1;
        }
        return out;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (a[idx(r, col, cols)] != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t c = col; c < cols; ++c)
                std::swap(a[idx(pivot, c, cols)], a[idx(rank, c, cols)]);
        std::int64_t inv = powmod(a[idx(rank, col, cols)], p - 2);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            std::int64_t f = a[idx(r, col, cols)] * inv % p;
            if (f == 0) continue;
            for (std::size_t c = col; c < cols; ++c)
                a[idx(r, c, cols)] = ((a[idx(r, c, cols)] - f * a[idx(rank, c, cols)]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rank(const ExactMatrix& m, const Tolerance& tol) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.is_integer()) {
        try {
            return rank_integer_exact(m);
        } catch (const std::overflow_error&) {
            // Modular ranks agree across independent primes only when neither
            // divides an invariant factor; on agreement the value is exact for
            // all matrices in scope. Disagreement falls through to spectra.
            std::size_t r1 = rank_integer_mod_p(m, 1000000007);
            std::size_t r2 = rank_integer_mod_p(m, 998244353);
            if (r1 == r2) return r1;
        }
    }
    if (m.rows() == m.cols() && m.is_self_adjoint(tol)) {
        EigResult e = eig_self_adjoint(m, tol);
        double lmax = 0;
        for (double v : e.values) lmax = std::max(lmax, std::abs(v));
        double cutoff = std::max(tol.abs, tol.rel * lmax);
        std::size_t r = 0;
        for (double v : e.values)
            if (std::abs(v) > cutoff) ++r;
        return r;
    }
    // The SVD runs through the normal matrix, which squares the noise floor;
    // cut at sigma_max * sqrt(rel) rather than sigma_max * rel.
    SvdResult s = svd(m, tol);
    if (s.singular_values.empty()) return 0;
    double cutoff = std::max(tol.abs, s.singular_values.front() * std::sqrt(tol.rel));
    std::size_t r = 0;
    for (double sv : s.singular_values)
        if (sv > cutoff) ++r;
    return r;
}

ExactMatrix spectral_factor(const ExactMatrix& g, const Tolerance& tol) {
    require(g.rows() == g.cols(), "spectral factor of non-square matrix");
    EigResult e = eig_self_adjoint(g, tol);
    std::size_t n = g.rows();
    double lmax = e.values.empty() ? 0.0 : std::max(0.0, e.values.front());
    double neg_bound = tol.abs + tol.rel * std::max(1.0, lmax);
    if (!e.values.empty() && e.values.back() < -neg_bound)
        throw std::invalid_argument("matrix has a negative eigenvalue beyond tolerance");
    double cutoff = std::max(tol.abs, tol.rel * lmax);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < e.values.size(); ++i)
        if (e.values[i] > cutoff) keep.push_back(i);
    ExactMatrix phi = ExactMatrix::complex(keep.size(), n);
    for (std::size_t r = 0; r < keep.size(); ++r) {
        double s = std::sqrt(e.values[keep[r]]);
        for (std::size_t c = 0; c < n; ++c)
            phi.at_complex(r, c) = s * std::conj(e.vectors.at(c, keep[r]));
    }
    return phi;
}

SvdResult svd(const ExactMatrix& m, const Tolerance& tol) {
    SvdResult res;
    std::size_t rows = m.rows(), cols = m.cols();
    std::size_t k = std::min(rows, cols);
    if (k == 0) return res;
    ExactMatrix mc = m.to_complex();
    bool via_cols = cols <= rows;
    ExactMatrix gram = via_cols ? mc.adjoint().multiply(mc) : mc.multiply(mc.adjoint());
    EigResult e = eig_self_adjoint(gram, tol);
    double lmax = std::max(0.0, e.values.empty() ? 0.0 : e.values.front());
    double cutoff = std::sqrt(std::max(0.0, lmax)) * std::sqrt(tol.rel) + tol.abs;
    std::vector<double> sv;
    for (double lam : e.values) sv.push_back(std::sqrt(std::max(0.0, lam)));
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < sv.size(); ++i)
        if (sv[i] > cutoff) keep.push_back(i);

    res.singular_values.assign(k, 0.0);
    for (std::size_t i = 0; i < std::min(k, sv.size()); ++i) res.singular_values[i] = sv[i];

    std::size_t r = keep.size();
    res.u = ExactMatrix::complex(rows, r);
    res.v = ExactMatrix::complex(cols, r);
    for (std::size_t j = 0; j < r; ++j) {
        std::size_t src = keep[j];
        if (via_cols) {
            for (std::size_t i = 0; i < cols; ++i) res.v.at_complex(i, j) = e.vectors.at(i, src);
            for (std::size_t i = 0; i < rows; ++i) {
                std::complex<double> acc = 0;
                for (std::size_t c = 0; c < cols; ++c) acc += mc.at(i, c) * e.vectors.at(c, src);
                res.u.at_complex(i, j) = acc / sv[src];
            }
        } else {
            for (std::size_t i = 0; i < rows; ++i) res.u.at_complex(i, j) = e.vectors.at(i, src);
            for (std::size_t i = 0; i < cols; ++i) {
                std::complex<double> acc = 0;
                for (std::size_t rr = 0; rr < rows; ++rr)
                    acc += std::conj(mc.at(rr, i)) * e.vectors.at(rr, src);
                res.v.at_complex(i, j) = acc / sv[src];
            }
        }
    }
    return res;
}

}  // namespace ectff
