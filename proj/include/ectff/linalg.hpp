#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ectff/rational.hpp"

namespace ectff {

/// Absolute/relative tolerance pair threaded through every floating-point path.
struct Tolerance {
    double rel = 1e-9;
    double abs = 1e-12;
};

enum class MatrixKind { Integer, Complex };

/// Dense matrix with either exact 64-bit integer entries (all arithmetic checked,
/// overflow throws) or complex double entries. Integer products, traces and norms
/// are exact; re-association never changes results.
class ExactMatrix {
public:
    ExactMatrix() = default;

    static ExactMatrix integer(std::size_t rows, std::size_t cols);
    static ExactMatrix complex(std::size_t rows, std::size_t cols);
    static ExactMatrix identity(std::size_t n, MatrixKind kind = MatrixKind::Integer);

    MatrixKind kind() const { return kind_; }
    bool is_integer() const { return kind_ == MatrixKind::Integer; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t& at_int(std::size_t r, std::size_t c);
    std::int64_t at_int(std::size_t r, std::size_t c) const;
    std::complex<double>& at_complex(std::size_t r, std::size_t c);
    /// Entry viewed as a complex number regardless of kind.
    std::complex<double> at(std::size_t r, std::size_t c) const;

    ExactMatrix multiply(const ExactMatrix& other) const;
    ExactMatrix adjoint() const;
    ExactMatrix transpose() const;
    ExactMatrix add(const ExactMatrix& other) const;
    ExactMatrix sub(const ExactMatrix& other) const;
    ExactMatrix scaled_int(std::int64_t s) const;
    ExactMatrix scaled(std::complex<double> s) const;
    ExactMatrix to_complex() const;
    ExactMatrix submatrix(const std::vector<std::size_t>& row_idx,
                          const std::vector<std::size_t>& col_idx) const;

    std::int64_t trace_int() const;
    std::complex<double> trace() const;
    std::int64_t frobenius_norm2_int() const;
    double frobenius_norm() const;

    bool equals(const ExactMatrix& other) const;
    bool approx_equals(const ExactMatrix& other, double eps) const;
    bool is_self_adjoint(const Tolerance& tol = {}) const;
    bool is_real(double eps) const;

    /// linalg dump format: header "rows cols kind", then row-major entries
    /// (signed decimals / "re,im" pairs).
    void dump(std::ostream& os) const;
    static ExactMatrix parse_dump(std::istream& is);

private:
    MatrixKind kind_ = MatrixKind::Integer;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> ivals_;
    std::vector<std::complex<double>> cvals_;
};

struct EigResult {
    std::vector<double> values;  // descending
    ExactMatrix vectors;         // complex, columns are orthonormal eigenvectors
};

struct SvdResult {
    std::vector<double> singular_values;  // descending, length min(rows, cols)
    ExactMatrix u;                        // thin factors spanning the numerical range
    ExactMatrix v;
};

/// Cyclic Jacobi eigendecomposition of a self-adjoint matrix; eigenvalues sorted
/// descending, residual ||M - V diag V*|| < tol.rel * ||M||. Throws on
/// non-self-adjoint input.
EigResult eig_self_adjoint(const ExactMatrix& m, const Tolerance& tol = {});

/// Rank. Integer-kind matrices use exact fraction-free elimination (falling back
/// to spectral counting only on 64-bit overflow); complex matrices count singular
/// values above tol.rel * sigma_max.
std::size_t rank(const ExactMatrix& m, const Tolerance& tol = {});

/// Factor a positive semidefinite G as Phi^* Phi with Phi of shape rank x N.
/// Throws if G has a negative eigenvalue beyond tolerance.
ExactMatrix spectral_factor(const ExactMatrix& g, const Tolerance& tol = {});

SvdResult svd(const ExactMatrix& m, const Tolerance& tol = {});

}  // namespace ectff
