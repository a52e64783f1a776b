// Copyright 2026 The nuqet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Dense complex linear algebra for the tiny (n <= 4) matrices that carry
 * density matrices, SLDs, POVM elements and Lindblad operators.
 */
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nuqet/error.hpp"

namespace nuqet {

using Complex = std::complex<double>;

/// Relative Hermiticity tolerance shared by every validating entry point.
inline constexpr double kHermitianTol = 1e-10;

/**
 * Dense square complex matrix of dimension 1..4, row-major, stored inline.
 *
 * Larger dimensions are rejected at construction with UnsupportedDim.
 */
class Matrix {
  public:
    static constexpr std::size_t kMaxDim = 4;

    /// Zero matrix of the given dimension.
    explicit Matrix(std::size_t dim);
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(std::size_t dim);
    static Matrix diagonal(std::span<const double> entries);
    static Matrix diagonal(std::initializer_list<double> entries);
    /// u v^dagger.
    static Matrix outer(std::span<const Complex> u, std::span<const Complex> v);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    Complex &operator()(std::size_t i, std::size_t j) noexcept {
        return data_[i * kMaxDim + j];
    }
    const Complex &operator()(std::size_t i, std::size_t j) const noexcept {
        return data_[i * kMaxDim + j];
    }

    [[nodiscard]] Matrix adjoint() const;
    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] std::vector<Complex> column(std::size_t j) const;

    Matrix &operator+=(const Matrix &rhs);
    Matrix &operator-=(const Matrix &rhs);
    Matrix &operator*=(Complex scale) noexcept;

    friend Matrix operator+(Matrix lhs, const Matrix &rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix &rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, Complex scale) { return lhs *= scale; }
    friend Matrix operator*(Complex scale, Matrix rhs) { return rhs *= scale; }
    friend Matrix operator*(const Matrix &lhs, const Matrix &rhs);

    friend bool operator==(const Matrix &lhs, const Matrix &rhs) noexcept;

  private:
    std::size_t dim_;
    std::array<Complex, kMaxDim * kMaxDim> data_{};
};

/// Eigen-decomposition of a Hermitian matrix; eigenvectors are the columns
/// of `vectors`, paired with `values` sorted ascending.
struct HermitianEigensystem {
    std::vector<double> values;
    Matrix vectors{1};

    [[nodiscard]] std::size_t dim() const noexcept { return values.size(); }
    [[nodiscard]] std::vector<Complex> vector(std::size_t k) const {
        return vectors.column(k);
    }
    /// sum_k values[k] v_k v_k^dagger
    [[nodiscard]] Matrix reconstruct() const;
};

Complex trace(const Matrix &m) noexcept;
double frobenius_norm(const Matrix &m) noexcept;
/// Sum of |eigenvalues|; input must be Hermitian.
double trace_norm(const Matrix &m);
Matrix commutator(const Matrix &a, const Matrix &b);
Matrix anticommutator(const Matrix &a, const Matrix &b);

/// <u, v> with the first argument conjugated.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
/// <u| m |v>.
Complex matrix_element(std::span<const Complex> u, const Matrix &m,
                       std::span<const Complex> v);

/// ||m - m^dagger||_F <= rel_tol * ||m||_F
bool is_hermitian(const Matrix &m, double rel_tol = kHermitianTol) noexcept;
void require_hermitian(const Matrix &m, const char *what);
void require_same_dim(const Matrix &a, const Matrix &b, const char *what);

/**
 * Eigen-decomposition of a Hermitian matrix.
 *
 * 2x2 inputs use the closed-form trace/determinant solution; 3x3 and 4x4 use
 * cyclic complex Jacobi rotations until the off-diagonal Frobenius norm drops
 * below 1e-14 ||M||_F. Columns are re-orthonormalized by modified
 * Gram-Schmidt, so vectors within a degenerate cluster form an arbitrary
 * orthonormal basis of that eigenspace.
 *
 * Throws NotHermitian when the input fails the relative Hermiticity check.
 */
HermitianEigensystem hermitian_eigen(const Matrix &m);

/// sum_k weights[k] v_k v_k^dagger over a precomputed eigensystem.
Matrix spectral_sum(const HermitianEigensystem &eig, std::span<const double> weights);

/// f(M) evaluated spectrally. Throws DomainError when f is not finite on
/// some eigenvalue.
template <class F>
Matrix matrix_function(const HermitianEigensystem &eig, F &&f) {
    std::vector<double> weights(eig.dim());
    for (std::size_t k = 0; k < eig.dim(); ++k) {
        weights[k] = f(eig.values[k]);
        if (!std::isfinite(weights[k])) {
            throw Error(ErrorCode::DomainError,
                        "matrix function undefined at eigenvalue " +
                            std::to_string(eig.values[k]));
        }
    }
    return spectral_sum(eig, weights);
}

template <class F> Matrix matrix_function(const Matrix &m, F &&f) {
    return matrix_function(hermitian_eigen(m), std::forward<F>(f));
}

enum class LogConvention {
    /// Any eigenvalue <= 0 is a DomainError.
    Strict,
    /// Eigenvalues below 1e-14 map to 0, so that Tr[rho log rho] follows
    /// the entropy convention 0 log 0 = 0.
    ZeroLogZero,
};

/// Natural logarithm of a Hermitian matrix.
Matrix matrix_log(const Matrix &m, LogConvention convention = LogConvention::Strict);

/**
 * Partial transpose of a 4x4 matrix on the two-qubit basis
 * {|00>, |01>, |10>, |11>}; subsystem 0 is the left qubit.
 */
Matrix partial_transpose(const Matrix &m, std::size_t subsystem);

} // namespace nuqet
