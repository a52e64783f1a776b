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

#include "nuqet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace nuqet {

namespace {

void check_dim(std::size_t dim) {
    if (dim == 0 || dim > Matrix::kMaxDim) {
        throw Error(ErrorCode::UnsupportedDim,
                    "matrix dimension " + std::to_string(dim) +
                        " outside supported range 1..4");
    }
}

double off_diagonal_norm(const Matrix &m) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (i != j) {
                sum += std::norm(m(i, j));
            }
        }
    }
    return std::sqrt(sum);
}

// Closed form for [[a, b], [conj(b), d]].
HermitianEigensystem eigen_2x2(const Matrix &h) {
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const Complex b = h(0, 1);
    const double half_gap = 0.5 * (a - d);
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(half_gap, std::abs(b));

    HermitianEigensystem eig;
    eig.values = {mean - radius, mean + radius};
    eig.vectors = Matrix(2);

    if (std::abs(b) == 0.0) {
        // Already diagonal; order the basis vectors ascending.
        const bool swap = a > d;
        eig.vectors(swap ? 1 : 0, 0) = 1.0;
        eig.vectors(swap ? 0 : 1, 1) = 1.0;
        eig.values = {std::min(a, d), std::max(a, d)};
        return eig;
    }

    // Eigenvector of the upper eigenvalue, picking the row of (M - l+) whose
    // null vector has no cancellation.
    Complex u0;
    Complex u1;
    if (half_gap >= 0.0) {
        u0 = half_gap + radius;
        u1 = std::conj(b);
    } else {
        u0 = b;
        u1 = radius - half_gap;
    }
    const double norm = std::sqrt(std::norm(u0) + std::norm(u1));
    u0 /= norm;
    u1 /= norm;

    eig.vectors(0, 1) = u0;
    eig.vectors(1, 1) = u1;
    eig.vectors(0, 0) = -std::conj(u1);
    eig.vectors(1, 0) = std::conj(u0);
    return eig;
}

HermitianEigensystem eigen_jacobi(Matrix a) {
    const std::size_t n = a.dim();
    Matrix v = Matrix::identity(n);
    const double scale = frobenius_norm(a);
    const double target = 1e-14 * std::max(scale, std::numeric_limits<double>::min());

    constexpr int kMaxSweeps = 64;
    int sweep = 0;
    for (; sweep < kMaxSweeps && off_diagonal_norm(a) >= target; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) {
                    continue;
                }
                // Phase rotation makes a(p, q) real, then a real Givens
                // rotation annihilates it.
                const Complex phase = apq / mag;
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                Matrix rot = Matrix::identity(n);
                rot(p, p) = c;
                rot(p, q) = s;
                rot(q, p) = -s * std::conj(phase);
                rot(q, q) = c * std::conj(phase);

                a = rot.adjoint() * a * rot;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                v = v * rot;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            a(i, i) = a(i, i).real();
        }
    }
    if (sweep == kMaxSweeps && off_diagonal_norm(a) >= target) {
        throw Error(ErrorCode::NumericalInconsistency,
                    "Jacobi iteration did not converge");
    }

    HermitianEigensystem eig;
    eig.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        eig.values[i] = a(i, i).real();
    }
    eig.vectors = v;
    return eig;
}

void sort_ascending(HermitianEigensystem &eig) {
    const std::size_t n = eig.dim();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        return eig.values[l] < eig.values[r];
    });
    HermitianEigensystem sorted;
    sorted.values.resize(n);
    sorted.vectors = Matrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        sorted.values[k] = eig.values[order[k]];
        for (std::size_t i = 0; i < n; ++i) {
            sorted.vectors(i, k) = eig.vectors(i, order[k]);
        }
    }
    eig = std::move(sorted);
}

void gram_schmidt(Matrix &vectors) {
    const std::size_t n = vectors.dim();
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            Complex overlap = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                overlap += std::conj(vectors(i, j)) * vectors(i, k);
            }
            for (std::size_t i = 0; i < n; ++i) {
                vectors(i, k) -= overlap * vectors(i, j);
            }
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            norm += std::norm(vectors(i, k));
        }
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) {
            vectors(i, k) /= norm;
        }
    }
}

} // namespace

Matrix::Matrix(std::size_t dim) : dim_(dim) { check_dim(dim); }

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
    check_dim(dim_);
    std::size_t i = 0;
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw Error(ErrorCode::DimMismatch, "matrix literal is not square");
        }
        std::size_t j = 0;
        for (const auto &value : row) {
            (*this)(i, j++) = value;
        }
        ++i;
    }
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const double> entries) {
    Matrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        m(i, i) = entries[i];
    }
    return m;
}

Matrix Matrix::diagonal(std::initializer_list<double> entries) {
    return diagonal(std::span<const double>(entries.begin(), entries.size()));
}

Matrix Matrix::outer(std::span<const Complex> u, std::span<const Complex> v) {
    if (u.size() != v.size()) {
        throw Error(ErrorCode::DimMismatch, "outer product of unequal vectors");
    }
    Matrix m(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            m(i, j) = u[i] * std::conj(v[j]);
        }
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            m(i, j) = std::conj((*this)(j, i));
        }
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            m(i, j) = (*this)(j, i);
        }
    }
    return m;
}

std::vector<Complex> Matrix::column(std::size_t j) const {
    std::vector<Complex> col(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        col[i] = (*this)(i, j);
    }
    return col;
}

Matrix &Matrix::operator+=(const Matrix &rhs) {
    require_same_dim(*this, rhs, "matrix sum");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += rhs.data_[i];
    }
    return *this;
}

Matrix &Matrix::operator-=(const Matrix &rhs) {
    require_same_dim(*this, rhs, "matrix difference");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= rhs.data_[i];
    }
    return *this;
}

Matrix &Matrix::operator*=(Complex scale) noexcept {
    for (auto &entry : data_) {
        entry *= scale;
    }
    return *this;
}

Matrix operator*(const Matrix &lhs, const Matrix &rhs) {
    require_same_dim(lhs, rhs, "matrix product");
    const std::size_t n = lhs.dim();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex l = lhs(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += l * rhs(k, j);
            }
        }
    }
    return out;
}

bool operator==(const Matrix &lhs, const Matrix &rhs) noexcept {
    return lhs.dim_ == rhs.dim_ && lhs.data_ == rhs.data_;
}

Matrix HermitianEigensystem::reconstruct() const { return spectral_sum(*this, values); }

Complex trace(const Matrix &m) noexcept {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        sum += m(i, i);
    }
    return sum;
}

double frobenius_norm(const Matrix &m) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            sum += std::norm(m(i, j));
        }
    }
    return std::sqrt(sum);
}

double trace_norm(const Matrix &m) {
    const auto eig = hermitian_eigen(m);
    double sum = 0.0;
    for (double value : eig.values) {
        sum += std::abs(value);
    }
    return sum;
}

Matrix commutator(const Matrix &a, const Matrix &b) { return a * b - b * a; }

Matrix anticommutator(const Matrix &a, const Matrix &b) { return a * b + b * a; }

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
    if (u.size() != v.size()) {
        throw Error(ErrorCode::DimMismatch, "inner product of unequal vectors");
    }
    Complex sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        sum += std::conj(u[i]) * v[i];
    }
    return sum;
}

Complex matrix_element(std::span<const Complex> u, const Matrix &m,
                       std::span<const Complex> v) {
    if (u.size() != m.dim() || v.size() != m.dim()) {
        throw Error(ErrorCode::DimMismatch, "matrix element dimensions");
    }
    Complex sum = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Complex row = 0.0;
        for (std::size_t j = 0; j < m.dim(); ++j) {
            row += m(i, j) * v[j];
        }
        sum += std::conj(u[i]) * row;
    }
    return sum;
}

bool is_hermitian(const Matrix &m, double rel_tol) noexcept {
    double diff = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            diff += std::norm(m(i, j) - std::conj(m(j, i)));
        }
    }
    return std::sqrt(diff) <= rel_tol * frobenius_norm(m);
}

void require_hermitian(const Matrix &m, const char *what) {
    if (!is_hermitian(m)) {
        throw Error(ErrorCode::NotHermitian, std::string(what) + " is not Hermitian");
    }
}

void require_same_dim(const Matrix &a, const Matrix &b, const char *what) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimMismatch,
                    std::string(what) + ": dimensions " + std::to_string(a.dim()) +
                        " and " + std::to_string(b.dim()));
    }
}

HermitianEigensystem hermitian_eigen(const Matrix &m) {
    require_hermitian(m, "eigen-decomposition input");
    const Matrix h = 0.5 * (m + m.adjoint());

    HermitianEigensystem eig;
    if (h.dim() == 1) {
        eig.values = {h(0, 0).real()};
        eig.vectors = Matrix::identity(1);
        return eig;
    }
    eig = h.dim() == 2 ? eigen_2x2(h) : eigen_jacobi(h);
    sort_ascending(eig);
    gram_schmidt(eig.vectors);
    return eig;
}

Matrix spectral_sum(const HermitianEigensystem &eig, std::span<const double> weights) {
    if (weights.size() != eig.dim()) {
        throw Error(ErrorCode::DimMismatch, "spectral weights length");
    }
    const std::size_t n = eig.dim();
    Matrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (weights[k] == 0.0) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Complex left = weights[k] * eig.vectors(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += left * std::conj(eig.vectors(j, k));
            }
        }
    }
    return out;
}

Matrix matrix_log(const Matrix &m, LogConvention convention) {
    constexpr double kZeroEigen = 1e-14;
    return matrix_function(m, [convention](double x) {
        if (convention == LogConvention::ZeroLogZero && std::abs(x) < kZeroEigen) {
            return 0.0;
        }
        if (x <= 0.0) {
            throw Error(ErrorCode::DomainError,
                        "log of non-positive eigenvalue " + std::to_string(x));
        }
        return std::log(x);
    });
}

Matrix partial_transpose(const Matrix &m, std::size_t subsystem) {
    if (m.dim() != 4) {
        throw Error(ErrorCode::UnsupportedDim, "partial transpose needs a 4x4 matrix");
    }
    if (subsystem > 1) {
        throw Error(ErrorCode::InvalidArgument, "subsystem index must be 0 or 1");
    }
    Matrix out(4);
    for (std::size_t row = 0; row < 4; ++row) {
        for (std::size_t col = 0; col < 4; ++col) {
            std::size_t r[2] = {row >> 1, row & 1};
            std::size_t c[2] = {col >> 1, col & 1};
            std::swap(r[subsystem], c[subsystem]);
            out((r[0] << 1) | r[1], (c[0] << 1) | c[1]) = m(row, col);
        }
    }
    return out;
}

} // namespace nuqet
