/* Copyright 2026 The feynman-clock Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "fclock/common.hpp"

namespace fclock {

/// Dense complex matrix, row-major storage.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("ComplexMatrix: entry count does not match rows*cols");
    }

    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("ComplexMatrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<cplx>& entries() const { return data_; }
    std::vector<cplx>& entries() { return data_; }

    ComplexMatrix adjoint() const {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
        return out;
    }

    ComplexMatrix operator*(const ComplexMatrix& rhs) const {
        if (cols_ != rhs.rows_)
            throw std::invalid_argument("ComplexMatrix: dimension mismatch in product");
        ComplexMatrix out(rows_, rhs.cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const cplx a = (*this)(r, k);
                if (a == cplx(0.0, 0.0)) continue;
                for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
            }
        }
        return out;
    }

    ComplexMatrix operator*(cplx s) const {
        ComplexMatrix out = *this;
        for (auto& v : out.data_) v *= s;
        return out;
    }

    ComplexMatrix operator+(const ComplexMatrix& rhs) const {
        require_same_shape(rhs);
        ComplexMatrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
        return out;
    }

    ComplexMatrix operator-(const ComplexMatrix& rhs) const {
        require_same_shape(rhs);
        ComplexMatrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
        return out;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : data_) m = std::max(m, std::abs(v));
        return m;
    }

    /// max |H_rc - conj(H_cr)|; zero for exactly Hermitian input.
    double hermiticity_error() const {
        double m = 0.0;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        return m;
    }

    /// max |(M^dag M - I)_rc|.
    double unitarity_error() const {
        if (!square()) return 1.0;
        double m = 0.0;
        for (std::size_t r = 0; r < cols_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                cplx s = 0.0;
                for (std::size_t k = 0; k < rows_; ++k)
                    s += std::conj((*this)(k, r)) * (*this)(k, c);
                if (r == c) s -= 1.0;
                m = std::max(m, std::abs(s));
            }
        }
        return m;
    }

private:
    void require_same_shape(const ComplexMatrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw std::invalid_argument("ComplexMatrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

inline ComplexMatrix operator*(cplx s, const ComplexMatrix& m) { return m * s; }

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar)
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const cplx v = a(ar, ac);
            if (v == cplx(0.0, 0.0)) continue;
            for (std::size_t br = 0; br < b.rows(); ++br)
                for (std::size_t bc = 0; bc < b.cols(); ++bc)
                    out(ar * b.rows() + br, ac * b.cols() + bc) = v * b(br, bc);
        }
    return out;
}

inline std::vector<cplx> mat_vec(const ComplexMatrix& m, const std::vector<cplx>& v) {
    if (m.cols() != v.size())
        throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<cplx> out(m.rows(), cplx(0.0, 0.0));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        cplx s = 0.0;
        for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

}  // namespace fclock
