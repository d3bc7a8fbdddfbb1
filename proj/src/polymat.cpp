/*
   Copyright 2026 The nchess authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "nchess/polymat.hpp"

namespace nchess {

namespace {
int unify_g(int a, int b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a != b) throw std::invalid_argument("ambient variable count mismatch");
    return a;
}
}  // namespace

PolyMat PolyMat::from_rational(const RatMat& m, int g) {
    PolyMat out(m.rows(), m.cols(), g);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(i, j) = NcPoly::constant(g, m(i, j));
    return out;
}

PolyMat PolyMat::identity(Eigen::Index n, int g) {
    PolyMat out(n, n, g);
    for (Eigen::Index i = 0; i < n; ++i) out(i, i) = NcPoly::constant(g, 1);
    return out;
}

PolyMat PolyMat::transpose() const {
    PolyMat out(cols_, rows_, g_);
    for (Eigen::Index i = 0; i < rows_; ++i)
        for (Eigen::Index j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).involution();
    return out;
}

bool PolyMat::is_zero() const {
    for (const auto& p : data_)
        if (!p.is_zero()) return false;
    return true;
}

RatMat PolyMat::constant_part() const {
    RatMat out(rows_, cols_);
    for (Eigen::Index i = 0; i < rows_; ++i)
        for (Eigen::Index j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).coeff(Word{});
    return out;
}

PolyMat PolyMat::operator-() const {
    PolyMat out(rows_, cols_, g_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = -data_[k];
    return out;
}

PolyMat operator+(const PolyMat& a, const PolyMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("polynomial matrix shape mismatch");
    PolyMat out(a.rows_, a.cols_, unify_g(a.g_, b.g_));
    for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
    return out;
}

PolyMat operator-(const PolyMat& a, const PolyMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("polynomial matrix shape mismatch");
    PolyMat out(a.rows_, a.cols_, unify_g(a.g_, b.g_));
    for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
    return out;
}

PolyMat operator*(const PolyMat& a, const PolyMat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("polynomial matrix shape mismatch");
    PolyMat out(a.rows_, b.cols_, unify_g(a.g_, b.g_));
    for (Eigen::Index i = 0; i < a.rows_; ++i)
        for (Eigen::Index k = 0; k < a.cols_; ++k) {
            const NcPoly& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (Eigen::Index j = 0; j < b.cols_; ++j) {
                const NcPoly& bkj = b(k, j);
                if (bkj.is_zero()) continue;
                out(i, j) += aik * bkj;
            }
        }
    return out;
}

PolyMat operator*(const Rational& c, const PolyMat& m) {
    PolyMat out(m.rows_, m.cols_, m.g_);
    for (std::size_t k = 0; k < m.data_.size(); ++k) out.data_[k] = c * m.data_[k];
    return out;
}

PolyMat operator*(const NcPoly& p, const PolyMat& m) {
    PolyMat out(m.rows_, m.cols_, unify_g(p.g(), m.g_));
    for (std::size_t k = 0; k < m.data_.size(); ++k) out.data_[k] = p * m.data_[k];
    return out;
}

PolyMat operator*(const PolyMat& m, const NcPoly& p) {
    PolyMat out(m.rows_, m.cols_, unify_g(p.g(), m.g_));
    for (std::size_t k = 0; k < m.data_.size(); ++k) out.data_[k] = m.data_[k] * p;
    return out;
}

bool operator==(const PolyMat& a, const PolyMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    return a.data_ == b.data_;
}

PolyMat poly_kron(const PolyMat& a, const PolyMat& b) {
    PolyMat out(a.rows() * b.rows(), a.cols() * b.cols(), unify_g(a.g(), b.g()));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

}  // namespace nchess
