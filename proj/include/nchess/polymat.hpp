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

#ifndef NCHESS_POLYMAT_HPP
#define NCHESS_POLYMAT_HPP

#include <vector>

#include "nchess/freealg.hpp"

namespace nchess {

/** Dense matrix with NcPoly entries. Transposition applies the involution
    entrywise, matching transposition of matrix polynomials. */
class PolyMat {
   public:
    PolyMat() : rows_(0), cols_(0), g_(0) {}
    PolyMat(Eigen::Index rows, Eigen::Index cols, int g)
        : rows_(rows), cols_(cols), g_(g), data_(static_cast<std::size_t>(rows * cols), NcPoly(g)) {}

    static PolyMat from_rational(const RatMat& m, int g);
    static PolyMat identity(Eigen::Index n, int g);

    Eigen::Index rows() const { return rows_; }
    Eigen::Index cols() const { return cols_; }
    int g() const { return g_; }

    NcPoly& operator()(Eigen::Index i, Eigen::Index j) {
        return data_[static_cast<std::size_t>(i * cols_ + j)];
    }
    const NcPoly& operator()(Eigen::Index i, Eigen::Index j) const {
        return data_[static_cast<std::size_t>(i * cols_ + j)];
    }

    /** Entrywise involution plus index transposition. */
    PolyMat transpose() const;

    bool is_zero() const;
    /** Constant part: every entry evaluated at x = 0 (and h = 0). */
    RatMat constant_part() const;

    PolyMat operator-() const;
    friend PolyMat operator+(const PolyMat& a, const PolyMat& b);
    friend PolyMat operator-(const PolyMat& a, const PolyMat& b);
    friend PolyMat operator*(const PolyMat& a, const PolyMat& b);
    friend PolyMat operator*(const Rational& c, const PolyMat& m);
    friend PolyMat operator*(const NcPoly& p, const PolyMat& m);
    friend PolyMat operator*(const PolyMat& m, const NcPoly& p);
    friend bool operator==(const PolyMat& a, const PolyMat& b);
    friend bool operator!=(const PolyMat& a, const PolyMat& b) { return !(a == b); }

   private:
    Eigen::Index rows_, cols_;
    int g_;
    std::vector<NcPoly> data_;
};

PolyMat poly_kron(const PolyMat& a, const PolyMat& b);

}  // namespace nchess

#endif  // NCHESS_POLYMAT_HPP
