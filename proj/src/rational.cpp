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

#include "nchess/rational.hpp"

#include <Eigen/LU>

namespace nchess {

Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    // mpq_class accepts leading '+', which the grammar does not.
    std::string t = s;
    for (char c : t) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw std::invalid_argument("malformed rational literal: " + s);
    }
    try {
        Rational q(t, 10);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator in: " + s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

RatMat rat_kron(const RatMat& a, const RatMat& b) {
    RatMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

RatMat rat_from_double_mat(const DblMat& m) {
    RatMat out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

DblMat rat_to_double_mat(const RatMat& m) {
    DblMat out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
    return out;
}

bool is_symmetric_exact(const RatMat& m) {
    if (m.rows() != m.cols()) return false;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

long rank_exact(const RatMat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::FullPivLU<RatMat> lu(m);
    lu.setThreshold(Rational(0));
    return static_cast<long>(lu.rank());
}

RatMat kernel_basis_exact(const RatMat& m) {
    if (m.rows() == 0) {
        // Everything is in the kernel of a 0-row map.
        RatMat id = RatMat::Identity(m.cols(), m.cols());
        return id;
    }
    Eigen::FullPivLU<RatMat> lu(m);
    lu.setThreshold(Rational(0));
    return lu.kernel();
}

RatMat inverse_exact(const RatMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    Eigen::FullPivLU<RatMat> lu(m);
    lu.setThreshold(Rational(0));
    if (lu.rank() != m.rows()) throw std::invalid_argument("matrix is singular");
    return lu.solve(RatMat::Identity(m.rows(), m.cols()));
}

Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

RatMat random_rat_matrix(std::mt19937_64& rng, int rows, int cols, long lo, long hi,
                         long max_den) {
    RatMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = random_rational(rng, lo, hi, max_den);
    return m;
}

RatMat random_symmetric_rat_matrix(std::mt19937_64& rng, int n, long lo, long hi, long max_den) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            m(i, j) = random_rational(rng, lo, hi, max_den);
            m(j, i) = m(i, j);
        }
    return m;
}

RatMat random_invertible_rat_matrix(std::mt19937_64& rng, int n) {
    for (;;) {
        RatMat m = random_rat_matrix(rng, n, n, -3, 3, 2);
        if (rank_exact(m) == n) return m;
    }
}

}  // namespace nchess
