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

#include "nchess/kronops.hpp"

namespace nchess {

long power_long(int g, int j) {
    long v = 1;
    for (int i = 0; i < j; ++i) v *= g;
    return v;
}

long kron_index(int g, const Word& w) {
    long idx = 0;
    for (LetterCode lc : w) {
        Letter l = letter_from_code(lc);
        idx = idx * g + (l.index - 1);
    }
    return idx;
}

Word kron_word(int g, int j, long index) {
    Word w(static_cast<std::size_t>(j), letter_code({LetterKind::X, 1}));
    for (int k = j - 1; k >= 0; --k) {
        w[static_cast<std::size_t>(k)] =
            letter_code({LetterKind::X, static_cast<int>(index % g) + 1});
        index /= g;
    }
    return w;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.image.resize(image.size());
    for (std::size_t i = 0; i < image.size(); ++i)
        out.image[static_cast<std::size_t>(image[i])] = static_cast<long>(i);
    return out;
}

RatMat Permutation::matrix() const {
    const long n = size();
    RatMat m = RatMat::Zero(n, n);
    for (long i = 0; i < n; ++i) m(i, image[static_cast<std::size_t>(i)]) = 1;
    return m;
}

bool Permutation::is_involution() const {
    for (long i = 0; i < size(); ++i)
        if (image[static_cast<std::size_t>((*this)(i))] != i) return false;
    return true;
}

Permutation reversal_permutation(int g, int j) {
    if (g < 1 || j < 0) throw std::invalid_argument("reversal_permutation: bad arguments");
    const long n = power_long(g, j + 1);
    Permutation p;
    p.image.resize(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i)
        p.image[static_cast<std::size_t>(i)] = kron_index(g, word_reverse(kron_word(g, j + 1, i)));
    return p;
}

RatVec vec(const RatMat& a) {
    RatVec out(a.rows() * a.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i) out(j * a.rows() + i) = a(i, j);
    return out;
}

RatMat mat_g(const RatVec& w, int g) {
    if (g < 1 || w.size() % g != 0)
        throw std::invalid_argument("mat_g: length not divisible by g");
    const Eigen::Index n = w.size() / g;
    RatMat out(g, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < g; ++i) out(i, j) = w(j * g + i);
    return out;
}

RatMat structured_transpose(const RatMat& c) {
    const Eigen::Index g = c.rows();
    if (c.cols() != g * g) throw std::invalid_argument("structured_transpose: expected g x g^2");
    RatMat out(g, g * g);
    for (Eigen::Index i = 0; i < g; ++i)
        for (Eigen::Index j = 0; j < g; ++j)
            out.block(i, j * g, 1, g) = c.block(j, i * g, 1, g);
    return out;
}

PolyMat x_row(int g, int j) {
    PolyMat row(1, g, g);
    for (int i = 0; i < g; ++i) row(0, i) = NcPoly::variable(g, i + 1);
    if (j == 0) return PolyMat::identity(1, g);
    PolyMat out = row;
    for (int k = 1; k < j; ++k) out = poly_kron(out, row);
    return out;
}

PolyMat x_col(int g, int j) {
    PolyMat col(g, 1, g);
    for (int i = 0; i < g; ++i) col(i, 0) = NcPoly::variable(g, i + 1);
    if (j == 0) return PolyMat::identity(1, g);
    PolyMat out = col;
    for (int k = 1; k < j; ++k) out = poly_kron(out, col);
    return out;
}

PolyMat h_row(int g) {
    PolyMat row(1, g, g);
    for (int i = 0; i < g; ++i) row(0, i) = NcPoly::direction(g, i + 1);
    return row;
}

PolyMat h_col(int g) {
    PolyMat col(g, 1, g);
    for (int i = 0; i < g; ++i) col(i, 0) = NcPoly::direction(g, i + 1);
    return col;
}

PolyMat border_vector(int g, int j) {
    const long gj = power_long(g, j);
    PolyMat out(gj * g, 1, g);
    for (long m = 0; m < gj; ++m) {
        NcPoly tail = NcPoly::monomial(g, word_reverse(kron_word(g, j, m)));
        for (int i = 0; i < g; ++i)
            out(m * g + i, 0) = NcPoly::direction(g, i + 1) * tail;
    }
    return out;
}

PolyMat border_vector_stack(int g, int upto) {
    long height = 0;
    for (int j = 0; j <= upto; ++j) height += power_long(g, j + 1);
    PolyMat out(height, 1, g);
    long off = 0;
    for (int j = 0; j <= upto; ++j) {
        PolyMat vj = border_vector(g, j);
        for (long i = 0; i < vj.rows(); ++i) out(off + i, 0) = vj(i, 0);
        off += vj.rows();
    }
    return out;
}

}  // namespace nchess
