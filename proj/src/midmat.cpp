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

#include "nchess/midmat.hpp"

#include "nchess/ncparse.hpp"

namespace nchess {

MiddleMatrix::MiddleMatrix(int g, int d) : g_(g), d_(d) {
    if (d < 2) throw std::invalid_argument("middle matrix needs degree at least 2");
    blocks_.reserve(static_cast<std::size_t>((d - 1) * (d - 1)));
    for (int i = 0; i < d - 1; ++i)
        for (int j = 0; j < d - 1; ++j)
            blocks_.emplace_back(block_height(i), block_height(j), g);
}

long MiddleMatrix::nu() const {
    long v = 0;
    for (int i = 0; i <= d_ - 2; ++i) v += power_long(g_, i);
    return v;
}

long MiddleMatrix::block_offset(int i) const {
    long off = 0;
    for (int k = 0; k < i; ++k) off += block_height(k);
    return off;
}

RatMat MiddleMatrix::scalar() const {
    const long size = g_ * nu();
    RatMat out = RatMat::Zero(size, size);
    for (int i = 0; i < d_ - 1; ++i)
        for (int j = 0; j < d_ - 1; ++j)
            out.block(block_offset(i), block_offset(j), block_height(i), block_height(j)) =
                scalar_block(i, j);
    return out;
}

NcPoly MiddleMatrix::reconstruct_hessian() const {
    NcPoly out(g_);
    // V_i entry at (m, r) is h_r * reverse(m); its involution is m * h_r.
    for (int i = 0; i < d_ - 1; ++i) {
        for (int j = 0; j < d_ - 1; ++j) {
            const PolyMat& zij = block(i, j);
            for (Eigen::Index a = 0; a < zij.rows(); ++a) {
                for (Eigen::Index b = 0; b < zij.cols(); ++b) {
                    const NcPoly& entry = zij(a, b);
                    if (entry.is_zero()) continue;
                    long mrow = a / g_;
                    int r = static_cast<int>(a % g_) + 1;
                    long mcol = b / g_;
                    int s = static_cast<int>(b % g_) + 1;
                    NcPoly left = NcPoly::monomial(g_, kron_word(g_, i, mrow)) *
                                  NcPoly::direction(g_, r);
                    NcPoly right = NcPoly::direction(g_, s) *
                                   NcPoly::monomial(g_, word_reverse(kron_word(g_, j, mcol)));
                    out += left * entry * right;
                }
            }
        }
    }
    return out;
}

RatMat MiddleMatrix::evaluate_at(const std::vector<RatMat>& xs) const {
    if (static_cast<int>(xs.size()) != g_)
        throw std::invalid_argument("evaluate_at: tuple size mismatch");
    const Eigen::Index n = xs.empty() ? 1 : xs[0].rows();
    const long size = g_ * nu();
    RatMat out = RatMat::Zero(size * n, size * n);
    for (int i = 0; i < d_ - 1; ++i)
        for (int j = 0; j < d_ - 1; ++j) {
            const PolyMat& zij = block(i, j);
            for (Eigen::Index a = 0; a < zij.rows(); ++a)
                for (Eigen::Index b = 0; b < zij.cols(); ++b) {
                    if (zij(a, b).is_zero()) continue;
                    out.block((block_offset(i) + a) * n, (block_offset(j) + b) * n, n, n) =
                        evaluate(zij(a, b), xs);
                }
        }
    return out;
}

MiddleMatrix build_middle_matrix(const NcPoly& p) {
    if (!p.is_symmetric()) throw std::invalid_argument("middle matrix needs a symmetric input");
    if (!p.uses_only_x())
        throw std::invalid_argument("middle matrix input must not contain direction letters");
    auto deg = p.degree();
    if (!deg || *deg < 2) throw std::invalid_argument("middle matrix needs degree at least 2");

    const int g = p.g();
    const int d = *deg;
    MiddleMatrix z(g, d);

    NcPoly pdd = hessian(p);
    for (const auto& [w, c] : pdd.terms()) {
        // w = a h_r z h_s b with a, z, b words in x.
        std::size_t first = w.size(), second = w.size();
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (letter_from_code(w[k]).kind == LetterKind::H) {
                if (first == w.size())
                    first = k;
                else
                    second = k;
            }
        }
        Word a = w.substr(0, first);
        int r = letter_from_code(w[first]).index;
        Word mid = w.substr(first + 1, second - first - 1);
        int s = letter_from_code(w[second]).index;
        Word b = w.substr(second + 1);

        const int i = static_cast<int>(a.size());
        const int j = static_cast<int>(b.size());
        const long row = kron_index(g, a) * g + (r - 1);
        const long col = kron_index(g, word_reverse(b)) * g + (s - 1);
        z.block(i, j)(row, col).add_term(mid, c);
    }
    return z;
}

std::vector<NcPoly> recover_homogeneous(const MiddleMatrix& z) {
    const int g = z.g();
    const int d = z.d();
    std::vector<NcPoly> parts(static_cast<std::size_t>(d) + 1, NcPoly(g));
    for (int k = 2; k <= d; ++k) {
        const int i = k - 2;  // split (i, j) = (k-2, 0)
        RatMat zij = z.scalar_block(i, 0);
        NcPoly sum(g);
        for (Eigen::Index a = 0; a < zij.rows(); ++a)
            for (Eigen::Index b = 0; b < zij.cols(); ++b) {
                if (zij(a, b) == 0) continue;
                Word left = kron_word(g, i + 1, a);
                Word right = word_reverse(kron_word(g, 1, b));
                sum.add_term(left + right, zij(a, b));
            }
        parts[static_cast<std::size_t>(k)] = Rational(1, 2) * sum;
    }
    return parts;
}

GradientCoeffs gradient_coefficients(const NcPoly& p) {
    if (!p.uses_only_x())
        throw std::invalid_argument("gradient input must not contain direction letters");
    const int g = p.g();
    GradientCoeffs out;
    out.g = g;
    auto deg = p.degree();
    out.d = deg.value_or(0);
    if (out.d < 1) return out;

    for (int s = 0; s < out.d; ++s)
        out.psi.emplace_back(power_long(g, s + 1), 1, g);

    // Each word of p' is a h_r b; it lands in psi_{|b|} at (reverse(b), r),
    // contributing reverse(a) (the row psi^T carries the involutions).
    NcPoly pd = directional_derivative(p);
    for (const auto& [w, c] : pd.terms()) {
        std::size_t pos = 0;
        while (letter_from_code(w[pos]).kind != LetterKind::H) ++pos;
        Word a = w.substr(0, pos);
        int r = letter_from_code(w[pos]).index;
        Word b = w.substr(pos + 1);
        const int s = static_cast<int>(b.size());
        const long row = kron_index(g, word_reverse(b)) * g + (r - 1);
        out.psi[static_cast<std::size_t>(s)](row, 0).add_term(word_reverse(a), c);
    }
    return out;
}

PolyMat WMatrix::full() const {
    if (w.empty()) return PolyMat(0, 0, g);
    long height = 0;
    for (int i = 0; i < d; ++i) height += power_long(g, i + 1);
    PolyMat out(height, height, g);
    long roff = 0;
    for (int i = 0; i < d; ++i) {
        long coff = 0;
        for (int j = 0; j < d; ++j) {
            const PolyMat& wij = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            for (Eigen::Index a = 0; a < wij.rows(); ++a)
                for (Eigen::Index b = 0; b < wij.cols(); ++b) out(roff + a, coff + b) = wij(a, b);
            coff += wij.cols();
        }
        roff += power_long(g, i + 1);
    }
    return out;
}

WMatrix build_w(const NcPoly& p) {
    GradientCoeffs gc = gradient_coefficients(p);
    WMatrix out;
    out.g = gc.g;
    out.d = gc.d;
    for (int i = 0; i < gc.d; ++i) {
        std::vector<PolyMat> row;
        for (int j = 0; j < gc.d; ++j)
            row.push_back(gc.psi[static_cast<std::size_t>(i)] *
                          gc.psi[static_cast<std::size_t>(j)].transpose());
        out.w.push_back(std::move(row));
    }
    return out;
}

RatMat ModifiedScalarMiddle::assembled() const {
    const long nbase = base.rows();
    const long ntail = tail.size();
    RatMat out = RatMat::Zero(nbase + ntail, nbase + ntail);
    out.topLeftCorner(nbase, nbase) = base;
    out.bottomRightCorner(ntail, ntail) = lambda * (tail * tail.transpose());
    return out;
}

ModifiedScalarMiddle modified_scalar_middle(const NcPoly& p, const Rational& lambda) {
    auto deg = p.degree();
    if (!deg || *deg < 1)
        throw std::invalid_argument("modified scalar middle matrix needs degree at least 1");
    const int d = *deg;

    GradientCoeffs gc = gradient_coefficients(p);
    const PolyMat& last = gc.psi.back();
    // Degree bookkeeping forces psi_{d-1} to be constant; a violation would
    // contradict the structure theorem for the modified Hessian.
    for (Eigen::Index i = 0; i < last.rows(); ++i) {
        auto entry_deg = last(i, 0).degree();
        if (entry_deg && *entry_deg > 0)
            throw InternalConsistencyError("psi_{d-1} is not constant");
    }
    RatVec tail = last.constant_part();
    if (tail.isZero()) throw InternalConsistencyError("psi_{d-1}(0) vanishes");

    ModifiedScalarMiddle out;
    out.lambda = lambda;
    out.tail = tail;
    if (d >= 2)
        out.base = build_middle_matrix(p).scalar();
    else
        out.base = RatMat::Zero(0, 0);
    return out;
}

PolyMat k_matrix(int g, int j) {
    RatMat pi_next = reversal_permutation(g, j + 1).matrix();
    RatMat pi_cur = reversal_permutation(g, j).matrix();
    // Reversal is an involution, so the permutation matrix is its own inverse.
    PolyMat mid = poly_kron(x_col(g, 1), PolyMat::identity(power_long(g, j + 1), g));
    return PolyMat::from_rational(pi_next, g) * mid * PolyMat::from_rational(pi_cur, g);
}

CheckReport verify_oct20a8(const NcPoly& p) {
    CheckReport rep;
    MiddleMatrix z = build_middle_matrix(p);
    const int g = z.g();
    const int ell = z.d() - 2;

    std::vector<PolyMat> k;  // K_0 .. K_{ell-1}
    for (int j = 0; j < ell; ++j) k.push_back(k_matrix(g, j));

    for (int i = 0; i <= ell; ++i) {
        PolyMat sum = PolyMat::from_rational(z.scalar_block(0, i), g);
        PolyMat prod = PolyMat::identity(power_long(g, i + 1), g);
        for (int j = i + 1; j <= ell; ++j) {
            prod = k[static_cast<std::size_t>(j - 1)] * prod;  // K_{j-1} ... K_i
            sum = sum + PolyMat::from_rational(z.scalar_block(0, j), g) * prod;
        }
        if (!(sum == z.block(0, i))) {
            rep.pass = false;
            rep.detail = "row-0 constant-block expansion differs from Z_{0," + std::to_string(i) +
                         "}(x) for p = " + print(p);
            return rep;
        }
    }
    return rep;
}

AppendixReport verify_appendix(const NcPoly& p) {
    AppendixReport rep;
    auto deg = p.degree();
    if (!deg || *deg < 2) throw std::invalid_argument("appendix checks need degree at least 2");
    const int g = p.g();
    const int d = *deg;
    const int ell = d - 2;

    MiddleMatrix z = build_middle_matrix(p);
    GradientCoeffs gc = gradient_coefficients(p);
    PolyMat xr = x_row(g, 1);

    for (int s = 0; s <= d - 1; ++s) {
        PolyMat lhs = gc.psi[static_cast<std::size_t>(s)].transpose();
        PolyMat rhs = (s <= ell) ? Rational(1, 2) * (xr * z.block(0, s))
                                 : PolyMat(1, power_long(g, s + 1), g);
        rhs = rhs + PolyMat::from_rational(gc.psi_at_zero(s).transpose(), g);
        if (!(lhs == rhs)) {
            rep.n2_pass = false;
            rep.detail += "psi_" + std::to_string(s) + " does not match 1/2 [x] Z_0s + psi_s(0); ";
        }
    }

    bool all_zero = true;
    for (int j = 0; j <= ell; ++j)
        if (!gc.psi_at_zero(j).isZero()) all_zero = false;
    rep.n3n4_applicable = all_zero;
    if (all_zero) {
        WMatrix w = build_w(p);
        PolyMat q = Rational(1, 4) * (x_col(g, 1) * xr);
        for (int i = 0; i <= ell && rep.n3n4_pass; ++i)
            for (int j = 0; j <= ell && rep.n3n4_pass; ++j) {
                PolyMat lhs = w.w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                PolyMat rhs = z.block(i, 0) * q * z.block(0, j);
                if (!(lhs == rhs)) {
                    rep.n3n4_pass = false;
                    rep.detail += "W_" + std::to_string(i) + std::to_string(j) +
                                  " != Z_i0 Q Z_0j; ";
                }
            }
    }

    rep.may8a_applicable =
        p.homogeneous_part(1).is_zero() && p.homogeneous_part(d - 1).is_zero();
    if (rep.may8a_applicable) {
        if (!gc.psi_at_zero(0).isZero() || !gc.psi_at_zero(ell).isZero()) {
            rep.may8a_pass = false;
            rep.detail += "psi_0(0) or psi_{d-2}(0) nonzero despite missing degree-1/(d-1) terms; ";
        }
    }
    return rep;
}

}  // namespace nchess
