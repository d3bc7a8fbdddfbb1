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

#include "nchess/freealg.hpp"

#include <algorithm>
#include <type_traits>

namespace nchess {

void NcPoly::check_g(int g) {
    if (g < 0 || g > 0x3FFF) throw std::invalid_argument("variable count out of range");
}

int NcPoly::unify_g(const NcPoly& a, const NcPoly& b) {
    // A constant (g = 0) embeds in every free algebra.
    if (a.g_ == 0) return b.g_;
    if (b.g_ == 0) return a.g_;
    if (a.g_ != b.g_) throw std::invalid_argument("ambient variable count mismatch");
    return a.g_;
}

NcPoly NcPoly::constant(int g, const Rational& c) {
    NcPoly p(g);
    if (c != 0) p.terms_.emplace(Word{}, c);
    return p;
}

NcPoly NcPoly::letter(int g, Letter l) {
    check_g(g);
    if (l.index < 1 || l.index > g) throw std::invalid_argument("letter index out of range");
    NcPoly p(g);
    p.terms_.emplace(Word(1, letter_code(l)), Rational(1));
    return p;
}

NcPoly NcPoly::monomial(int g, const Word& w, const Rational& c) {
    check_g(g);
    for (LetterCode lc : w) {
        Letter l = letter_from_code(lc);
        if (l.index < 1 || l.index > g) throw std::invalid_argument("letter index out of range");
    }
    NcPoly p(g);
    if (c != 0) p.terms_.emplace(w, c);
    return p;
}

Rational NcPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NcPoly::add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool NcPoly::uses_h() const {
    for (const auto& [w, c] : terms_)
        for (LetterCode lc : w)
            if (letter_from_code(lc).kind == LetterKind::H) return true;
    return false;
}

NcPoly NcPoly::involution() const {
    NcPoly out(g_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(word_reverse(w), c);
    return out;
}

NcPoly NcPoly::homogeneous_part(int k) const {
    NcPoly out(g_);
    if (k < 0) return out;
    for (const auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) == k) out.terms_.emplace(w, c);
    return out;
}

NcPoly NcPoly::truncate_degree(int k) const {
    NcPoly out(g_);
    for (const auto& [w, c] : terms_) {
        if (static_cast<int>(w.size()) > k) break;  // map ordered by length first
        out.terms_.emplace(w, c);
    }
    return out;
}

NcPoly NcPoly::operator-() const {
    NcPoly out(g_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

NcPoly& NcPoly::operator+=(const NcPoly& rhs) {
    g_ = unify_g(*this, rhs);
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& rhs) {
    g_ = unify_g(*this, rhs);
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    NcPoly out(NcPoly::unify_g(a, b));
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) out.add_term(wa + wb, ca * cb);
    return out;
}

NcPoly operator*(const Rational& c, const NcPoly& p) {
    NcPoly out(p.g_);
    if (c == 0) return out;
    for (const auto& [w, pc] : p.terms_) out.terms_.emplace(w, c * pc);
    return out;
}

NcPoly add(const NcPoly& p, const NcPoly& q) { return p + q; }
NcPoly mul(const NcPoly& p, const NcPoly& q) { return p * q; }
NcPoly involution(const NcPoly& p) { return p.involution(); }
bool is_symmetric(const NcPoly& p) { return p.is_symmetric(); }
NcPoly homogeneous_part(const NcPoly& p, int k) { return p.homogeneous_part(k); }

NcPoly substitute_linear(const NcPoly& p, const RatMat& m) {
    const int g = p.g();
    if (m.rows() != g || m.cols() != g)
        throw std::invalid_argument("substitution matrix must be g x g");
    if (rank_exact(m) != g) throw std::invalid_argument("substitution matrix is singular");

    std::vector<NcPoly> images(g);
    for (int j = 0; j < g; ++j) {
        NcPoly img(g);
        for (int k = 0; k < g; ++k)
            img += m(j, k) * NcPoly::variable(g, k + 1);
        images[j] = img;
    }

    NcPoly out(g);
    for (const auto& [w, c] : p.terms()) {
        NcPoly acc = NcPoly::constant(g, c);
        for (LetterCode lc : w) {
            Letter l = letter_from_code(lc);
            if (l.kind == LetterKind::X)
                acc = acc * images[l.index - 1];
            else
                acc = acc * NcPoly::letter(g, l);
        }
        out += acc;
    }
    return out;
}

namespace {

template <typename Mat>
Mat evaluate_impl(const NcPoly& p, const std::vector<Mat>& xs, const std::vector<Mat>* hs) {
    const int g = p.g();
    if (g > 0 && static_cast<int>(xs.size()) != g)
        throw std::invalid_argument("evaluate: tuple size does not match variable count");
    if (p.uses_h() && hs == nullptr)
        throw std::invalid_argument("evaluate: polynomial uses direction letters but no H given");
    if (hs && xs.size() != hs->size())
        throw std::invalid_argument("evaluate: X and H tuples differ in length");

    Eigen::Index n = xs.empty() ? (hs && !hs->empty() ? (*hs)[0].rows() : 1) : xs[0].rows();
    for (const auto& m : xs)
        if (m.rows() != n || m.cols() != n) throw std::invalid_argument("evaluate: size mismatch");
    if (hs)
        for (const auto& m : *hs)
            if (m.rows() != n || m.cols() != n)
                throw std::invalid_argument("evaluate: size mismatch");

    Mat out = Mat::Zero(n, n);
    for (const auto& [w, c] : p.terms()) {
        Mat prod = Mat::Identity(n, n);
        for (LetterCode lc : w) {
            Letter l = letter_from_code(lc);
            const Mat& factor = (l.kind == LetterKind::X) ? xs[l.index - 1] : (*hs)[l.index - 1];
            prod = prod * factor;
        }
        if constexpr (std::is_same_v<typename Mat::Scalar, double>)
            out += c.get_d() * prod;
        else
            out += c * prod;
    }
    return out;
}

}  // namespace

RatMat evaluate(const NcPoly& p, const std::vector<RatMat>& xs, const std::vector<RatMat>* hs) {
    return evaluate_impl<RatMat>(p, xs, hs);
}

DblMat evaluate(const NcPoly& p, const std::vector<DblMat>& xs, const std::vector<DblMat>* hs) {
    return evaluate_impl<DblMat>(p, xs, hs);
}

MatrixTuple::MatrixTuple(int g, std::vector<RatMat> mats)
    : g_(g), exact_(true), rat_(std::move(mats)) {
    if (static_cast<int>(rat_.size()) != g)
        throw std::invalid_argument("matrix tuple must contain g matrices");
    n_ = rat_.empty() ? 0 : static_cast<int>(rat_[0].rows());
    for (const auto& m : rat_) {
        if (m.rows() != n_ || m.cols() != n_)
            throw std::invalid_argument("matrix tuple entries must share a common square size");
        if (!is_symmetric_exact(m))
            throw std::invalid_argument("rational tuple entries must be exactly symmetric");
    }
}

MatrixTuple::MatrixTuple(int g, const std::vector<DblMat>& mats) : g_(g), exact_(false) {
    if (static_cast<int>(mats.size()) != g)
        throw std::invalid_argument("matrix tuple must contain g matrices");
    n_ = mats.empty() ? 0 : static_cast<int>(mats[0].rows());
    for (const auto& m : mats) {
        if (m.rows() != n_ || m.cols() != n_)
            throw std::invalid_argument("matrix tuple entries must share a common square size");
        dbl_.push_back((m + m.transpose()) / 2.0);
    }
}

MatrixTuple MatrixTuple::zero(int g, int n) {
    std::vector<RatMat> mats(g, RatMat::Zero(n, n));
    return MatrixTuple(g, std::move(mats));
}

MatrixTuple MatrixTuple::random_rational(int g, int n, std::mt19937_64& rng) {
    std::vector<RatMat> mats;
    mats.reserve(g);
    for (int j = 0; j < g; ++j) mats.push_back(random_symmetric_rat_matrix(rng, n));
    return MatrixTuple(g, std::move(mats));
}

const std::vector<RatMat>& MatrixTuple::rational_entries() const {
    if (!exact_) throw std::invalid_argument("tuple holds floating entries");
    return rat_;
}

std::vector<DblMat> MatrixTuple::double_entries() const {
    if (!exact_) return dbl_;
    std::vector<DblMat> out;
    out.reserve(rat_.size());
    for (const auto& m : rat_) out.push_back(rat_to_double_mat(m));
    return out;
}

RatMat evaluate(const NcPoly& p, const MatrixTuple& x) {
    return evaluate(p, x.rational_entries());
}

RatMat evaluate(const NcPoly& p, const MatrixTuple& x, const MatrixTuple& h) {
    const auto& hs = h.rational_entries();
    return evaluate(p, x.rational_entries(), &hs);
}

}  // namespace nchess
