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

#ifndef NCHESS_FREEALG_HPP
#define NCHESS_FREEALG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nchess/rational.hpp"

namespace nchess {

/**
 * Free associative algebra over g symmetric noncommuting indeterminates
 * x_1..x_g together with g direction letters h_1..h_g, with exact rational
 * coefficients. Every letter is fixed by the involution, so the involution
 * of a word is its reversal.
 */

enum class LetterKind : std::uint16_t { X = 0, H = 1 };

struct Letter {
    LetterKind kind;
    int index;  // 1-based, must stay within the ambient variable count

    friend bool operator==(const Letter&, const Letter&) = default;
};

// Packed letter code: x-letters sort before h-letters, indices ascending.
using LetterCode = char16_t;

inline LetterCode letter_code(Letter l) {
    return static_cast<LetterCode>((l.kind == LetterKind::H ? 0x4000 : 0) +
                                   static_cast<std::uint16_t>(l.index));
}
inline Letter letter_from_code(LetterCode c) {
    const auto v = static_cast<std::uint16_t>(c);
    return (v & 0x4000) ? Letter{LetterKind::H, v & 0x3FFF} : Letter{LetterKind::X, v};
}

/** A monomial: sequence of letter codes. The empty word is the unit. */
using Word = std::basic_string<LetterCode>;

inline Word word_reverse(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

/** Canonical term order: by length, then lexicographic on letter codes. */
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

class NcPoly {
   public:
    using TermMap = std::map<Word, Rational, WordOrder>;

    NcPoly() : g_(0) {}
    explicit NcPoly(int g) : g_(g) { check_g(g); }

    static NcPoly zero(int g) { return NcPoly(g); }
    static NcPoly constant(int g, const Rational& c);
    static NcPoly letter(int g, Letter l);
    static NcPoly variable(int g, int j) { return letter(g, {LetterKind::X, j}); }
    static NcPoly direction(int g, int j) { return letter(g, {LetterKind::H, j}); }
    static NcPoly monomial(int g, const Word& w, const Rational& c = Rational(1));

    int g() const { return g_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /** Degree of the zero polynomial is the empty optional, never a number. */
    std::optional<int> degree() const {
        if (terms_.empty()) return std::nullopt;
        return static_cast<int>(terms_.rbegin()->first.size());
    }

    Rational coeff(const Word& w) const;
    void add_term(const Word& w, const Rational& c);  // canonicalizing

    bool uses_h() const;
    bool uses_only_x() const { return !uses_h(); }

    NcPoly involution() const;
    bool is_symmetric() const { return *this == involution(); }
    NcPoly homogeneous_part(int k) const;
    /** Sum of the terms of degree <= k. */
    NcPoly truncate_degree(int k) const;

    NcPoly operator-() const;
    NcPoly& operator+=(const NcPoly& rhs);
    NcPoly& operator-=(const NcPoly& rhs);
    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
    friend NcPoly operator*(const Rational& c, const NcPoly& p);
    friend NcPoly operator*(const NcPoly& p, const Rational& c) { return c * p; }

    friend bool operator==(const NcPoly& a, const NcPoly& b) {
        return a.terms_ == b.terms_;  // g carried separately; 0 == 0 across ambients
    }
    friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

   private:
    static void check_g(int g);
    static int unify_g(const NcPoly& a, const NcPoly& b);

    int g_;
    TermMap terms_;
};

NcPoly add(const NcPoly& p, const NcPoly& q);
NcPoly mul(const NcPoly& p, const NcPoly& q);
NcPoly involution(const NcPoly& p);
bool is_symmetric(const NcPoly& p);
NcPoly homogeneous_part(const NcPoly& p, int k);

/**
 * Replaces each x_j by sum_k M(j-1,k-1) x_k; direction letters are left
 * untouched. M must be invertible over the rationals.
 */
NcPoly substitute_linear(const NcPoly& p, const RatMat& m);

/**
 * A g-tuple of real symmetric n x n matrices. Rational entries are kept
 * exact and must be symmetric on input; floating entries are symmetrized
 * on construction.
 */
class MatrixTuple {
   public:
    MatrixTuple(int g, std::vector<RatMat> mats);
    MatrixTuple(int g, const std::vector<DblMat>& mats);

    static MatrixTuple zero(int g, int n);
    static MatrixTuple random_rational(int g, int n, std::mt19937_64& rng);

    int g() const { return g_; }
    int n() const { return n_; }
    bool exact() const { return exact_; }
    const std::vector<RatMat>& rational_entries() const;
    std::vector<DblMat> double_entries() const;

   private:
    int g_;
    int n_;
    bool exact_;
    std::vector<RatMat> rat_;
    std::vector<DblMat> dbl_;
};

/** Word-wise matrix product extended linearly; the constant term becomes p(0) I_n. */
RatMat evaluate(const NcPoly& p, const std::vector<RatMat>& xs,
                const std::vector<RatMat>* hs = nullptr);
DblMat evaluate(const NcPoly& p, const std::vector<DblMat>& xs,
                const std::vector<DblMat>* hs = nullptr);
RatMat evaluate(const NcPoly& p, const MatrixTuple& x);
RatMat evaluate(const NcPoly& p, const MatrixTuple& x, const MatrixTuple& h);

}  // namespace nchess

#endif  // NCHESS_FREEALG_HPP
