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

#include "nchess/randpoly.hpp"

namespace nchess {

Word random_word(int g, int length, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(1, g);
    Word w;
    w.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i)
        w.push_back(letter_code({LetterKind::X, pick(rng)}));
    return w;
}

NcPoly random_poly(int g, int max_degree, int num_words, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(0, max_degree);
    NcPoly p(g);
    for (int i = 0; i < num_words; ++i) {
        Rational c = random_rational(rng, -3, 3, 2);
        if (c == 0) c = 1;
        p.add_term(random_word(g, len(rng), rng), c);
    }
    return p;
}

namespace {

NcPoly symmetrize_words(int g, int d, int extra_words, bool homogeneous, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(homogeneous ? d : 0, d);
    for (;;) {
        NcPoly p(g);
        Word lead = random_word(g, d, rng);
        Rational clead = random_rational(rng, -3, 3, 2);
        if (clead == 0) clead = 1;
        p += clead * (NcPoly::monomial(g, lead) + NcPoly::monomial(g, word_reverse(lead)));
        for (int i = 0; i < extra_words; ++i) {
            Rational c = random_rational(rng, -3, 3, 2);
            if (c == 0) continue;
            Word w = random_word(g, len(rng), rng);
            p += c * (NcPoly::monomial(g, w) + NcPoly::monomial(g, word_reverse(w)));
        }
        if (p.degree() && *p.degree() == d) return p;
    }
}

}  // namespace

NcPoly random_symmetric_poly(int g, int d, int extra_words, std::mt19937_64& rng) {
    return symmetrize_words(g, d, extra_words, false, rng);
}

NcPoly random_homogeneous_symmetric_poly(int g, int d, int extra_words, std::mt19937_64& rng) {
    return symmetrize_words(g, d, extra_words, true, rng);
}

}  // namespace nchess
