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

#include "nchess/ncderiv.hpp"

namespace nchess {

namespace {

// One replacement pass: x-letters become h-letters one position at a time;
// existing h-letters are part of the direction and stay fixed.
NcPoly derive_once(const NcPoly& p) {
    NcPoly out(p.g());
    for (const auto& [w, c] : p.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            Letter l = letter_from_code(w[i]);
            if (l.kind != LetterKind::X) continue;
            Word ww = w;
            ww[i] = letter_code({LetterKind::H, l.index});
            out.add_term(ww, c);
        }
    }
    return out;
}

}  // namespace

NcPoly directional_derivative(const NcPoly& p) {
    if (p.uses_h())
        throw std::invalid_argument("derivative input already contains direction letters");
    return derive_once(p);
}

NcPoly kth_derivative(const NcPoly& p, int k) {
    if (k < 1) throw std::invalid_argument("derivative order must be at least 1");
    if (p.uses_h())
        throw std::invalid_argument("derivative input already contains direction letters");
    NcPoly out = p;
    for (int i = 0; i < k; ++i) out = derive_once(out);
    return out;
}

NcPoly hessian(const NcPoly& p) { return kth_derivative(p, 2); }

}  // namespace nchess
