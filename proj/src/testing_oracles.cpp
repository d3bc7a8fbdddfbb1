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

#include "nchess/testing/oracles.hpp"

namespace nchess::testing {

std::vector<Rational> charpoly(const RatMat& m) {
    const Eigen::Index n = m.rows();
    std::vector<Rational> coef(static_cast<std::size_t>(n) + 1);
    coef[static_cast<std::size_t>(n)] = 1;
    RatMat mk = RatMat::Zero(n, n);
    Rational ck(1);
    for (Eigen::Index k = 1; k <= n; ++k) {
        mk = m * (mk + ck * RatMat::Identity(n, n));
        ck = -mk.trace() / Rational(static_cast<long>(k));
        coef[static_cast<std::size_t>(n - k)] = ck;
    }
    return coef;
}

Inertia charpoly_inertia(const RatMat& m) {
    if (!is_symmetric_exact(m))
        throw std::invalid_argument("charpoly_inertia: input not symmetric");
    std::vector<Rational> c = charpoly(m);

    Inertia in;
    std::size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    in.zero = static_cast<long>(low);

    auto sign_changes = [](const std::vector<Rational>& a) {
        long changes = 0;
        int last = 0;
        for (const Rational& x : a) {
            if (x == 0) continue;
            int s = x > 0 ? 1 : -1;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    };

    std::vector<Rational> q(c.begin() + static_cast<long>(low), c.end());
    in.plus = sign_changes(q);
    std::vector<Rational> qneg = q;  // q(-lambda)
    for (std::size_t k = 1; k < qneg.size(); k += 2) qneg[k] = -qneg[k];
    in.minus = sign_changes(qneg);
    return in;
}

NcPoly t_expansion_derivative(const NcPoly& p, int k) {
    NcPoly out(p.g());
    for (const auto& [w, c] : p.terms()) {
        std::vector<std::size_t> xpos;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (letter_from_code(w[i]).kind == LetterKind::X) xpos.push_back(i);
        if (static_cast<int>(xpos.size()) < k) continue;

        // iterate k-combinations of xpos
        std::vector<int> comb(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
        for (;;) {
            Word ww = w;
            for (int i = 0; i < k; ++i) {
                std::size_t pos = xpos[static_cast<std::size_t>(comb[static_cast<std::size_t>(i)])];
                Letter l = letter_from_code(ww[pos]);
                ww[pos] = letter_code({LetterKind::H, l.index});
            }
            out.add_term(ww, c);
            int i = k - 1;
            while (i >= 0 &&
                   comb[static_cast<std::size_t>(i)] ==
                       static_cast<int>(xpos.size()) - k + i)
                --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    Rational factorial(1);
    for (int i = 2; i <= k; ++i) factorial *= i;
    return factorial * out;
}

RatMat taylor_coefficient(const NcPoly& p, const std::vector<RatMat>& xs,
                          const std::vector<RatMat>& hs, int k) {
    const Eigen::Index n = xs.empty() ? 1 : xs[0].rows();
    RatMat out = RatMat::Zero(n, n);
    for (const auto& [w, c] : p.terms()) {
        const int len = static_cast<int>(w.size());
        if (len < k) continue;
        std::vector<int> comb(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
        bool more = true;
        if (k == 0) {
            RatMat prod = RatMat::Identity(n, n);
            for (LetterCode lc : w) prod = prod * xs[letter_from_code(lc).index - 1];
            out += c * prod;
            continue;
        }
        while (more) {
            RatMat prod = RatMat::Identity(n, n);
            int next = 0;
            for (int i = 0; i < len; ++i) {
                Letter l = letter_from_code(w[static_cast<std::size_t>(i)]);
                bool use_h = next < k && comb[static_cast<std::size_t>(next)] == i;
                if (use_h) ++next;
                prod = prod * (use_h ? hs[l.index - 1] : xs[l.index - 1]);
            }
            out += c * prod;
            int i = k - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == len - k + i) --i;
            if (i < 0) {
                more = false;
            } else {
                ++comb[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j)
                    comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    return out;
}

}  // namespace nchess::testing
