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

#ifndef NCHESS_RANDPOLY_HPP
#define NCHESS_RANDPOLY_HPP

#include <random>

#include "nchess/freealg.hpp"

namespace nchess {

Word random_word(int g, int length, std::mt19937_64& rng);

/** Random polynomial in x with words of length <= max_degree. */
NcPoly random_poly(int g, int max_degree, int num_words, std::mt19937_64& rng);

/** Random symmetric polynomial of degree exactly d, built by symmetrizing
    random words; at most 2*(extra_words+1) terms. */
NcPoly random_symmetric_poly(int g, int d, int extra_words, std::mt19937_64& rng);

/** Random homogeneous symmetric polynomial of degree exactly d. */
NcPoly random_homogeneous_symmetric_poly(int g, int d, int extra_words, std::mt19937_64& rng);

}  // namespace nchess

#endif  // NCHESS_RANDPOLY_HPP
