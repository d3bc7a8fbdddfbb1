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

#ifndef NCHESS_NCDERIV_HPP
#define NCHESS_NCDERIV_HPP

#include "nchess/freealg.hpp"

namespace nchess {

/**
 * Directional derivative p'(x)[h]: each word maps to the sum of its copies
 * with one x-letter replaced by the matching h-letter. Equals the
 * coefficient of t in p(x+th). Input must not already contain h-letters.
 */
NcPoly directional_derivative(const NcPoly& p);

/** k-fold iteration of the single-letter replacement; vanishes for k > degree. */
NcPoly kth_derivative(const NcPoly& p, int k);

/** The Hessian p''(x)[h] = second directional derivative; 0 for degree <= 1. */
NcPoly hessian(const NcPoly& p);

}  // namespace nchess

#endif  // NCHESS_NCDERIV_HPP
