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

#ifndef NCHESS_TESTING_ORACLES_HPP
#define NCHESS_TESTING_ORACLES_HPP

#include "nchess/freealg.hpp"
#include "nchess/inertia.hpp"

namespace nchess::testing {

/**
 * Independent reference computations used only to cross-check the library:
 * they follow a different algorithmic route than the implementation they
 * validate.
 */

/** Coefficients of det(lambda I - M), constant term first (Faddeev-LeVerrier). */
std::vector<Rational> charpoly(const RatMat& m);

/** Inertia by sign counting on the characteristic polynomial: exact for
    symmetric matrices, where every root is real and Descartes' rule of
    signs is sharp. */
Inertia charpoly_inertia(const RatMat& m);

/** k-th derivative via the coefficient of t^k in p(x + t h) (subset
    enumeration, not iterated replacement), times k!. */
NcPoly t_expansion_derivative(const NcPoly& p, int k);

/** Coefficient of t^k in p(X + t H), as an exact matrix. */
RatMat taylor_coefficient(const NcPoly& p, const std::vector<RatMat>& xs,
                          const std::vector<RatMat>& hs, int k);

}  // namespace nchess::testing

#endif  // NCHESS_TESTING_ORACLES_HPP
