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

#ifndef NCHESS_POSITIVITY_HPP
#define NCHESS_POSITIVITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "nchess/inertia.hpp"

namespace nchess {

/**
 * Numeric/exact evaluation layer: Hessian forms at a point (X, v),
 * border-vector linear maps, codimension counting, and the pointwise
 * positivity tests for the plain/modified/relaxed Hessians.
 *
 * Coordinates on the direction space: for each variable, the n(n+1)/2
 * basis matrices E_ii and E_ij + E_ji (i < j), no normalization.
 */

long sym_coord_dim(int g, int n);
std::vector<RatMat> tuple_from_coords(const RatVec& coords, int g, int n);
std::vector<DblMat> tuple_from_coords(const DblVec& coords, int g, int n);

/** p(X,H) v computed word-by-word with matrix-vector products. */
RatVec apply_to_vector(const NcPoly& p, const std::vector<RatMat>& xs,
                       const std::vector<RatMat>& hs, const RatVec& v);
DblVec apply_to_vector(const NcPoly& p, const std::vector<DblMat>& xs,
                       const std::vector<DblMat>& hs, const DblVec& v);

/**
 * Matrix of the linear map H -> col(V_0(X)[H] v, ..., V_upto(X)[H] v)
 * in the coordinates above; exact for rational inputs.
 */
RatMat border_map(int g, const std::vector<RatMat>& xs, const RatVec& v, int upto);

struct TransportReport {
    Inertia big;    // inertia of Z(X)
    Inertia small;  // inertia of Z(0)
    int n = 1;
    bool pass = false;
};

/** Checks mu(Z(X)) = n * mu(Z(0)) exactly. */
TransportReport middle_inertia_transport(const NcPoly& p, const std::vector<RatMat>& xs);

struct ChsyReport {
    bool independent = false;  // {m(X)v : |m| <= r} linearly independent
    long codim = -1;
    long bound = -1;
    bool equality_case = false;  // k == r
    bool pass = false;           // bound holds (equality at k = r)
};

/** Codimension of {col(V_0..V_k)(X)[H] v : H} against the combinatorial bound
    n g (alpha_k - alpha_r) + g alpha_r (alpha_r - 1)/2, equality at k = r. */
ChsyReport chsy_codim(int g, const std::vector<RatMat>& xs, const RatVec& v, int k, int r);

struct HessianVariant {
    enum class Kind { Plain, Modified, Relaxed } kind = Kind::Plain;
    Rational lambda = 0;
    Rational delta = 0;

    static HessianVariant plain() { return {}; }
    static HessianVariant modified(Rational lambda);
    static HessianVariant relaxed(Rational lambda, Rational delta);
};

/** The symmetric matrix M with coords(H)^T M coords(H) = <variant(X)[H] v, v>. */
RatMat hessian_form(const NcPoly& p, const std::vector<RatMat>& xs, const RatVec& v,
                    const HessianVariant& variant);

struct PositivityVerdict {
    enum class Kind { Positive, Negative, Indeterminate } kind;
    double lambda_used = 0;                  // Positive only
    std::vector<DblMat> witness;             // Negative only: the direction H
    double witness_value = 0;                // form value at the witness (any lambda)
    std::string reason;
};

/**
 * Pointwise relaxed-Hessian positivity at (X, v): Negative is certified on
 * the lambda-insensitive subspace ker(H -> p'(X)[H]v); Positive is declared
 * when some lambda on a doubling schedule up to lambda_max renders the form
 * numerically PSD; otherwise Indeterminate.
 */
PositivityVerdict relaxed_positivity(const NcPoly& p, const std::vector<RatMat>& xs,
                                     const RatVec& v, const Rational& delta, double lambda_max,
                                     double tol);

struct RelativeReport {
    bool psd = false;          // plain form PSD on the subspace (exact)
    long codim = -1;           // of {V(X)[H]v : H in subspace}
    std::optional<int> implied_k;  // smallest k with codim <= k n - 1
    long sigma_minus = -1;     // from the scalar middle matrix
    bool consistent = true;    // psd && implied_k => sigma_minus < k
};

/** Positivity of the plain Hessian restricted to a subspace of directions,
    with the codimension-based signature bound cross-checked exactly. */
RelativeReport relative_hessian_positivity(const NcPoly& p, const std::vector<RatMat>& xs,
                                           const RatVec& v,
                                           const std::vector<RatVec>& subspace_coords);

/** Samples small-integer (X, v) until {m(X)v : |m| <= r} is exactly independent. */
std::pair<std::vector<RatMat>, RatVec> make_generic_point(int g, int n, int r,
                                                          std::mt19937_64& rng);

}  // namespace nchess

#endif  // NCHESS_POSITIVITY_HPP
