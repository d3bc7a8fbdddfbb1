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

#ifndef NCHESS_INERTIA_HPP
#define NCHESS_INERTIA_HPP

#include <vector>

#include "nchess/midmat.hpp"

namespace nchess {

struct Inertia {
    long plus = 0;
    long minus = 0;
    long zero = 0;

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/**
 * Congruence certificate: T invertible rational, D block diagonal with the
 * 1x1 and hyperbolic 2x2 pivots of the reduction, and T^T D T equal to the
 * input exactly. Signs of the pivots count the inertia (Sylvester).
 */
struct CongruenceCert {
    RatMat t;
    RatMat d;
    // Pivot record: (position, size); size 1 entries carry the diagonal value,
    // size 2 entries are hyperbolic pairs contributing one sign each.
    std::vector<std::pair<long, int>> pivots;

    bool reconstructs(const RatMat& m) const;
};

/** Exact inertia by symmetric Gaussian elimination: largest-magnitude 1x1
    diagonal pivots, hyperbolic 2x2 pivots when the remaining diagonal
    vanishes. Input must be exactly symmetric. */
std::pair<Inertia, CongruenceCert> exact_inertia(const RatMat& m);
Inertia inertia_of(const RatMat& m);
bool is_psd_exact(const RatMat& m);

/** Signature pair (mu_plus, mu_minus) of the scalar middle matrix; equals the
    minimal SDS counts for the Hessian. degree < 2 yields (0,0), flagged. */
struct HessianSignature {
    long plus = 0;
    long minus = 0;
    bool defined = false;  // false when degree(p) < 2
};

HessianSignature min_signature_hessian(const NcPoly& p);

/** One weighted hermitian square: weight * f^T f with weight > 0. */
struct SdsTerm {
    Rational weight;
    NcPoly f;
};

struct SdsDecomposition {
    std::vector<SdsTerm> plus_terms;
    std::vector<SdsTerm> minus_terms;

    NcPoly expand() const;
};

/**
 * Minimal SDS of the Hessian: p'' = sum w+ f^T f - sum w- f^T f with exactly
 * (mu_plus, mu_minus) squares. The f's are polynomial rows applied to the
 * border vector, produced from the congruence certificate of Z(0) and the
 * unitriangular completion B(x) of the middle matrix (Z(x) = Z(0) B(x)),
 * symmetrized through its rational square root.
 */
SdsDecomposition sds_from_hessian(const NcPoly& p);

/** Valid (not necessarily minimal) SDS of a symmetric p via a Gram matrix
    over the monomials of degree <= ceil(d/2) with a balanced-split deposit. */
SdsDecomposition gram_sds(const NcPoly& p);

}  // namespace nchess

#endif  // NCHESS_INERTIA_HPP
