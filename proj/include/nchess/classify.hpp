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

#ifndef NCHESS_CLASSIFY_HPP
#define NCHESS_CLASSIFY_HPP

#include <optional>
#include <string>

#include "nchess/inertia.hpp"

namespace nchess {

/**
 * Classification of symmetric nc polynomials whose Hessian admits an SDS
 * with at most one negative square. A polynomial passes exactly when
 *
 *   p = p0 + p1 + p2 + phi q + q^T phi + phi f0 phi
 *
 * with phi linear, q/f0 quadratic (or zero) and a positive semidefinite
 * block certificate tying the pieces together.
 */

enum class Verdict { SigmaZero, SigmaOne, SigmaAtLeastTwo };

/** The four mutually exclusive structure cases for mu_-(Z(0)) <= 1. */
enum class StructureCase {
    RankOneTopCorner = 1,   // mu_- = 1, rank Z(0)_{02} = 1 (degree 4)
    RankOneUpperBlock = 2,  // mu_- = 1, Z(0)_{02} = 0, rank Z(0)_{01} = 1 (degree 3)
    NegativeQuadratic = 3,  // mu_- = 1, only Z(0)_{00} present (degree 2)
    PsdQuadratic = 4,       // mu_- = 0 (degree <= 2)
};

/**
 * Structural data extracted from the scalar middle matrix. The direction u
 * is stored unnormalized together with its rational norm-square; y, v, A, q
 * and f0 carry the scaling that keeps every stated identity exact:
 *
 *   Z(0)_{01} = u (u^T (x) y^T) + u v^T + (u v^T)^{sT},
 *   Z(0)_{11} (u (x) I) = ... with (u^T u)^2 A = (u (x) I)^T Z(0)_{11} (u (x) I),
 *   q = 1/4 (u (x) y + 2v)^T ([x]_2)^T,  f0 = 1/2 x^T A x,  phi = [x] u.
 */
struct ClassificationData {
    RatVec u;           // empty when no exact direction is available (see note)
    Rational u_norm2;   // u^T u
    RatVec y;           // scaled as above; empty when not applicable
    RatVec v;
    RatMat a;           // symmetric g x g
    Rational p0;
    NcPoly p1, p2, q, f0, f1, phi;
    RatMat e1;          // PSD certificate block matrix (scaling-invariant form)
    RatMat e2;          // E1 = 2 E2
    Inertia e1_inertia;
};

struct ClassificationReport {
    Verdict verdict = Verdict::SigmaZero;
    std::optional<StructureCase> structure_case;
    HessianSignature sigma;      // (mu_+, mu_-) of Z(0); undefined for degree < 2
    std::optional<ClassificationData> data;
    NcPoly reconstruction;       // p0+p1+p2+phi q+q^T phi+phi f0 phi from the data
    bool reconstruction_exact = false;
    std::string note;
};

ClassificationReport classify_one_negative(const NcPoly& p);

/** Assembles p0 + p1 + p2 + phi q + q^T phi + phi f0 phi with phi = [x] u. */
NcPoly synthesize(const Rational& p0, const NcPoly& p1, const NcPoly& p2, const RatVec& u,
                  const NcPoly& q, const NcPoly& f0);

struct DegreeBoundReport {
    int degree = 0;
    HessianSignature sigma;
    bool holds_plus = false;
    bool holds_minus = false;

    bool pass() const { return holds_plus && holds_minus; }
};

/** Checks d <= 2 sigma_+/- + 2 for the Hessian signature. */
DegreeBoundReport degree_bound_check(const NcPoly& p);

/**
 * Berkovich factoring: given phi = [x]u, psi = [x]b with b != 0 and
 * phi f1 = f2 psi, f1(0) = f2(0) = 0, produces f3 with f1 = f3 psi and
 * f2 = phi f3, by a linear change of variables that exposes the trailing
 * letter.
 */
NcPoly berkovich_factor(const RatVec& u, const RatVec& b, const NcPoly& f1, const NcPoly& f2);

/** Matrix of a homogeneous quadratic: q = sum Q_ij x_i x_j. */
RatMat quad_form_matrix(const NcPoly& q, int g);
NcPoly quad_form_poly(const RatMat& q_mat, int g);

/** Vector of a homogeneous linear polynomial: phi = [x] u, and back. */
RatVec linear_form_vector(const NcPoly& phi, int g);
NcPoly linear_form_poly(const RatVec& u, int g);

}  // namespace nchess

#endif  // NCHESS_CLASSIFY_HPP
