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

#ifndef NCHESS_MIDMAT_HPP
#define NCHESS_MIDMAT_HPP

#include <string>
#include <vector>

#include "nchess/kronops.hpp"
#include "nchess/ncderiv.hpp"

namespace nchess {

/**
 * Middle-matrix representation of the Hessian:
 *
 *   p''(x)[h] = V(x)[h]^T Z(x) V(x)[h],
 *
 * where V stacks the border vectors V_0..V_{d-2} and Z(x) = [Z_ij(x)] is the
 * unique block matrix with blocks of size g^{i+1} x g^{j+1}. Every word of
 * p'' carries exactly two h-letters and factors uniquely as a h_i z h_j b,
 * which pins down the entry that receives its coefficient.
 *
 * Structure: Z_ij = 0 for i+j > d-2, entries of Z_ij have degree at most
 * (d-2)-(i+j), Z_ij is constant on the anti-diagonal i+j = d-2, and
 * Z_ij = Z_ji^T entrywise under the involution.
 */
class MiddleMatrix {
   public:
    MiddleMatrix(int g, int d);

    int g() const { return g_; }
    int d() const { return d_; }
    int block_count() const { return d_ - 1; }
    /** nu = 1 + g + ... + g^{d-2}; the scalar middle matrix has size g*nu. */
    long nu() const;
    long block_height(int i) const { return power_long(g_, i + 1); }
    long block_offset(int i) const;

    const PolyMat& block(int i, int j) const { return blocks_[idx(i, j)]; }
    PolyMat& block(int i, int j) { return blocks_[idx(i, j)]; }

    /** The scalar middle matrix Z(0). */
    RatMat scalar() const;
    RatMat scalar_block(int i, int j) const { return block(i, j).constant_part(); }

    /** Assembles V^T Z(x) V as an NcPoly; the defining contract gives back p''. */
    NcPoly reconstruct_hessian() const;

    /** Blockwise evaluation at a rational tuple: scalar position expands to an
        n x n block, giving a g*nu*n square matrix. */
    RatMat evaluate_at(const std::vector<RatMat>& xs) const;

   private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(d_ - 1) +
               static_cast<std::size_t>(j);
    }

    int g_;
    int d_;
    std::vector<PolyMat> blocks_;
};

MiddleMatrix build_middle_matrix(const NcPoly& p);

/** Homogeneous parts recovered from the scalar middle matrix:
    p_{k} = 1/2 [x]_{i+1} Z(0)_{ij} ([x]_{j+1})^T for any i+j = k-2.
    Returned vector is indexed by k = 0..d (parts 0 and 1 read off p itself
    are absent here: entries 0 and 1 are zero). */
std::vector<NcPoly> recover_homogeneous(const MiddleMatrix& z);

/**
 * Unique coefficients of the gradient: p'(x)[h] = sum_s psi_s(x)^T V_s(x)[h],
 * with psi_s a column of height g^{s+1} whose entries have degree at most
 * d-1-s. psi[d-1] is constant and nonzero for nonconstant p.
 */
struct GradientCoeffs {
    int g = 0;
    int d = 0;                  // degree of p (0 for constant p)
    std::vector<PolyMat> psi;   // s = 0..d-1

    RatVec psi_at_zero(int s) const { return psi[static_cast<std::size_t>(s)].constant_part(); }
};

GradientCoeffs gradient_coefficients(const NcPoly& p);

/** W_ij = psi_i psi_j^T; satisfies (p')^T p' = Vtilde^T W Vtilde with
    Vtilde = col(V_0..V_{d-1}). */
struct WMatrix {
    int g = 0;
    int d = 0;
    std::vector<std::vector<PolyMat>> w;  // (d) x (d) blocks

    PolyMat full() const;
};

WMatrix build_w(const NcPoly& p);

/** Scalar middle matrix of the modified Hessian:
    blockdiag(Z(0), lambda * psi_{d-1}(0) psi_{d-1}(0)^T). */
struct ModifiedScalarMiddle {
    RatMat base;      // Z(0), size g*nu (empty for d = 1)
    RatVec tail;      // psi_{d-1}(0), size g^d
    Rational lambda;

    RatMat assembled() const;
};

ModifiedScalarMiddle modified_scalar_middle(const NcPoly& p, const Rational& lambda);

/** K_j(x) = Pi_{j+1}^{-1} ([x-col] (x) I_{g^{j+1}}) Pi_j, of size g^{j+2} x g^{j+1}. */
PolyMat k_matrix(int g, int j);

struct CheckReport {
    bool pass = true;
    std::string detail;
};

/** Checks Z(0)_{0i} + Z(0)_{0,i+1} K_i + ... + Z(0)_{0l} K_{l-1}..K_i = Z_{0i}(x)
    symbolically for every i. */
CheckReport verify_oct20a8(const NcPoly& p);

struct AppendixReport {
    bool n2_pass = true;             // psi_s^T = 1/2 [x] Z_{0s}(x) + psi_s(0)^T
    bool n3n4_applicable = false;    // hypothesis psi_j(0) = 0 for all j <= d-2
    bool n3n4_pass = true;           // W_ij = Z_i0 Q Z_0j with Q = 1/4 x-col x-row
    bool may8a_applicable = false;   // no degree-1 and no degree-(d-1) terms
    bool may8a_pass = true;          // psi_0(0) = 0 and psi_{d-2}(0) = 0
    std::string detail;

    bool pass() const {
        return n2_pass && (!n3n4_applicable || n3n4_pass) && (!may8a_applicable || may8a_pass);
    }
};

AppendixReport verify_appendix(const NcPoly& p);

}  // namespace nchess

#endif  // NCHESS_MIDMAT_HPP
