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

#ifndef NCHESS_KRONOPS_HPP
#define NCHESS_KRONOPS_HPP

#include <random>
#include <string>
#include <vector>

#include "nchess/polymat.hpp"

namespace nchess {

/**
 * Index algebra for j-fold Kronecker products of the row [x_1 .. x_g].
 * The word w = x_{i_1} ... x_{i_j} sits at position
 * sum_k (i_k - 1) g^{j-k}: the leftmost letter is most significant.
 */

long kron_index(int g, const Word& w);
Word kron_word(int g, int j, long index);  // x-word of length j
long power_long(int g, int j);

/** Bijection of {0..size-1}; image[i] is where index i is sent. */
struct Permutation {
    std::vector<long> image;

    long size() const { return static_cast<long>(image.size()); }
    long operator()(long i) const { return image[static_cast<std::size_t>(i)]; }
    Permutation inverse() const;
    /** Matrix P with (P v)_i = v_{image[i]}. */
    RatMat matrix() const;
    bool is_involution() const;
};

/**
 * The permutation sending the index of each word of length j+1 to the index
 * of its reversal; realizes the column/row Kronecker exchange for x-vectors.
 */
Permutation reversal_permutation(int g, int j);

/** Column-stacking of a g x n matrix and its inverse. */
RatVec vec(const RatMat& a);
RatMat mat_g(const RatVec& w, int g);

/**
 * Structured transpose of a g x g^2 matrix viewed as a g x g block matrix
 * with 1 x g rows as entries: block (i,j) moves to (j,i).
 */
RatMat structured_transpose(const RatMat& c);

/** Symbolic rows/columns of letters and their Kronecker powers. */
PolyMat x_row(int g, int j);   // 1 x g^j, entries: x-words of length j
PolyMat x_col(int g, int j);   // g^j x 1
PolyMat h_row(int g);          // 1 x g
PolyMat h_col(int g);          // g x 1

/**
 * Border vector V_j(x)[h]: column of height g^{j+1} whose transpose is
 * [x]_j (x) [h]; the entry at Kronecker position (m, i) is h_i * reverse(m).
 */
PolyMat border_vector(int g, int j);
/** col(V_0, ..., V_upto). */
PolyMat border_vector_stack(int g, int upto);

/** Executable identity suite over random rational instantiations. */
enum class IdentityId {
    Ids1, Ids2, Ids3, Ids4, Ids5, Ids6, Ids7, Ids8, Ids9, Ids10,
    Ids11, Ids12, Ids13, Ids14, Ids15,
    Nicesplit, Jun3a7, Aug12a8, Aug14c8, Z01symGeneral,
};

struct IdentityReport {
    IdentityId id;
    std::string name;
    bool pass;
    int trials;
    std::string detail;  // counterexample description when pass is false
};

const std::vector<IdentityId>& all_identities();
std::string identity_name(IdentityId id);

IdentityReport verify_identity(IdentityId id, int g, std::mt19937_64& rng, int trials = 20);
std::vector<IdentityReport> run_identity_suite(const std::vector<int>& gs, std::uint64_t seed,
                                               int trials = 20);

}  // namespace nchess

#endif  // NCHESS_KRONOPS_HPP
