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

#ifndef NCHESS_RATIONAL_HPP
#define NCHESS_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Dense>
#include <random>
#include <stdexcept>
#include <string>

namespace Eigen {

/** Exact rational scalars for Eigen matrices. */
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    typedef mpq_class Literal;

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

}  // namespace Eigen

namespace nchess {

/** All symbolic coefficients are exact rationals; no floating point in the core. */
using Rational = mpq_class;

using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using DblMat = Eigen::MatrixXd;
using DblVec = Eigen::VectorXd;

/** Raised when a paper-guaranteed identity fails inside the library. */
class InternalConsistencyError : public std::logic_error {
   public:
    explicit InternalConsistencyError(const std::string& what) : std::logic_error(what) {}
};

inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

/** Parses "a" or "a/b"; throws std::invalid_argument on malformed input or zero denominator. */
Rational rat_from_string(const std::string& s);

inline double rat_to_double(const Rational& q) { return q.get_d(); }

RatMat rat_kron(const RatMat& a, const RatMat& b);
RatMat rat_from_double_mat(const DblMat& m);  // exact binary-float embedding
DblMat rat_to_double_mat(const RatMat& m);
bool is_symmetric_exact(const RatMat& m);
long rank_exact(const RatMat& m);
RatMat kernel_basis_exact(const RatMat& m);  // columns span ker(m)
RatMat inverse_exact(const RatMat& m);       // throws std::invalid_argument if singular

/** Uniform random rational with small integer numerator/denominator. */
Rational random_rational(std::mt19937_64& rng, long lo = -4, long hi = 4, long max_den = 3);
RatMat random_rat_matrix(std::mt19937_64& rng, int rows, int cols, long lo = -4, long hi = 4,
                         long max_den = 3);
RatMat random_symmetric_rat_matrix(std::mt19937_64& rng, int n, long lo = -4, long hi = 4,
                                   long max_den = 3);
RatMat random_invertible_rat_matrix(std::mt19937_64& rng, int n);

}  // namespace nchess

#endif  // NCHESS_RATIONAL_HPP
