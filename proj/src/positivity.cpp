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

#include "nchess/positivity.hpp"

#include <Eigen/Eigenvalues>

#include "nchess/ncderiv.hpp"

namespace nchess {

long sym_coord_dim(int g, int n) { return static_cast<long>(g) * n * (n + 1) / 2; }

namespace {

struct CoordBasis {
    int n;
    // (i, j) with i <= j; E_ii or E_ij + E_ji
    std::vector<std::pair<int, int>> pairs;

    explicit CoordBasis(int n_) : n(n_) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) pairs.emplace_back(i, j);
    }
    long per_var() const { return static_cast<long>(pairs.size()); }
};

template <typename Mat, typename Vec>
std::vector<Mat> tuple_from_coords_impl(const Vec& coords, int g, int n) {
    CoordBasis basis(n);
    if (coords.size() != g * basis.per_var())
        throw std::invalid_argument("coordinate vector has wrong length");
    std::vector<Mat> out(static_cast<std::size_t>(g), Mat::Zero(n, n));
    for (int r = 0; r < g; ++r)
        for (long k = 0; k < basis.per_var(); ++k) {
            auto [i, j] = basis.pairs[static_cast<std::size_t>(k)];
            auto c = coords(r * basis.per_var() + k);
            out[static_cast<std::size_t>(r)](i, j) += c;
            if (i != j) out[static_cast<std::size_t>(r)](j, i) += c;
        }
    return out;
}

}  // namespace

std::vector<RatMat> tuple_from_coords(const RatVec& coords, int g, int n) {
    return tuple_from_coords_impl<RatMat>(coords, g, n);
}
std::vector<DblMat> tuple_from_coords(const DblVec& coords, int g, int n) {
    return tuple_from_coords_impl<DblMat>(coords, g, n);
}

template <typename Mat, typename Vec>
static Vec apply_to_vector_impl(const NcPoly& p, const std::vector<Mat>& xs,
                                const std::vector<Mat>& hs, const Vec& v) {
    Vec out = Vec::Zero(v.size());
    for (const auto& [w, c] : p.terms()) {
        Vec acc = v;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            Letter l = letter_from_code(*it);
            acc = (l.kind == LetterKind::X ? xs[l.index - 1] : hs[l.index - 1]) * acc;
        }
        if constexpr (std::is_same_v<typename Mat::Scalar, double>)
            out += c.get_d() * acc;
        else
            out += c * acc;
    }
    return out;
}

RatVec apply_to_vector(const NcPoly& p, const std::vector<RatMat>& xs,
                       const std::vector<RatMat>& hs, const RatVec& v) {
    return apply_to_vector_impl<RatMat>(p, xs, hs, v);
}
DblVec apply_to_vector(const NcPoly& p, const std::vector<DblMat>& xs,
                       const std::vector<DblMat>& hs, const DblVec& v) {
    return apply_to_vector_impl<DblMat>(p, xs, hs, v);
}

RatMat border_map(int g, const std::vector<RatMat>& xs, const RatVec& v, int upto) {
    const int n = static_cast<int>(v.size());
    CoordBasis basis(n);
    const long cols = g * basis.per_var();

    long height = 0;
    for (int k = 0; k <= upto; ++k) height += power_long(g, k + 1);
    RatMat map = RatMat::Zero(height * n, cols);

    // w_{k, m} = reverse(m)(X) v, built by the suffix recursion
    // w[idx] = X_{last letter} * w[idx / g].
    std::vector<RatVec> prev{v};
    long offset = 0;
    for (int k = 0; k <= upto; ++k) {
        // rows for level k: for each monomial index m (g^k), each direction i.
        const long gk = power_long(g, k);
        std::vector<RatVec> cur;
        if (k > 0) {
            cur.resize(static_cast<std::size_t>(gk), RatVec(n));
            for (long idx = 0; idx < gk; ++idx)
                cur[static_cast<std::size_t>(idx)] =
                    xs[static_cast<std::size_t>(idx % g)] * prev[static_cast<std::size_t>(idx / g)];
            prev = cur;
        }
        for (long m = 0; m < gk; ++m) {
            const RatVec& w = prev[static_cast<std::size_t>(m)];
            for (int i = 0; i < g; ++i) {
                const long row0 = (offset + m * g + i) * n;
                // H_i * w against every basis matrix of variable i.
                for (long c = 0; c < basis.per_var(); ++c) {
                    auto [a, b] = basis.pairs[static_cast<std::size_t>(c)];
                    const long col = i * basis.per_var() + c;
                    map(row0 + a, col) += w(b);
                    if (a != b) map(row0 + b, col) += w(a);
                }
            }
        }
        offset += gk * g;
    }
    return map;
}

TransportReport middle_inertia_transport(const NcPoly& p, const std::vector<RatMat>& xs) {
    MiddleMatrix z = build_middle_matrix(p);
    TransportReport rep;
    rep.n = xs.empty() ? 1 : static_cast<int>(xs[0].rows());
    rep.small = inertia_of(z.scalar());
    rep.big = inertia_of(z.evaluate_at(xs));
    rep.pass = rep.big.plus == rep.n * rep.small.plus &&
               rep.big.minus == rep.n * rep.small.minus &&
               rep.big.zero == rep.n * rep.small.zero;
    return rep;
}

namespace {

long alpha(int g, int k) {
    long s = 0;
    for (int j = 0; j <= k; ++j) s += power_long(g, j);
    return s;
}

/** Columns m(X) v over all words |m| <= r (Kronecker order per length). */
RatMat monomial_orbit(int g, const std::vector<RatMat>& xs, const RatVec& v, int r) {
    const int n = static_cast<int>(v.size());
    RatMat out(n, alpha(g, r));
    long col = 0;
    std::vector<RatVec> prev{v};
    out.col(col++) = v;
    for (int k = 1; k <= r; ++k) {
        std::vector<RatVec> cur(static_cast<std::size_t>(power_long(g, k)), RatVec(n));
        for (long idx = 0; idx < power_long(g, k); ++idx) {
            // m(X) v with m = x_{i_1} ... x_{i_k}: apply rightmost letter first.
            cur[static_cast<std::size_t>(idx)] =
                xs[static_cast<std::size_t>(idx / power_long(g, k - 1))] *
                prev[static_cast<std::size_t>(idx % power_long(g, k - 1))];
            out.col(col++) = cur[static_cast<std::size_t>(idx)];
        }
        prev = cur;
    }
    return out;
}

}  // namespace

ChsyReport chsy_codim(int g, const std::vector<RatMat>& xs, const RatVec& v, int k, int r) {
    const int n = static_cast<int>(v.size());
    ChsyReport rep;
    rep.equality_case = (k == r);
    RatMat orbit = monomial_orbit(g, xs, v, r);
    rep.independent = rank_exact(orbit) == orbit.cols();
    if (!rep.independent) return rep;

    RatMat l = border_map(g, xs, v, k);
    rep.codim = n * g * alpha(g, k) - rank_exact(l);
    rep.bound = static_cast<long>(n) * g * (alpha(g, k) - alpha(g, r)) +
                g * alpha(g, r) * (alpha(g, r) - 1) / 2;
    rep.pass = rep.equality_case ? (rep.codim == rep.bound) : (rep.codim <= rep.bound);
    return rep;
}

HessianVariant HessianVariant::modified(Rational lambda) {
    HessianVariant v;
    v.kind = Kind::Modified;
    v.lambda = std::move(lambda);
    return v;
}

HessianVariant HessianVariant::relaxed(Rational lambda, Rational delta) {
    HessianVariant v;
    v.kind = Kind::Relaxed;
    v.lambda = std::move(lambda);
    v.delta = std::move(delta);
    return v;
}

namespace {

/** Matrix of H -> p'(X)[H] v in the direction coordinates. */
RatMat gradient_map(const NcPoly& p, const std::vector<RatMat>& xs, const RatVec& v) {
    const int g = p.g();
    const int n = static_cast<int>(v.size());
    CoordBasis basis(n);
    NcPoly pd = directional_derivative(p);
    RatMat out = RatMat::Zero(n, g * basis.per_var());
    std::vector<RatMat> hs(static_cast<std::size_t>(g), RatMat::Zero(n, n));
    for (int r = 0; r < g; ++r) {
        for (long c = 0; c < basis.per_var(); ++c) {
            auto [a, b] = basis.pairs[static_cast<std::size_t>(c)];
            RatMat& h = hs[static_cast<std::size_t>(r)];
            h(a, b) += 1;
            if (a != b) h(b, a) += 1;
            out.col(r * basis.per_var() + c) = apply_to_vector(pd, xs, hs, v);
            h.setZero();
        }
    }
    return out;
}

/** Plain-form matrix via L^T Z(X) L; zero when degree < 2. */
RatMat plain_form(const NcPoly& p, const std::vector<RatMat>& xs, const RatVec& v) {
    const int g = p.g();
    const int n = static_cast<int>(v.size());
    auto deg = p.degree();
    if (!deg || *deg < 2) {
        long dim = g * static_cast<long>(n) * (n + 1) / 2;
        return RatMat::Zero(dim, dim);
    }
    MiddleMatrix z = build_middle_matrix(p);
    RatMat zx = z.evaluate_at(xs);
    RatMat l = border_map(g, xs, v, z.d() - 2);
    return l.transpose() * zx * l;
}

double min_eigenvalue(const RatMat& m) {
    if (m.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<DblMat> es(rat_to_double_mat(m));
    return es.eigenvalues()(0);
}

}  // namespace

RatMat hessian_form(const NcPoly& p, const std::vector<RatMat>& xs, const RatVec& v,
                    const HessianVariant& variant) {
    const int g = p.g();
    if (static_cast<int>(xs.size()) != g)
        throw std::invalid_argument("hessian_form: tuple size mismatch");
    RatMat m = plain_form(p, xs, v);
    if (variant.kind == HessianVariant::Kind::Plain) return m;

    RatMat grad = gradient_map(p, xs, v);
    m += variant.lambda * (grad.transpose() * grad).eval();
    if (variant.kind == HessianVariant::Kind::Modified) return m;

    const int d = p.degree().value_or(1);
    RatMat lt = border_map(g, xs, v, std::max(d - 1, 0));
    m += variant.delta * (lt.transpose() * lt).eval();
    return m;
}

PositivityVerdict relaxed_positivity(const NcPoly& p, const std::vector<RatMat>& xs,
                                     const RatVec& v, const Rational& delta, double lambda_max,
                                     double tol) {
    if (delta <= 0 || lambda_max <= 0)
        throw std::invalid_argument("relaxed_positivity: delta and lambda_max must be positive");
    const int g = p.g();
    const int n = static_cast<int>(v.size());

    RatMat base = hessian_form(p, xs, v, HessianVariant::relaxed(0, delta));
    RatMat grad = gradient_map(p, xs, v);

    auto scaled_tol = [&](const RatMat& m) {
        double norm = rat_to_double_mat(m).cwiseAbs().maxCoeff();
        return tol * std::max(1.0, norm);
    };

    // Sound negativity: restrict the lambda-insensitive part to ker(grad).
    RatMat kernel = kernel_basis_exact(grad);
    if (kernel.cols() > 0) {
        RatMat restricted = kernel.transpose() * base * kernel;
        Eigen::SelfAdjointEigenSolver<DblMat> es(rat_to_double_mat(restricted));
        if (es.eigenvalues()(0) < -scaled_tol(restricted)) {
            DblVec c = rat_to_double_mat(kernel) * es.eigenvectors().col(0);
            PositivityVerdict verdict;
            verdict.kind = PositivityVerdict::Kind::Negative;
            verdict.witness = tuple_from_coords(DblVec(c), g, n);
            // Recompute the form value from the witness itself.
            std::vector<DblMat> xd;
            for (const auto& m : xs) xd.push_back(rat_to_double_mat(m));
            DblVec vd = rat_to_double_mat(v);
            NcPoly pdd = hessian(p);
            DblVec hv = apply_to_vector(pdd, xd, verdict.witness, vd);
            double value = vd.dot(hv);
            // delta-term: || col(V_0..V_{d-1})(X)[H] v ||^2 via the border map.
            DblMat lt = rat_to_double_mat(border_map(g, xs, v, std::max(p.degree().value_or(1) - 1, 0)));
            value += delta.get_d() * (lt * c).squaredNorm();
            verdict.witness_value = value;
            verdict.reason = "negative on the kernel of H -> p'(X)[H]v";
            return verdict;
        }
    }

    for (double lambda = 1.0; lambda <= lambda_max; lambda *= 2.0) {
        RatMat m = base + Rational(lambda) * (grad.transpose() * grad).eval();
        if (min_eigenvalue(m) >= -scaled_tol(m)) {
            PositivityVerdict verdict;
            verdict.kind = PositivityVerdict::Kind::Positive;
            verdict.lambda_used = lambda;
            return verdict;
        }
    }

    PositivityVerdict verdict;
    verdict.kind = PositivityVerdict::Kind::Indeterminate;
    verdict.reason = "no lambda on the doubling schedule certified positivity and the "
                     "kernel-restricted form is not negative";
    return verdict;
}

RelativeReport relative_hessian_positivity(const NcPoly& p, const std::vector<RatMat>& xs,
                                           const RatVec& v,
                                           const std::vector<RatVec>& subspace_coords) {
    const int g = p.g();
    const int n = static_cast<int>(v.size());
    RelativeReport rep;

    RatMat m = plain_form(p, xs, v);
    RatMat s(m.rows(), static_cast<Eigen::Index>(subspace_coords.size()));
    for (std::size_t i = 0; i < subspace_coords.size(); ++i)
        s.col(static_cast<Eigen::Index>(i)) = subspace_coords[i];

    rep.psd = s.cols() == 0 || inertia_of(s.transpose() * m * s).minus == 0;

    auto deg = p.degree();
    const int upto = std::max(deg.value_or(2) - 2, 0);
    RatMat l = border_map(g, xs, v, upto);
    long full = l.rows();
    rep.codim = full - (s.cols() == 0 ? 0 : rank_exact(l * s));

    for (int k = 1; k <= static_cast<int>(full); ++k)
        if (rep.codim <= static_cast<long>(k) * n - 1) {
            rep.implied_k = k;
            break;
        }

    HessianSignature sig = min_signature_hessian(p);
    rep.sigma_minus = sig.minus;
    if (rep.psd && rep.implied_k)
        rep.consistent = sig.minus < *rep.implied_k;
    return rep;
}

std::pair<std::vector<RatMat>, RatVec> make_generic_point(int g, int n, int r,
                                                          std::mt19937_64& rng) {
    std::uniform_int_distribution<long> entry(-3, 3);
    for (;;) {
        std::vector<RatMat> xs;
        for (int j = 0; j < g; ++j) {
            RatMat m(n, n);
            for (int a = 0; a < n; ++a)
                for (int b = a; b < n; ++b) {
                    m(a, b) = Rational(entry(rng));
                    m(b, a) = m(a, b);
                }
            xs.push_back(std::move(m));
        }
        RatVec v(n);
        for (int a = 0; a < n; ++a) v(a) = Rational(entry(rng));
        if (v.isZero()) continue;
        RatMat orbit = monomial_orbit(g, xs, v, r);
        if (orbit.cols() <= orbit.rows() && rank_exact(orbit) == orbit.cols())
            return {std::move(xs), std::move(v)};
    }
}

}  // namespace nchess
