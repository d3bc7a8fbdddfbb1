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

#include "nchess/classify.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace nchess {

namespace {

/** Exact rank-one factorization m = u w^T, with u scaled so that its first
    nonzero entry is 1 (first nonzero column in index order breaks ties). */
std::pair<RatVec, RatVec> rank_one_factor(const RatMat& m) {
    Eigen::Index c0 = -1;
    for (Eigen::Index j = 0; j < m.cols() && c0 < 0; ++j)
        if (!m.col(j).isZero()) c0 = j;
    if (c0 < 0) throw InternalConsistencyError("rank-one factorization of a zero matrix");
    Eigen::Index r0 = 0;
    while (m(r0, c0) == 0) ++r0;
    RatVec u = m.col(c0) / m(r0, c0);
    RatVec w = m.row(r0).transpose();
    if (!(u * w.transpose() == m))
        throw InternalConsistencyError("matrix expected to have rank one does not");
    return {u, w};
}

/** Splits w = u (x) w1 given u with first nonzero entry 1. */
RatVec kron_cofactor(const RatVec& u, const RatVec& w) {
    const Eigen::Index block = w.size() / u.size();
    Eigen::Index i0 = 0;
    while (u(i0) == 0) ++i0;
    RatVec w1 = w.segment(i0 * block, block) / u(i0);
    RatMat expect = rat_kron(u, w1);
    if (!(RatVec(expect.col(0)) == w))
        throw InternalConsistencyError("rank-one factor does not split as u (x) w1");
    return w1;
}

/** Continued-fraction rationalization of a double with denominator bound. */
Rational rationalize(double x, long max_den) {
    bool neg = x < 0;
    if (neg) x = -x;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double y = x;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(y);
        long a = static_cast<long>(fl);
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den || q2 < 0) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double frac = y - fl;
        if (frac < 1e-15) break;
        y = 1.0 / frac;
    }
    if (q1 == 0) return Rational(0);
    Rational r(p1, q1);
    return neg ? Rational(-r) : r;
}

struct Unnormalized {
    RatVec u;
    Rational norm2;
};

/** Exact eigen-direction of the single negative eigenvalue of z00 when the
    eigenvalue is rational; otherwise a rationalized direction that still
    certifies exactly, if one exists. */
std::optional<Unnormalized> negative_direction(const RatMat& z00) {
    const Eigen::Index g = z00.rows();

    // Characteristic polynomial by exact Faddeev-LeVerrier.
    std::vector<Rational> coef(static_cast<std::size_t>(g) + 1);  // c[k] multiplies lambda^k
    {
        RatMat mk = RatMat::Zero(g, g);
        Rational ck(1);
        coef[static_cast<std::size_t>(g)] = 1;
        for (Eigen::Index k = 1; k <= g; ++k) {
            mk = z00 * (mk + ck * RatMat::Identity(g, g));
            ck = -mk.trace() / Rational(static_cast<long>(k));
            coef[static_cast<std::size_t>(g - k)] = ck;
        }
    }
    auto eval_char = [&](const Rational& x) {
        Rational acc(0);
        for (Eigen::Index k = g; k >= 0; --k) acc = acc * x + coef[static_cast<std::size_t>(k)];
        return acc;
    };

    Eigen::SelfAdjointEigenSolver<DblMat> es(rat_to_double_mat(z00));
    const double lam = es.eigenvalues()(0);  // the single negative eigenvalue

    // Rational eigenvalue: recover it from the floating value, then take an
    // exact kernel vector of the shifted matrix.
    for (long den : {1L, 64L, 4096L, 1L << 20, 1L << 30}) {
        Rational cand = rationalize(lam, den);
        if (cand >= 0 || eval_char(cand) != 0) continue;
        RatMat kernel = kernel_basis_exact(z00 - cand * RatMat::Identity(g, g));
        if (kernel.cols() < 1) continue;
        RatVec u = kernel.col(0);
        Eigen::Index r0 = 0;
        while (u(r0) == 0) ++r0;
        u /= u(r0);
        Unnormalized out{u, (u.transpose() * u)(0, 0)};
        return out;
    }

    // Irrational eigenvalue: round the floating eigenvector and certify exactly.
    DblVec uref = es.eigenvectors().col(0);
    for (long den : {64L, 4096L, 1L << 20, 1L << 30, 1L << 40}) {
        RatVec u(g);
        for (Eigen::Index i = 0; i < g; ++i) u(i) = rationalize(uref(i), den);
        if (u.isZero()) continue;
        Rational norm2 = (u.transpose() * u)(0, 0);
        Rational quad = (u.transpose() * z00 * u)(0, 0);
        if (quad >= 0) continue;
        RatMat proj = RatMat::Identity(g, g) - (u * u.transpose()) / norm2;
        if (is_psd_exact(proj * z00 * proj)) {
            Unnormalized out{u, norm2};
            return out;
        }
    }
    return std::nullopt;
}

}  // namespace

RatMat quad_form_matrix(const NcPoly& q, int g) {
    RatMat out = RatMat::Zero(g, g);
    if (q.is_zero()) return out;
    auto deg = q.degree();
    if (*deg != 2 || q != q.homogeneous_part(2))
        throw std::invalid_argument("quad_form_matrix: input must be homogeneous of degree 2");
    if (!q.uses_only_x())
        throw std::invalid_argument("quad_form_matrix: input must not contain direction letters");
    for (const auto& [w, c] : q.terms()) {
        Letter l1 = letter_from_code(w[0]);
        Letter l2 = letter_from_code(w[1]);
        out(l1.index - 1, l2.index - 1) = c;
    }
    return out;
}

NcPoly quad_form_poly(const RatMat& q_mat, int g) {
    NcPoly out(g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            if (q_mat(i, j) == 0) continue;
            out += q_mat(i, j) * (NcPoly::variable(g, i + 1) * NcPoly::variable(g, j + 1));
        }
    return out;
}

RatVec linear_form_vector(const NcPoly& phi, int g) {
    RatVec out = RatVec::Zero(g);
    if (phi.is_zero()) return out;
    if (phi != phi.homogeneous_part(1) || !phi.uses_only_x())
        throw std::invalid_argument("linear_form_vector: input must be homogeneous of degree 1");
    for (const auto& [w, c] : phi.terms()) out(letter_from_code(w[0]).index - 1) = c;
    return out;
}

NcPoly linear_form_poly(const RatVec& u, int g) {
    NcPoly out(g);
    for (int i = 0; i < g; ++i)
        if (u(i) != 0) out += u(i) * NcPoly::variable(g, i + 1);
    return out;
}

NcPoly synthesize(const Rational& p0, const NcPoly& p1, const NcPoly& p2, const RatVec& u,
                  const NcPoly& q, const NcPoly& f0) {
    const int g = static_cast<int>(u.size());
    if (g < 1 || u.isZero()) throw std::invalid_argument("synthesize: u must be a nonzero vector");
    auto check_homog = [&](const NcPoly& f, int k, const char* name) {
        if (f.is_zero()) return;
        if (f != f.homogeneous_part(k) || !f.uses_only_x())
            throw std::invalid_argument(std::string("synthesize: ") + name +
                                        " must be zero or homogeneous of degree " +
                                        std::to_string(k));
    };
    check_homog(p1, 1, "p1");
    check_homog(p2, 2, "p2");
    check_homog(q, 2, "q");
    check_homog(f0, 2, "f0");

    NcPoly phi = linear_form_poly(u, g);
    NcPoly out = NcPoly::constant(g, p0);
    out += p1;
    out += p2;
    out += phi * q + q.involution() * phi;
    out += phi * f0 * phi;
    return out;
}

DegreeBoundReport degree_bound_check(const NcPoly& p) {
    auto deg = p.degree();
    if (!deg || *deg < 2)
        throw std::invalid_argument("degree_bound_check: degree must be at least 2");
    DegreeBoundReport rep;
    rep.degree = *deg;
    rep.sigma = min_signature_hessian(p);
    rep.holds_plus = rep.degree <= 2 * rep.sigma.plus + 2;
    rep.holds_minus = rep.degree <= 2 * rep.sigma.minus + 2;
    return rep;
}

NcPoly berkovich_factor(const RatVec& u, const RatVec& b, const NcPoly& f1, const NcPoly& f2) {
    const int g = static_cast<int>(b.size());
    if (b.isZero()) throw std::invalid_argument("berkovich_factor: b must be nonzero");
    if (f1.coeff(Word{}) != 0 || f2.coeff(Word{}) != 0)
        throw std::invalid_argument("berkovich_factor: f1(0) and f2(0) must vanish");
    NcPoly phi = linear_form_poly(u, g);
    NcPoly psi = linear_form_poly(b, g);
    if (!(phi * f1 == f2 * psi))
        throw std::invalid_argument("berkovich_factor: hypothesis phi f1 = f2 psi fails");
    if (f1.is_zero()) return NcPoly(g);

    // Change of variables y = M x with row t of M equal to b^T (b_t != 0).
    int t = g - 1;
    while (b(t) == 0) --t;
    RatMat m = RatMat::Identity(g, g);
    m.row(t) = b.transpose();
    RatMat minv = inverse_exact(m);

    NcPoly ft = substitute_linear(f1, minv);
    const LetterCode trailing = letter_code({LetterKind::X, t + 1});
    NcPoly stripped(g);
    for (const auto& [w, c] : ft.terms()) {
        if (w.empty() || w.back() != trailing)
            throw InternalConsistencyError("expected every monomial to end in the pivot letter");
        stripped.add_term(w.substr(0, w.size() - 1), c);
    }
    NcPoly f3 = substitute_linear(stripped, m);

    if (!(f1 == f3 * psi) || !(f2 == phi * f3))
        throw InternalConsistencyError("berkovich factorization does not verify");
    return f3;
}

ClassificationReport classify_one_negative(const NcPoly& p) {
    if (!p.is_symmetric())
        throw std::invalid_argument("classify_one_negative: input must be symmetric");
    if (!p.uses_only_x())
        throw std::invalid_argument("classify_one_negative: input must not contain h letters");

    const int g = p.g() > 0 ? p.g() : 1;
    ClassificationReport rep;
    rep.reconstruction = NcPoly(g);

    ClassificationData data;
    data.u_norm2 = 0;
    data.p0 = p.coeff(Word{});
    data.p1 = p.homogeneous_part(1);
    data.p2 = p.homogeneous_part(2);
    data.q = NcPoly(g);
    data.f0 = NcPoly(g);
    data.f1 = NcPoly(g);
    data.phi = NcPoly(g);
    data.a = RatMat::Zero(g, g);

    auto deg = p.degree();
    const int d = deg.value_or(0);

    if (d <= 1) {
        // Hessian vanishes; the paper's PSD case with empty quadratic part.
        rep.verdict = Verdict::SigmaZero;
        rep.structure_case = StructureCase::PsdQuadratic;
        rep.reconstruction = NcPoly::constant(g, data.p0) + data.p1;
        rep.reconstruction_exact = rep.reconstruction == p;
        rep.data = std::move(data);
        rep.note = "degree at most 1: Hessian is zero";
        return rep;
    }

    MiddleMatrix z = build_middle_matrix(p);
    RatMat zeta = z.scalar();
    Inertia in = inertia_of(zeta);
    rep.sigma.plus = in.plus;
    rep.sigma.minus = in.minus;
    rep.sigma.defined = true;

    if (in.minus >= 2) {
        rep.verdict = Verdict::SigmaAtLeastTwo;
        rep.note = "mu_-(Z(0)) = " + std::to_string(in.minus) +
                   ": outside the one-negative-square classification";
        return rep;
    }

    const RatMat z00 = z.scalar_block(0, 0);

    if (in.minus == 0) {
        if (d > 2)
            throw InternalConsistencyError("mu_- = 0 forces degree <= 2 but degree is " +
                                           std::to_string(d));
        rep.verdict = Verdict::SigmaZero;
        rep.structure_case = StructureCase::PsdQuadratic;
        data.e1 = z00;
        data.e1_inertia = inertia_of(z00);
        rep.reconstruction = NcPoly::constant(g, data.p0) + data.p1 + data.p2;
        rep.reconstruction_exact = rep.reconstruction == p;
        if (!rep.reconstruction_exact)
            throw InternalConsistencyError("degree-2 reconstruction failed");
        rep.data = std::move(data);
        rep.note = "Z(0)_{00} is positive semidefinite: p2 is matrix positive";
        return rep;
    }

    rep.verdict = Verdict::SigmaOne;

    if (d == 4) {
        rep.structure_case = StructureCase::RankOneTopCorner;
        const RatMat z02 = z.scalar_block(0, 2);
        const RatMat z01 = z.scalar_block(0, 1);
        const RatMat z11 = z.scalar_block(1, 1);
        if (rank_exact(z02) != 1)
            throw InternalConsistencyError("degree 4 with mu_- = 1 but rank Z(0)_{02} != 1");

        auto [u, w] = rank_one_factor(z02);
        RatVec w1 = kron_cofactor(u, w);
        RatMat a_mat = mat_g(w1, g);
        if (!(a_mat == RatMat(a_mat.transpose())))
            throw InternalConsistencyError("mat_g(w1) is not symmetric");
        RatMat u_kron_i = rat_kron(u, RatMat::Identity(g, g));
        if (!(RatMat(u_kron_i * a_mat * u_kron_i.transpose()) == z11))
            throw InternalConsistencyError("Z(0)_{11} != (u (x) I) A (u (x) I)^T");

        const Rational tau = (u.transpose() * u)(0, 0);
        RatMat proj = RatMat::Identity(g, g) - (u * u.transpose()) / tau;

        RatVec y = (u.transpose() * z01 * u_kron_i).transpose() / (tau * tau);
        RatVec v = (u.transpose() * z01 * rat_kron(proj, RatMat::Identity(g, g))).transpose() / tau;

        RatMat uv = u * v.transpose();
        RatMat z01_model = u * rat_kron(u, y).transpose() + uv + structured_transpose(uv);
        if (!(z01_model == z01))
            throw InternalConsistencyError("Z(0)_{01} does not match u(u^T (x) y^T)+uv^T+(uv^T)^sT");
        if (!(RatVec(mat_g(v, g) * u).isZero()))
            throw InternalConsistencyError("(mat_g v) u != 0");
        if (!(RatMat(u_kron_i.transpose() * z11 * u_kron_i) == RatMat(tau * tau * a_mat)))
            throw InternalConsistencyError("(u (x) I)^T Z(0)_{11} (u (x) I) != (u^T u)^2 A");

        RatMat e1(2 * g, 2 * g);
        RatMat matgv = mat_g(v, g);
        e1.topLeftCorner(g, g) = proj * z00 * proj;
        e1.topRightCorner(g, g) = matgv.transpose();
        e1.bottomLeftCorner(g, g) = matgv;
        e1.bottomRightCorner(g, g) = a_mat;
        Inertia e1_in = inertia_of(e1);
        if (e1_in.minus != 0)
            throw InternalConsistencyError("certificate E1 is not positive semidefinite");

        data.u = u;
        data.u_norm2 = tau;
        data.y = y;
        data.v = v;
        data.a = a_mat;
        data.phi = linear_form_poly(u, g);
        RatVec qvec = (rat_kron(u, y) + 2 * v) / 4;
        PolyMat qrow =
            PolyMat::from_rational(qvec.transpose(), g) * x_row(g, 2).transpose();
        data.q = qrow(0, 0);
        data.f0 = Rational(1, 2) * quad_form_poly(a_mat, g);
        data.e1 = e1;
        data.e2 = e1 / 2;
        data.e1_inertia = e1_in;

        // Cross-check against the E2 built from the quadratic-form matrices.
        RatMat qq = quad_form_matrix(data.q, g);
        RatMat qf0 = quad_form_matrix(data.f0, g);
        RatMat qp2 = quad_form_matrix(data.p2, g);
        RatMat e2(2 * g, 2 * g);
        e2.topLeftCorner(g, g) = proj * qp2 * proj;
        e2.topRightCorner(g, g) = proj * qq.transpose();
        e2.bottomLeftCorner(g, g) = qq * proj;
        e2.bottomRightCorner(g, g) = qf0;
        if (!(e1 == RatMat(2 * e2)))
            throw InternalConsistencyError("E1 != 2 E2");
    } else if (d == 3) {
        rep.structure_case = StructureCase::RankOneUpperBlock;
        const RatMat z01 = z.scalar_block(0, 1);
        if (rank_exact(z01) != 1)
            throw InternalConsistencyError("degree 3 with mu_- = 1 but rank Z(0)_{01} != 1");

        auto [u, w] = rank_one_factor(z01);
        RatVec y = kron_cofactor(u, w);
        const Rational tau = (u.transpose() * u)(0, 0);
        RatMat proj = RatMat::Identity(g, g) - (u * u.transpose()) / tau;
        RatMat pzp = proj * z00 * proj;
        Inertia pz_in = inertia_of(pzp);
        if (pz_in.minus != 0)
            throw InternalConsistencyError("P Z(0)_{00} P is not positive semidefinite");

        data.u = u;
        data.u_norm2 = tau;
        data.y = y;
        data.v = RatVec::Zero(g * g);
        data.phi = linear_form_poly(u, g);
        RatVec qvec = rat_kron(u, y) / 4;
        PolyMat qrow =
            PolyMat::from_rational(qvec.transpose(), g) * x_row(g, 2).transpose();
        data.q = qrow(0, 0);
        data.f1 = Rational(1, 4) * linear_form_poly(y, g);
        if (!(data.q == data.f1 * data.phi))
            throw InternalConsistencyError("degree-3 clause q = f1 phi fails");

        RatMat e1 = RatMat::Zero(2 * g, 2 * g);
        e1.topLeftCorner(g, g) = pzp;
        data.e1 = e1;
        data.e2 = e1 / 2;
        data.e1_inertia = inertia_of(e1);
    } else {
        rep.structure_case = StructureCase::NegativeQuadratic;
        auto dir = negative_direction(z00);
        if (dir) {
            data.u = dir->u;
            data.u_norm2 = dir->norm2;
            data.phi = linear_form_poly(dir->u, g);
            RatMat proj =
                RatMat::Identity(g, g) - (dir->u * dir->u.transpose()) / dir->norm2;
            RatMat e1 = RatMat::Zero(2 * g, 2 * g);
            e1.topLeftCorner(g, g) = proj * z00 * proj;
            data.e1 = e1;
            data.e2 = e1 / 2;
            data.e1_inertia = inertia_of(e1);
            if (data.e1_inertia.minus != 0)
                throw InternalConsistencyError("P Z(0)_{00} P is not positive semidefinite");
        } else {
            rep.note =
                "negative eigendirection of Z(0)_{00} is irrational and resists exact "
                "rationalization; certificate omitted";
        }
    }

    rep.reconstruction = NcPoly::constant(g, data.p0) + data.p1 + data.p2 +
                         data.phi * data.q + data.q.involution() * data.phi +
                         data.phi * data.f0 * data.phi;
    rep.reconstruction_exact = rep.reconstruction == p;
    if (!rep.reconstruction_exact)
        throw InternalConsistencyError("structural reconstruction does not reproduce p");
    rep.data = std::move(data);
    return rep;
}

}  // namespace nchess
