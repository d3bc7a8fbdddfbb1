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

#include "nchess/inertia.hpp"

#include <algorithm>

namespace nchess {

bool CongruenceCert::reconstructs(const RatMat& m) const { return t.transpose() * d * t == m; }

std::pair<Inertia, CongruenceCert> exact_inertia(const RatMat& m) {
    if (!is_symmetric_exact(m)) throw std::invalid_argument("exact_inertia: input not symmetric");
    const long n = m.rows();

    RatMat a = m;                       // reduced in place to D
    RatMat e = RatMat::Identity(n, n);  // accumulated column operations, D = E^T M E
    std::vector<bool> active(static_cast<std::size_t>(n), true);
    long remaining = n;

    Inertia in;
    CongruenceCert cert;

    auto col_axpy = [&](long dst, long src, const Rational& f) {
        // col_dst -= f * col_src on both A (rows and cols, symmetric) and E.
        for (long r = 0; r < n; ++r) a(r, dst) -= f * a(r, src);
        for (long c = 0; c < n; ++c) a(dst, c) -= f * a(src, c);
        for (long r = 0; r < n; ++r) e(r, dst) -= f * e(r, src);
    };

    while (remaining > 0) {
        // Largest-magnitude nonzero 1x1 diagonal pivot.
        long piv = -1;
        Rational best(0);
        for (long i = 0; i < n; ++i) {
            if (!active[static_cast<std::size_t>(i)] || a(i, i) == 0) continue;
            Rational mag = abs(a(i, i));
            if (piv < 0 || mag > best) {
                piv = i;
                best = mag;
            }
        }
        if (piv >= 0) {
            const Rational d = a(piv, piv);
            for (long k = 0; k < n; ++k) {
                if (!active[static_cast<std::size_t>(k)] || k == piv || a(k, piv) == 0) continue;
                col_axpy(k, piv, a(piv, k) / d);
            }
            (d > 0 ? in.plus : in.minus) += 1;
            cert.pivots.emplace_back(piv, 1);
            active[static_cast<std::size_t>(piv)] = false;
            --remaining;
            continue;
        }

        // Remaining diagonal is identically zero: hyperbolic 2x2 pivot.
        long pi = -1, pj = -1;
        for (long i = 0; i < n && pi < 0; ++i) {
            if (!active[static_cast<std::size_t>(i)]) continue;
            for (long j = i + 1; j < n; ++j) {
                if (!active[static_cast<std::size_t>(j)]) continue;
                if (a(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        }
        if (pi < 0) {
            in.zero += remaining;
            break;
        }
        const Rational off = a(pi, pj);
        for (long k = 0; k < n; ++k) {
            if (!active[static_cast<std::size_t>(k)] || k == pi || k == pj) continue;
            const Rational alpha = a(k, pj) / off;
            const Rational beta = a(k, pi) / off;
            if (alpha != 0) col_axpy(k, pi, alpha);
            if (beta != 0) col_axpy(k, pj, beta);
        }
        in.plus += 1;
        in.minus += 1;
        cert.pivots.emplace_back(pi, 2);
        cert.pivots.emplace_back(pj, 2);
        active[static_cast<std::size_t>(pi)] = false;
        active[static_cast<std::size_t>(pj)] = false;
        remaining -= 2;
    }

    cert.d = a;
    cert.t = inverse_exact(e);
    return {in, cert};
}

Inertia inertia_of(const RatMat& m) { return exact_inertia(m).first; }

bool is_psd_exact(const RatMat& m) { return inertia_of(m).minus == 0; }

HessianSignature min_signature_hessian(const NcPoly& p) {
    HessianSignature out;
    auto deg = p.degree();
    if (!deg || *deg < 2) return out;
    Inertia in = inertia_of(build_middle_matrix(p).scalar());
    out.plus = in.plus;
    out.minus = in.minus;
    out.defined = true;
    return out;
}

NcPoly SdsDecomposition::expand() const {
    NcPoly out;
    for (const auto& t : plus_terms) out += t.weight * (t.f.involution() * t.f);
    for (const auto& t : minus_terms) out -= t.weight * (t.f.involution() * t.f);
    return out;
}

namespace {

/** Weighted rank-one split of T^T D T: M = sum_k w_k s_k s_k^T with rational
    weights; one row per 1x1 pivot, a +/- pair per hyperbolic pivot. */
std::vector<std::pair<Rational, RatVec>> weighted_rows(const CongruenceCert& cert) {
    std::vector<std::pair<Rational, RatVec>> out;
    std::size_t i = 0;
    while (i < cert.pivots.size()) {
        auto [pos, size] = cert.pivots[i];
        if (size == 1) {
            Rational d = cert.d(pos, pos);
            if (d != 0) out.emplace_back(d, cert.t.row(pos).transpose());
            ++i;
        } else {
            long p2 = cert.pivots[i + 1].first;
            Rational off = cert.d(pos, p2);
            RatVec u = cert.t.row(pos).transpose();
            RatVec v = cert.t.row(p2).transpose();
            // a(uv^T + vu^T) = a/2 (u+v)(u+v)^T - a/2 (u-v)(u-v)^T
            out.emplace_back(off / 2, (u + v).eval());
            out.emplace_back(-off / 2, (u - v).eval());
            i += 2;
        }
    }
    return out;
}

/** Unitriangular completion B(x) with B_{kj} = K_{k-1}(x) ... K_j(x) for
    k >= j; satisfies Z(x) = Z(0) B(x). */
PolyMat completion_matrix(const MiddleMatrix& z) {
    const int g = z.g();
    const int blocks = z.block_count();
    const long size = g * z.nu();
    PolyMat b(size, size, g);
    std::vector<PolyMat> k;
    for (int j = 0; j + 1 < blocks; ++j) k.push_back(k_matrix(g, j));

    for (int j = 0; j < blocks; ++j) {
        PolyMat prod = PolyMat::identity(z.block_height(j), g);
        for (int i = j; i < blocks; ++i) {
            if (i > j) prod = k[static_cast<std::size_t>(i - 1)] * prod;
            const long ro = z.block_offset(i), co = z.block_offset(j);
            for (long r = 0; r < prod.rows(); ++r)
                for (long c = 0; c < prod.cols(); ++c) b(ro + r, co + c) = prod(r, c);
        }
    }
    return b;
}

PolyMat middle_as_polymat(const MiddleMatrix& z) {
    const int g = z.g();
    const long size = g * z.nu();
    PolyMat out(size, size, g);
    for (int i = 0; i < z.block_count(); ++i)
        for (int j = 0; j < z.block_count(); ++j) {
            const PolyMat& blk = z.block(i, j);
            for (long r = 0; r < blk.rows(); ++r)
                for (long c = 0; c < blk.cols(); ++c)
                    out(z.block_offset(i) + r, z.block_offset(j) + c) = blk(r, c);
        }
    return out;
}

/** (1+N)^{1/2} via the binomial series; exact because N is nilpotent. */
PolyMat unitriangular_sqrt(const PolyMat& b, int nilpotency) {
    const long n = b.rows();
    const int g = b.g();
    PolyMat id = PolyMat::identity(n, g);
    PolyMat nmat = b - id;
    PolyMat out = id;
    PolyMat npow = id;
    Rational coeff(1);
    for (int t = 1; t < nilpotency; ++t) {
        // binom(1/2, t) = binom(1/2, t-1) * (1/2 - (t-1)) / t
        coeff *= (Rational(1, 2) - Rational(t - 1)) / Rational(t);
        npow = npow * nmat;
        if (npow.is_zero()) break;
        out = out + coeff * npow;
    }
    return out;
}

}  // namespace

SdsDecomposition sds_from_hessian(const NcPoly& p) {
    auto deg = p.degree();
    if (!deg || *deg < 2) throw std::invalid_argument("sds_from_hessian: degree must be >= 2");
    const int g = p.g();

    MiddleMatrix z = build_middle_matrix(p);
    PolyMat zx = middle_as_polymat(z);
    RatMat zeta = z.scalar();
    PolyMat zeta_poly = PolyMat::from_rational(zeta, g);

    PolyMat b = completion_matrix(z);
    if (!(zeta_poly * b == zx))
        throw InternalConsistencyError("middle matrix completion identity Z(x) = Z(0) B(x) failed");

    PolyMat r = unitriangular_sqrt(b, z.block_count());
    if (!(r * r == b)) throw InternalConsistencyError("square root of completion matrix failed");
    if (!(r.transpose() * zeta_poly * r == zx))
        throw InternalConsistencyError("polynomial congruence R^T Z(0) R = Z(x) failed");

    auto [inertia, cert] = exact_inertia(zeta);
    PolyMat rv = r * border_vector_stack(g, z.d() - 2);

    SdsDecomposition out;
    for (auto& [w, s] : weighted_rows(cert)) {
        NcPoly f(g);
        for (long i = 0; i < s.size(); ++i)
            if (s(i) != 0) f += s(i) * rv(i, 0);
        if (f.is_zero()) continue;
        if (w > 0)
            out.plus_terms.push_back({w, f});
        else
            out.minus_terms.push_back({-w, f});
    }

    if (static_cast<long>(out.plus_terms.size()) != inertia.plus ||
        static_cast<long>(out.minus_terms.size()) != inertia.minus)
        throw InternalConsistencyError("SDS term counts do not match the middle-matrix inertia");
    if (out.expand() != hessian(p))
        throw InternalConsistencyError("SDS expansion does not reproduce the Hessian");
    return out;
}

SdsDecomposition gram_sds(const NcPoly& p) {
    if (!p.is_symmetric()) throw std::invalid_argument("gram_sds: input must be symmetric");
    SdsDecomposition out;
    auto deg = p.degree();
    if (!deg) return out;
    const int g = p.g();
    const int d = *deg;
    const int half = (d + 1) / 2;

    // Monomial basis of degree <= ceil(d/2), Kronecker-ordered per length.
    std::vector<Word> basis;
    std::vector<long> offset(static_cast<std::size_t>(half) + 2, 0);
    for (int k = 0; k <= half; ++k) {
        offset[static_cast<std::size_t>(k) + 1] =
            offset[static_cast<std::size_t>(k)] + power_long(g, k);
        for (long i = 0; i < power_long(g, k); ++i) basis.push_back(kron_word(g, k, i));
    }
    auto basis_index = [&](const Word& w) {
        return offset[w.size()] + kron_index(g, w);
    };

    const long nb = static_cast<long>(basis.size());
    RatMat gram = RatMat::Zero(nb, nb);
    for (const auto& [w, c] : p.terms()) {
        const std::size_t len = w.size();
        const std::size_t la = len / 2;  // ties to the shorter prefix
        Word a = w.substr(0, la);
        Word bword = w.substr(la);
        gram(basis_index(word_reverse(a)), basis_index(bword)) += c;
    }
    gram = ((gram + gram.transpose()) / 2).eval();

    auto [inertia, cert] = exact_inertia(gram);
    (void)inertia;
    for (auto& [wgt, s] : weighted_rows(cert)) {
        NcPoly f(g);
        for (long i = 0; i < s.size(); ++i)
            if (s(i) != 0) f += s(i) * NcPoly::monomial(g, basis[static_cast<std::size_t>(i)]);
        if (f.is_zero()) continue;
        if (wgt > 0)
            out.plus_terms.push_back({wgt, f});
        else
            out.minus_terms.push_back({-wgt, f});
    }

    if (out.expand() != p)
        throw InternalConsistencyError("Gram SDS expansion does not reproduce the input");
    return out;
}

}  // namespace nchess
