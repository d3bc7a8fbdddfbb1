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

#include "nchess/kronops.hpp"
#include "nchess/midmat.hpp"
#include "nchess/randpoly.hpp"

namespace nchess {

namespace {

PolyMat lift(const RatMat& m, int g) { return PolyMat::from_rational(m, g); }

NcPoly scalar_of(const PolyMat& m) {
    if (m.rows() != 1 || m.cols() != 1)
        throw std::logic_error("expected a 1x1 polynomial matrix");
    return m(0, 0);
}

bool check_ids(IdentityId id, int g, std::mt19937_64& rng) {
    const RatVec u = random_rat_matrix(rng, g, 1);
    const RatMat a = random_rat_matrix(rng, g, g);
    const RatVec w2 = random_rat_matrix(rng, g * g, 1);
    const PolyMat xr = x_row(g, 1);
    const PolyMat xc = x_col(g, 1);
    const NcPoly phi = scalar_of(xr * lift(u, g));

    switch (id) {
        case IdentityId::Ids1:
            return x_row(g, 2) * lift(rat_kron(u, a), g) == phi * (xr * lift(a, g));
        case IdentityId::Ids2:
            return lift(RatMat(rat_kron(u, a).transpose()), g) * x_row(g, 2).transpose() ==
                   (lift(RatMat(a.transpose()), g) * xc) * phi;
        case IdentityId::Ids3:
            return xr * lift(RatMat(rat_kron(u, a).transpose()), g) ==
                   poly_kron(lift(RatMat(u.transpose()), g),
                             xr * lift(RatMat(a.transpose()), g));
        case IdentityId::Ids4:
            return x_row(g, 2).transpose() ==
                   poly_kron(PolyMat::identity(g, g), xc) * xc;
        case IdentityId::Ids5: {
            const RatVec b = random_rat_matrix(rng, g, 1);
            const PolyMat hr = h_row(g);
            NcPoly lhs = scalar_of(xr * lift(u, g)) * scalar_of(hr * lift(b, g));
            NcPoly rhs = scalar_of(lift(RatMat(rat_kron(b, u).transpose()), g) *
                                   poly_kron(hr, xr).transpose());
            return lhs == rhs;
        }
        case IdentityId::Ids6: {
            NcPoly lhs2 = phi * phi;
            NcPoly rhs2 = scalar_of(lift(RatMat(rat_kron(u, u).transpose()), g) *
                                    x_row(g, 2).transpose());
            NcPoly lhs3 = phi * phi * phi;
            NcPoly rhs3 = scalar_of(lift(RatMat(rat_kron(rat_kron(u, u), u).transpose()), g) *
                                    x_row(g, 3).transpose());
            return lhs2 == rhs2 && lhs3 == rhs3;
        }
        case IdentityId::Ids7: {
            NcPoly lhs = scalar_of(xr * lift(RatMat(u * w2.transpose()), g) *
                                   x_row(g, 2).transpose());
            NcPoly rhs = scalar_of(lift(RatMat(rat_kron(w2, u).transpose()), g) *
                                   x_row(g, 3).transpose());
            return lhs == rhs;
        }
        case IdentityId::Ids8: {
            RatMat pi1t = reversal_permutation(g, 1).matrix().transpose();
            NcPoly inner = scalar_of(lift(RatMat((pi1t * w2).transpose()), g) *
                                     x_row(g, 2).transpose());
            PolyMat lhs = (x_row(g, 2) * lift(w2, g)) * lift(RatMat(u.transpose()), g);
            PolyMat rhs = lift(RatMat(u.transpose()), g) * inner;
            return lhs == rhs;
        }
        case IdentityId::Ids9: {
            RatMat pi1t = reversal_permutation(g, 1).matrix().transpose();
            NcPoly lhs = scalar_of((x_row(g, 2) * lift(w2, g)) *
                                   (lift(RatMat(u.transpose()), g) * xc));
            NcPoly rhs = scalar_of(lift(RatMat(rat_kron(u, RatVec(pi1t * w2)).transpose()), g) *
                                   x_row(g, 3).transpose());
            return lhs == rhs;
        }
        case IdentityId::Ids10: {
            for (int k = 1; k <= 2; ++k) {
                PolyMat lhs = poly_kron(xc, PolyMat::identity(power_long(g, k), g)) * x_col(g, k);
                if (!(lhs == x_col(g, k + 1))) return false;
            }
            return true;
        }
        case IdentityId::Ids11: {
            RatVec w = vec(a);
            PolyMat lhs1 = xr * lift(a, g);
            PolyMat rhs1 = lift(RatMat(w.transpose()), g) *
                           poly_kron(PolyMat::identity(g, g), xc);
            NcPoly lhs2 = scalar_of(x_row(g, 2) * lift(w, g));
            NcPoly rhs2 = scalar_of(xr * lift(RatMat(a.transpose()), g) * xc);
            return lhs1 == rhs1 && lhs2 == rhs2;
        }
        case IdentityId::Ids12: {
            RatMat lhs = a * rat_kron(u, RatMat::Identity(g, g)).transpose();
            RatMat rhs = rat_kron(RatMat(u.transpose()), a);
            return lhs == rhs;
        }
        case IdentityId::Ids13:
            return poly_kron(PolyMat::identity(g * g, g), xc) * x_row(g, 2).transpose() ==
                   x_row(g, 3).transpose();
        case IdentityId::Ids14: {
            for (auto [k, l] : {std::pair{1, 2}, std::pair{2, 1}}) {
                RatVec vk = random_rat_matrix(rng, power_long(g, k), 1);
                RatVec wl = random_rat_matrix(rng, power_long(g, l), 1);
                NcPoly lhs = scalar_of(lift(RatMat(rat_kron(vk, wl).transpose()), g) *
                                       x_col(g, k + l));
                NcPoly rhs = scalar_of(lift(RatMat(vk.transpose()), g) * x_col(g, k)) *
                             scalar_of(lift(RatMat(wl.transpose()), g) * x_col(g, l));
                if (!(lhs == rhs)) return false;
            }
            return true;
        }
        case IdentityId::Ids15: {
            const RatVec b = random_rat_matrix(rng, g, 1);
            const RatVec c = random_rat_matrix(rng, g, 1);
            const RatVec dd = random_rat_matrix(rng, g, 1);
            RatMat lhs = rat_kron(RatMat(u.transpose()), RatMat(b.transpose())) *
                         rat_kron(c, dd);
            Rational rhs = (u.transpose() * c)(0, 0) * (b.transpose() * dd)(0, 0);
            return lhs(0, 0) == rhs;
        }
        default:
            break;
    }
    throw std::logic_error("unhandled identity id");
}

bool check_nicesplit(int g, std::mt19937_64& rng) {
    const RatVec u = random_rat_matrix(rng, g, 1);
    const RatVec w = random_rat_matrix(rng, g * g, 1);
    const PolyMat xr = x_row(g, 1);
    const PolyMat xc = x_col(g, 1);
    NcPoly lhs = scalar_of(xr * lift(RatMat(u * w.transpose()), g) * x_row(g, 2).transpose()) +
                 scalar_of((x_row(g, 2) * lift(w, g)) * (lift(RatMat(u.transpose()), g) * xc));
    RatMat pi1t = reversal_permutation(g, 1).matrix().transpose();
    RatMat row = rat_kron(w, u).transpose() + rat_kron(u, RatVec(pi1t * w)).transpose();
    NcPoly rhs = scalar_of(lift(row, g) * x_row(g, 3).transpose());
    return lhs == rhs;
}

bool check_jun3a7(int g, std::mt19937_64& rng) {
    const RatVec u = random_rat_matrix(rng, g, 1);
    const RatMat b = random_rat_matrix(rng, g, g * g);
    RatMat uu = rat_kron(u, RatMat::Identity(g, g));  // U = u (x) I_g
    RatMat uut = uu * uu.transpose();
    bool first = structured_transpose(b * uut) == RatMat(u * u.transpose() * structured_transpose(b));
    bool second = structured_transpose(u * u.transpose() * b) ==
                  RatMat(structured_transpose(b) * uut);
    return first && second;
}

bool check_aug12a8(int g, std::mt19937_64& rng) {
    const RatVec u = random_rat_matrix(rng, g, 1);
    const RatMat a = random_rat_matrix(rng, g, g);
    RatMat lhs = structured_transpose(rat_kron(RatMat(u.transpose()), RatMat(a.transpose())));
    RatMat rhs = u * vec(a).transpose();
    return lhs == rhs;
}

bool check_aug14c8(int g, std::mt19937_64& rng) {
    const RatVec u = random_rat_matrix(rng, g, 1);
    const RatVec v = random_rat_matrix(rng, g, 1);
    const RatVec w = random_rat_matrix(rng, g, 1);
    const RatVec y = random_rat_matrix(rng, g * g, 1);
    RatMat ut = u.transpose();
    RatMat vw = rat_kron(RatMat(v.transpose()), RatMat(w.transpose()));  // v^T (x) w^T
    RatMat uu = rat_kron(u, RatMat::Identity(g, g));

    RatMat t1 = u * vw;
    RatMat t2 = rat_kron(u, vw);
    if (!(t1 == t2)) return false;
    RatMat st = structured_transpose(t2);
    RatMat r1 = rat_kron(ut, rat_kron(v, RatMat(w.transpose())));
    RatMat r2 = rat_kron(v, RatMat(w.transpose())) * uu.transpose();
    RatMat r3 = v * rat_kron(ut, RatMat(w.transpose()));
    if (!(st == r1 && st == r2 && st == r3)) return false;

    RatMat lhs2 = structured_transpose(u * y.transpose());
    RatMat rhs2 = mat_g(y, g).transpose() * uu.transpose();
    return lhs2 == rhs2;
}

bool check_z01sym_general(int g, std::mt19937_64& rng) {
    NcPoly p = random_symmetric_poly(g, 2 + static_cast<int>(rng() % 4), 5, rng);
    int d = *p.degree();
    if (d < 2) return true;
    MiddleMatrix z = build_middle_matrix(p);
    for (int j = 0; j <= d - 2; ++j) {
        RatMat z0j = z.scalar_block(0, j);
        const long bw = power_long(g, j);
        for (int s = 0; s < g; ++s)
            for (int t = 0; t < g; ++t)
                if (!(RatMat(z0j.block(s, t * bw, 1, bw)) == RatMat(z0j.block(t, s * bw, 1, bw))))
                    return false;
    }
    return true;
}

}  // namespace

const std::vector<IdentityId>& all_identities() {
    static const std::vector<IdentityId> ids = {
        IdentityId::Ids1,      IdentityId::Ids2,    IdentityId::Ids3,    IdentityId::Ids4,
        IdentityId::Ids5,      IdentityId::Ids6,    IdentityId::Ids7,    IdentityId::Ids8,
        IdentityId::Ids9,      IdentityId::Ids10,   IdentityId::Ids11,   IdentityId::Ids12,
        IdentityId::Ids13,     IdentityId::Ids14,   IdentityId::Ids15,   IdentityId::Nicesplit,
        IdentityId::Jun3a7,    IdentityId::Aug12a8, IdentityId::Aug14c8,
        IdentityId::Z01symGeneral,
    };
    return ids;
}

std::string identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::Ids1: return "kron-shift-1";
        case IdentityId::Ids2: return "kron-shift-2";
        case IdentityId::Ids3: return "kron-shift-3";
        case IdentityId::Ids4: return "col-square-split";
        case IdentityId::Ids5: return "product-as-kron-row";
        case IdentityId::Ids6: return "powers-of-linear-form";
        case IdentityId::Ids7: return "rank-one-degree-3";
        case IdentityId::Ids8: return "reversal-shift-row";
        case IdentityId::Ids9: return "reversal-degree-3";
        case IdentityId::Ids10: return "col-kron-recursion";
        case IdentityId::Ids11: return "vec-bilinear";
        case IdentityId::Ids12: return "kron-commute";
        case IdentityId::Ids13: return "col-cube-split";
        case IdentityId::Ids14: return "kron-split-product";
        case IdentityId::Ids15: return "mixed-product";
        case IdentityId::Nicesplit: return "nice-split";
        case IdentityId::Jun3a7: return "structured-transpose-shift";
        case IdentityId::Aug12a8: return "structured-transpose-vec";
        case IdentityId::Aug14c8: return "structured-transpose-triple";
        case IdentityId::Z01symGeneral: return "block-symmetry-Z0j";
    }
    return "unknown";
}

IdentityReport verify_identity(IdentityId id, int g, std::mt19937_64& rng, int trials) {
    IdentityReport rep{id, identity_name(id), true, trials, ""};
    for (int t = 0; t < trials; ++t) {
        bool ok = false;
        switch (id) {
            case IdentityId::Nicesplit: ok = check_nicesplit(g, rng); break;
            case IdentityId::Jun3a7: ok = check_jun3a7(g, rng); break;
            case IdentityId::Aug12a8: ok = check_aug12a8(g, rng); break;
            case IdentityId::Aug14c8: ok = check_aug14c8(g, rng); break;
            case IdentityId::Z01symGeneral: ok = check_z01sym_general(g, rng); break;
            default: ok = check_ids(id, g, rng); break;
        }
        if (!ok) {
            rep.pass = false;
            rep.detail = "failed at g=" + std::to_string(g) + ", trial " + std::to_string(t);
            return rep;
        }
    }
    return rep;
}

std::vector<IdentityReport> run_identity_suite(const std::vector<int>& gs, std::uint64_t seed,
                                               int trials) {
    std::mt19937_64 rng(seed);
    std::vector<IdentityReport> out;
    for (IdentityId id : all_identities()) {
        IdentityReport merged{id, identity_name(id), true, 0, ""};
        for (int g : gs) {
            IdentityReport r = verify_identity(id, g, rng, trials);
            merged.trials += r.trials;
            if (!r.pass) {
                merged.pass = false;
                merged.detail = r.detail;
                break;
            }
        }
        out.push_back(merged);
    }
    return out;
}

}  // namespace nchess
