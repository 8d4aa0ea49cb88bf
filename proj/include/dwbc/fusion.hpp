#ifndef DWBC_FUSION_HPP
#define DWBC_FUSION_HPP

#include <array>
#include <string>
#include <vector>

#include "dwbc/matrix.hpp"
#include "dwbc/rmatrix.hpp"
#include "dwbc/weights.hpp"

namespace dwbc {

// Gauge-transformed spin-1/2 R-matrix: conjugation by diag(1, e^lam) on each
// factor.  Diagonal entries coincide with r6.
template <class C>
Mat<C> r_plus(const C& lam, const C& nu, const C& eta, double delta_gen = kDeltaGen) {
    Mat<C> r = r6(lam, nu, eta, delta_gen);
    const C el = cexp(lam);
    const C en = cexp(nu);
    // G = diag(1, e^lam) (x) diag(1, e^nu); R+ = G R G^{-1}.
    const std::array<C, 4> g = {C(1, 0), en, el, el * en};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = g[i] * r(i, j) / g[j];
    return r;
}

// Projection operator onto the symmetric (spin-1) subspace of a pair of
// spin-1/2 sites.
template <class C>
Mat<C> projector_p(const C& eta, double delta_gen = kDeltaGen) {
    const C chh = ch(eta);
    if (abs_d(chh) < delta_gen) throw SingularWeight("projector_p: ch(eta) vanishes");
    Mat<C> p(4, 4);
    const C inv2ch = C(1, 0) / (C(2, 0) * chh);
    p(0, 0) = C(1, 0);
    p(1, 1) = cexp(eta) * inv2ch;
    p(1, 2) = inv2ch;
    p(2, 1) = inv2ch;
    p(2, 2) = cexp(-eta) * inv2ch;
    p(3, 3) = C(1, 0);
    return p;
}

// 4x3 embedding of the spin-1 states (|1>, |0>, |-1>) into a spin-1/2 pair;
// its transpose is a left inverse on the symmetric subspace, and
// embed * embed^T equals the projector P.
template <class C>
Mat<C> spin1_embed(const C& eta) {
    using std::sqrt;
    Mat<C> e(4, 3);
    const C em = cexp(-eta);
    const C norm = C(1, 0) / sqrt(C(1, 0) + em * em);
    e(0, 0) = C(1, 0);
    e(1, 1) = norm;
    e(2, 1) = norm * em;
    e(3, 2) = C(1, 0);
    return e;
}

// The four gauge-transformed factors and projectors of the fusion product,
// as 16x16 operators on the pair(x)pair space.  Qubit order within the
// 16-dim space: (2J, 2J-1, 2K-1, 2K), i.e. each projector acts on adjacent
// factors in its natural order.
template <class C>
Mat<C> fused_core16(const C& z, const C& w, const C& eta, double delta_gen = kDeltaGen) {
    const Mat<C> r_a1b2 = op_on_sites(r_plus(z + eta, w, eta, delta_gen), 2, 4, 0, 3);
    const Mat<C> r_a1b1 = op_on_sites(r_plus(z + eta, w + eta, eta, delta_gen), 2, 4, 0, 2);
    const Mat<C> r_a2b2 = op_on_sites(r_plus(z, w, eta, delta_gen), 2, 4, 1, 3);
    const Mat<C> r_a2b1 = op_on_sites(r_plus(z, w + eta, eta, delta_gen), 2, 4, 1, 2);
    return r_a1b2 * r_a1b1 * r_a2b2 * r_a2b1;
}

template <class C>
Mat<C> p_pair16(const C& eta, int pair, double delta_gen = kDeltaGen) {
    // pair 0: factors (0,1) = (2J, 2J-1); pair 1: factors (2,3) = (2K-1, 2K).
    const Mat<C> p = projector_p(eta, delta_gen);
    const Mat<C> id = Mat<C>::identity(4);
    return pair == 0 ? kron(p, id) : kron(id, p);
}

template <class C>
Mat<C> r1_plus16(const C& z, const C& w, const C& eta, double delta_gen = kDeltaGen) {
    const Mat<C> pj = p_pair16(eta, 0, delta_gen);
    const Mat<C> pk = p_pair16(eta, 1, delta_gen);
    const Mat<C> core = fused_core16(z, w, eta, delta_gen);
    return pk * pj * core * pj * pk;
}

// Fused spin-1 R-matrix (gauge-transformed form), compressed to the 9-dim
// space with basis (|1>, |0>, |-1>) per factor.
template <class C>
Mat<C> r1_plus(const C& z, const C& w, const C& eta, double delta_gen = kDeltaGen) {
    const Mat<C> e = spin1_embed(eta);
    const Mat<C> e2 = kron(e, e);
    return e2.transpose() * r1_plus16(z, w, eta, delta_gen) * e2;
}

// Symmetric spin-1 R-matrix: gauge factors diag(1, e^z, e^{2z}) removed.
template <class C>
Mat<C> r1(const C& z, const C& w, const C& eta, double delta_gen = kDeltaGen) {
    Mat<C> r = r1_plus(z, w, eta, delta_gen);
    const C ez = cexp(z);
    const C ew = cexp(w);
    const std::array<C, 3> pj = {C(1, 0), ez, ez * ez};
    const std::array<C, 3> pk = {C(1, 0), ew, ew * ew};
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
            const C gi = pj[i / 3] * pk[i % 3];
            const C gj = pj[j / 3] * pk[j % 3];
            r(i, j) = r(i, j) * gj / gi;
        }
    return r;
}

template <class C>
C conj_mul(const C& x, const C& y) {
    using std::conj;
    return conj(x) * y;
}

// Table C^delta_{eps eps'}; delta index 0,1,2 <-> spin +1, 0, -1 and pair
// index 2*bit(eps) + bit(eps') with bit(+) = 0.
struct FusionCoeffs {
    std::array<std::array<cxd, 4>, 3> c;
    double residual = 0.0;
};

// Solves the projector splitting identity for the C coefficients column by
// column and checks the fit residual.  The coefficient table is never
// hardcoded; only the resulting support pattern is asserted by callers.
template <class C>
FusionCoeffs fusion_coeffs(const C& eta, double delta_gen = kDeltaGen) {
    const Mat<C> p = projector_p(eta, delta_gen);
    const Mat<C> e = spin1_embed(eta);
    FusionCoeffs out;
    double res2 = 0, scale2 = 0;
    for (int d = 0; d < 3; ++d) {
        // lhs = pi^delta P where pi^delta = embed e_d e_d^T embed^T.
        Mat<C> lhs(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                C acc(0, 0);
                for (int k = 0; k < 4; ++k) acc += e(i, d) * e(k, d) * p(k, j);
                lhs(i, j) = acc;
            }
        // rhs column q is c * P[:,q]; least-squares fit per column.
        for (int q = 0; q < 4; ++q) {
            C num(0, 0), den(0, 0);
            for (int i = 0; i < 4; ++i) {
                num += conj_mul(p(i, q), lhs(i, q));
                den += conj_mul(p(i, q), p(i, q));
            }
            const C cdq = abs_d(den) > 0 ? num / den : C(0, 0);
            out.c[d][q] = to_cxd(cdq);
            for (int i = 0; i < 4; ++i) {
                const C r = lhs(i, q) - cdq * p(i, q);
                res2 += abs_d(r) * abs_d(r);
                scale2 += abs_d(lhs(i, q)) * abs_d(lhs(i, q));
            }
        }
    }
    using std::sqrt;
    out.residual = std::sqrt(res2) / std::max(std::sqrt(scale2), 1e-300);
    if (out.residual > 1e-10)
        throw NoSolution("fusion_coeffs: projector splitting identity fit residual too large");
    return out;
}

// Doubled six-vertex parameters of the fused model:
//   lambda = (z1, z1+eta, ..., zN, zN+eta),  nu = (w1+eta, w1, ..., wN+eta, wN).
// Genericity is checked at the level of the original z, w (the built-in
// intra-pair eta offsets are structural and excluded from the check).
template <class C>
std::string doubled_genericity_violation(const ModelParams19<C>& p, double delta_gen = kDeltaGen) {
    const int n = p.size();
    const C eta = p.eta;
    if (abs_d(sh(eta)) < delta_gen) return "sh(eta) below tolerance";
    if (abs_d(sh(C(2, 0) * eta)) < delta_gen) return "sh(2 eta) below tolerance";
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const C dz = p.zs[i] - p.zs[j];
            for (int m = -2; m <= 2; ++m)
                if (abs_d(sh(dz + C(double(m), 0) * eta)) < delta_gen)
                    return "z_i - z_j too close to a multiple of eta";
            const C dw = p.ws[i] - p.ws[j];
            for (int m = -2; m <= 2; ++m)
                if (abs_d(sh(dw + C(double(m), 0) * eta)) < delta_gen)
                    return "w_i - w_j too close to a multiple of eta";
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const C x = p.zs[i] - p.ws[j];
            for (int m = -3; m <= 3; m += 2)
                if (abs_d(sh(x + C(double(m) / 2.0, 0) * eta)) < delta_gen)
                    return "z_i - w_j too close to a half-odd multiple of eta";
        }
    return {};
}

template <class C>
ModelParams6<C> doubled_params(const ModelParams19<C>& p, double delta_gen = kDeltaGen) {
    const std::string v = doubled_genericity_violation(p, delta_gen);
    if (!v.empty()) throw SingularWeight("doubled_params: " + v);
    ModelParams6<C> q;
    q.eta = p.eta;
    for (const auto& z : p.zs) {
        q.lambdas.push_back(z);
        q.lambdas.push_back(z + p.eta);
    }
    for (const auto& w : p.ws) {
        q.nus.push_back(w + p.eta);
        q.nus.push_back(w);
    }
    return q;
}

}  // namespace dwbc

namespace dwbc {

inline ModelParams19<cxd> sample_generic_params19(int n, uint64_t seed, cxd eta,
                                                  double delta_gen) {
    if (n < 1) throw PreconditionError("sample_generic_params19: n must be >= 1");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        ModelParams19<cxd> p;
        p.eta = eta;
        for (int i = 0; i < 2 * n; ++i) {
            const double re = detail::unit_box(rng());
            const double im = detail::unit_box(rng());
            (i < n ? p.zs : p.ws).push_back(cxd(re, im));
        }
        if (doubled_genericity_violation(p, delta_gen).empty()) return p;
    }
    throw SamplingFailed("sample_generic_params19: no generic set after 10000 rejections");
}

}  // namespace dwbc

#endif
