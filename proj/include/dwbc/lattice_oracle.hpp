#ifndef DWBC_LATTICE_ORACLE_HPP
#define DWBC_LATTICE_ORACLE_HPP

#include <functional>
#include <vector>

#include "dwbc/fusion.hpp"
#include "dwbc/matrix.hpp"
#include "dwbc/rmatrix.hpp"
#include "dwbc/weights.hpp"

namespace dwbc {

// Boundary-correlator selectors.  eps entries are +1/-1 (spin-1/2),
// deltas entries are +1/0/-1 (spin-1).
struct CorrSpec {
    int r = 0;
    std::vector<int> eps;
};

struct CorrSpec19 {
    int r = 0;
    std::vector<int> deltas;
};

inline constexpr int kNMax6 = 12;
inline constexpr int kNMax19 = 6;

namespace detail {

// State-vector row transfer for a qudit chain.  The quantum state is indexed
// with site 1 as the least significant base-d digit.  site_op(k) must return
// the d^2 x d^2 vertex weight matrix at column k (aux first factor, quantum
// second), with aux state 0 = highest weight.  Applies
//   <aux_out| L_N ... L_1 |aux_in>
// to the state vector.
template <class C>
std::vector<C> apply_row(const std::vector<C>& v, int n_sites, int d, int aux_in, int aux_out,
                         const std::function<Mat<C>(int)>& site_op) {
    std::vector<std::vector<C>> cur(d, std::vector<C>(v.size(), C(0, 0)));
    cur[aux_in] = v;
    size_t stride = 1;
    for (int k = 0; k < n_sites; ++k) {
        const Mat<C> m = site_op(k);
        std::vector<std::vector<C>> nxt(d, std::vector<C>(v.size(), C(0, 0)));
        for (size_t i = 0; i < v.size(); ++i) {
            const int s = int(i / stride) % d;
            const size_t base = i - size_t(s) * stride;
            for (int ain = 0; ain < d; ++ain) {
                const C& amp = cur[ain][i];
                if (amp == C(0, 0)) continue;
                for (int aout = 0; aout < d; ++aout)
                    for (int t = 0; t < d; ++t) {
                        const C& w = m(aout * d + t, ain * d + s);
                        if (w == C(0, 0)) continue;
                        nxt[aout][base + size_t(t) * stride] += w * amp;
                    }
            }
        }
        cur.swap(nxt);
        stride *= d;
    }
    return cur[aux_out];
}

inline size_t pow_sz(int d, int n) {
    size_t r = 1;
    for (int i = 0; i < n; ++i) r *= size_t(d);
    return r;
}

}  // namespace detail

// Generic DWBC contraction: weight(alpha, k) supplies the vertex matrix at
// row alpha, column k (both 0-based).  Boundary states: quantum starts in the
// all-0 (highest weight) product state and ends in the all-(d-1) one; the aux
// space enters as d-1 and leaves as 0 on every row.  Projectors with digit
// proj[k] are inserted on sites 1..s between rows r and r+1.
template <class C>
C contract_dwbc(int n, int d, const std::function<Mat<C>(int, int)>& weight_fn, int r = 0,
                const std::vector<int>& proj = {}) {
    const size_t dim = detail::pow_sz(d, n);
    std::vector<C> v(dim, C(0, 0));
    v[0] = C(1, 0);
    for (int alpha = 0; alpha < n; ++alpha) {
        if (alpha == r && !proj.empty()) {
            size_t stride = 1;
            for (size_t k = 0; k < proj.size(); ++k) {
                for (size_t i = 0; i < dim; ++i)
                    if (int(i / stride) % d != proj[k]) v[i] = C(0, 0);
                stride *= size_t(d);
            }
        }
        v = detail::apply_row<C>(v, n, d,
                                 /*aux_in=*/d - 1, /*aux_out=*/0,
                                 [&](int k) { return weight_fn(alpha, k); });
    }
    if (r == n && !proj.empty()) {
        // Projectors directly against the final covector.
        for (int digit : proj)
            if (digit != d - 1) return C(0, 0);
    }
    return v[dim - 1];
}

// --- six-vertex model -----------------------------------------------------

// B-operator of the monodromy matrix as an explicit 2^N x 2^N matrix.
template <class C>
Mat<C> monodromy_b6(const C& lam, const ModelParams6<C>& p, int n_max = kNMax6) {
    const int n = p.size();
    if (n > n_max) throw SizeLimit("monodromy_b6: N exceeds budget");
    const size_t dim = detail::pow_sz(2, n);
    Mat<C> b(int(dim), int(dim));
    for (size_t col = 0; col < dim; ++col) {
        std::vector<C> v(dim, C(0, 0));
        v[col] = C(1, 0);
        v = detail::apply_row<C>(v, n, 2, 1, 0, [&](int k) { return l6(lam, p.nus[k], p.eta); });
        for (size_t row = 0; row < dim; ++row) b(int(row), int(col)) = v[row];
    }
    return b;
}

template <class C>
C z6_oracle(const ModelParams6<C>& p, int n_max = kNMax6) {
    if (p.size() > n_max) throw SizeLimit("z6_oracle: N exceeds budget");
    return contract_dwbc<C>(p.size(), 2,
                            [&](int a, int k) { return l6(p.lambdas[a], p.nus[k], p.eta); });
}

template <class C>
C corr6_unnormalized_oracle(const ModelParams6<C>& p, const CorrSpec& spec, int n_max = kNMax6) {
    const int n = p.size();
    if (n > n_max) throw SizeLimit("corr6_oracle: N exceeds budget");
    if (spec.r < 0 || spec.r > n || int(spec.eps.size()) > n || spec.eps.empty())
        throw PreconditionError("corr6_oracle: invalid spec");
    std::vector<int> proj;
    for (int e : spec.eps) proj.push_back(e > 0 ? 0 : 1);
    return contract_dwbc<C>(n, 2,
                            [&](int a, int k) { return l6(p.lambdas[a], p.nus[k], p.eta); },
                            spec.r, proj);
}

template <class C>
C corr6_oracle(const ModelParams6<C>& p, const CorrSpec& spec, int n_max = kNMax6) {
    const C z = z6_oracle(p, n_max);
    if (abs_d(z) < 1e-30) throw DivisionByZero("corr6_oracle: partition function vanishes");
    return corr6_unnormalized_oracle(p, spec, n_max) / z;
}

// Direct sum over DWBC edge configurations; the ice rule is enforced by the
// vanishing entries of the vertex weight.  Feasible only for tiny N.
template <class C>
C z6_config_sum(const ModelParams6<C>& p, int n_max = 4) {
    const int n = p.size();
    if (n > n_max) throw SizeLimit("z6_config_sum: N exceeds budget");
    std::vector<Mat<C>> lrow;  // weights cached per (alpha, k)
    lrow.reserve(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int k = 0; k < n; ++k) lrow.push_back(l6(p.lambdas[a], p.nus[k], p.eta));

    // vert[k]: state of the vertical edge entering (row alpha, column k) from
    // below.  0 = up spin (+).  Bottom boundary all +, left edge of each row
    // is -, right must exit +, top must exit all -.
    std::vector<int> vert(n, 0);
    C total(0, 0);
    std::function<void(int, int, int, C)> walk = [&](int a, int k, int aux, C acc) {
        if (k == n) {
            if (aux != 0) return;  // right boundary +
            if (a + 1 == n) {
                bool ok = true;
                for (int j = 0; j < n; ++j) ok = ok && vert[j] == 1;
                if (ok) total += acc;
            } else {
                walk(a + 1, 0, 1, acc);
            }
            return;
        }
        const Mat<C>& m = lrow[size_t(a) * n + k];
        const int qin = vert[k];
        for (int aout = 0; aout < 2; ++aout)
            for (int qout = 0; qout < 2; ++qout) {
                const C w = m(aout * 2 + qout, aux * 2 + qin);
                if (w == C(0, 0)) continue;
                const int saved = vert[k];
                vert[k] = qout;
                walk(a, k + 1, aout, acc * w);
                vert[k] = saved;
            }
    };
    walk(0, 0, 1, C(1, 0));
    return total;
}

// --- nineteen-vertex model ------------------------------------------------

template <class C>
C z19_oracle(const ModelParams19<C>& p, int n_max = kNMax19) {
    const int n = p.size();
    if (n > n_max) throw SizeLimit("z19_oracle: N exceeds budget");
    const C half = p.eta / C(2, 0);
    return contract_dwbc<C>(n, 3,
                            [&](int a, int k) { return r1(p.zs[a] - half, p.ws[k], p.eta); });
}

template <class C>
C corr19_unnormalized_oracle(const ModelParams19<C>& p, const CorrSpec19& spec,
                             int n_max = kNMax19) {
    const int n = p.size();
    if (n > n_max) throw SizeLimit("corr19_oracle: N exceeds budget");
    if (spec.r < 0 || spec.r > n || int(spec.deltas.size()) > n || spec.deltas.empty())
        throw PreconditionError("corr19_oracle: invalid spec");
    const C half = p.eta / C(2, 0);
    std::vector<int> proj;
    for (int d : spec.deltas) proj.push_back(1 - d);  // +1 -> 0, 0 -> 1, -1 -> 2
    return contract_dwbc<C>(n, 3,
                            [&](int a, int k) { return r1(p.zs[a] - half, p.ws[k], p.eta); },
                            spec.r, proj);
}

template <class C>
C corr19_oracle(const ModelParams19<C>& p, const CorrSpec19& spec, int n_max = kNMax19) {
    const C z = z19_oracle(p, n_max);
    if (abs_d(z) < 1e-30) throw DivisionByZero("corr19_oracle: partition function vanishes");
    return corr19_unnormalized_oracle(p, spec, n_max) / z;
}

}  // namespace dwbc

#endif
