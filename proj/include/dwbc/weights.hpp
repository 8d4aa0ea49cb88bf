#ifndef DWBC_WEIGHTS_HPP
#define DWBC_WEIGHTS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dwbc/errors.hpp"
#include "dwbc/scalar.hpp"

namespace dwbc {

enum class WeightKind { a, b, c, d, e };

// Scalar vertex weights:
//   a = sh(lam - nu + eta/2),  b = sh(lam - nu - eta/2),  c = sh(eta),
//   d = sh(lam - nu),          e = sh(lam - nu + eta).
template <class C>
C weight(WeightKind kind, const C& lam, const C& nu, const C& eta) {
    const C x = lam - nu;
    const C half = eta / C(2, 0);
    switch (kind) {
        case WeightKind::a: return sh(x + half);
        case WeightKind::b: return sh(x - half);
        case WeightKind::c: return sh(eta);
        case WeightKind::d: return sh(x);
        case WeightKind::e: return sh(x + eta);
    }
    return C(0, 0);
}

template <class C>
C w_a(const C& lam, const C& nu, const C& eta) { return weight(WeightKind::a, lam, nu, eta); }
template <class C>
C w_b(const C& lam, const C& nu, const C& eta) { return weight(WeightKind::b, lam, nu, eta); }
template <class C>
C w_c(const C& eta) { return sh(eta); }
template <class C>
C w_d(const C& lam, const C& nu) { return sh(lam - nu); }
template <class C>
C w_e(const C& lam, const C& nu, const C& eta) { return sh(lam - nu + eta); }

// phi = c / (a b); the entry function of the partition-function determinant.
template <class C>
C phi(const C& lam, const C& nu, const C& eta, double delta_gen = kDeltaGen) {
    const C ab = w_a(lam, nu, eta) * w_b(lam, nu, eta);
    if (abs_d(ab) < delta_gen * delta_gen)
        throw SingularWeight("phi: a*b vanishes within tolerance");
    return w_c<C>(eta) / ab;
}

// (f, g) of the exchange algebra:
//   f(mu, lam) = sh(lam - mu + eta) / sh(lam - mu),  g(mu, lam) = sh(eta) / sh(lam - mu).
template <class C>
std::pair<C, C> fg(const C& mu, const C& lam, const C& eta, double delta_gen = kDeltaGen) {
    const C den = sh(lam - mu);
    if (abs_d(den) < delta_gen)
        throw SingularWeight("fg: sh(lam - mu) vanishes within tolerance");
    return {sh(lam - mu + eta) / den, sh(eta) / den};
}

template <class C>
struct ModelParams6 {
    C eta;
    std::vector<C> lambdas;
    std::vector<C> nus;

    int size() const { return int(lambdas.size()); }
};

template <class C>
struct ModelParams19 {
    C eta;
    std::vector<C> zs;
    std::vector<C> ws;

    int size() const { return int(zs.size()); }
};

template <class CTo, class CFrom>
ModelParams6<CTo> params_cast(const ModelParams6<CFrom>& p) {
    ModelParams6<CTo> q;
    q.eta = cx_cast<CTo>(p.eta);
    for (const auto& l : p.lambdas) q.lambdas.push_back(cx_cast<CTo>(l));
    for (const auto& n : p.nus) q.nus.push_back(cx_cast<CTo>(n));
    return q;
}

template <class CTo, class CFrom>
ModelParams19<CTo> params_cast(const ModelParams19<CFrom>& p) {
    ModelParams19<CTo> q;
    q.eta = cx_cast<CTo>(p.eta);
    for (const auto& z : p.zs) q.zs.push_back(cx_cast<CTo>(z));
    for (const auto& w : p.ws) q.ws.push_back(cx_cast<CTo>(w));
    return q;
}

// Genericity of a parameter set: all sh-combinations that appear in
// denominators stay away from zero by delta_gen.  Returns an empty string
// when generic, otherwise a description of the first violation.
template <class C>
std::string genericity_violation(const ModelParams6<C>& p, double delta_gen = kDeltaGen) {
    const int n = p.size();
    const C eta = p.eta;
    const C half = eta / C(2, 0);
    if (abs_d(sh(eta)) < delta_gen) return "sh(eta) below tolerance";
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            const C dl = p.lambdas[a] - p.lambdas[b];
            if (abs_d(sh(dl)) < delta_gen) return "sh(lambda_a - lambda_b) below tolerance";
            if (abs_d(sh(dl + eta)) < delta_gen) return "sh(lambda_a - lambda_b + eta) below tolerance";
            if (abs_d(sh(dl - eta)) < delta_gen) return "sh(lambda_a - lambda_b - eta) below tolerance";
        }
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            if (abs_d(sh(p.nus[j] - p.nus[k])) < delta_gen)
                return "sh(nu_j - nu_k) below tolerance";
    for (int a = 0; a < n; ++a)
        for (int k = 0; k < n; ++k) {
            const C x = p.lambdas[a] - p.nus[k];
            if (abs_d(sh(x + half)) < delta_gen || abs_d(sh(x - half)) < delta_gen)
                return "sh(lambda_a - nu_k +- eta/2) below tolerance";
        }
    return {};
}

template <class C>
bool is_generic(const ModelParams6<C>& p, double delta_gen = kDeltaGen) {
    return genericity_violation(p, delta_gen).empty();
}

template <class C>
void require_generic(const ModelParams6<C>& p, double delta_gen = kDeltaGen) {
    const std::string v = genericity_violation(p, delta_gen);
    if (!v.empty()) throw SingularWeight("non-generic parameters: " + v);
}

namespace detail {

// Map a raw 64-bit draw to [-0.5, 0.5); fixed arithmetic so that sampled
// parameter sets are bit-identical across platforms.
inline double unit_box(uint64_t x) { return double(x >> 11) * 0x1p-53 - 0.5; }

}  // namespace detail

// Deterministic rejection sampler: rapidities drawn uniformly from the box
// Re, Im in [-0.5, 0.5) using the mt19937-64 generator, resampled until the
// set passes the genericity check.
inline ModelParams6<cxd> sample_generic_params(int n, uint64_t seed, cxd eta,
                                               double delta_gen = kDeltaGen) {
    if (n < 1) throw PreconditionError("sample_generic_params: n must be >= 1");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        ModelParams6<cxd> p;
        p.eta = eta;
        for (int i = 0; i < 2 * n; ++i) {
            const double re = detail::unit_box(rng());
            const double im = detail::unit_box(rng());
            (i < n ? p.lambdas : p.nus).push_back(cxd(re, im));
        }
        if (is_generic(p, delta_gen)) return p;
    }
    throw SamplingFailed("sample_generic_params: no generic set after 10000 rejections");
}

inline ModelParams19<cxd> sample_generic_params19(int n, uint64_t seed, cxd eta,
                                                  double delta_gen = kDeltaGen);

}  // namespace dwbc

#endif
