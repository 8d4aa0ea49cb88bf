#ifndef DWBC_IK_DETERMINANT_HPP
#define DWBC_IK_DETERMINANT_HPP

#include <vector>

#include "dwbc/lattice_oracle.hpp"
#include "dwbc/matrix.hpp"
#include "dwbc/weights.hpp"

namespace dwbc {

template <class C>
C det_complex(const Mat<C>& m) {
    return det_lu(m);
}

// Matrix of phi(lambda_alpha, nu_k).
template <class C>
Mat<C> phi_matrix(const ModelParams6<C>& p, double delta_gen = kDeltaGen) {
    const int n = p.size();
    Mat<C> m(n, n);
    for (int a = 0; a < n; ++a)
        for (int k = 0; k < n; ++k) m(a, k) = phi(p.lambdas[a], p.nus[k], p.eta, delta_gen);
    return m;
}

// Determinant form of the DWBC partition function.
template <class C>
C z6_det(const ModelParams6<C>& p, double delta_gen = kDeltaGen) {
    const int n = p.size();
    C num(1, 0);
    for (int a = 0; a < n; ++a)
        for (int k = 0; k < n; ++k)
            num *= w_a(p.lambdas[a], p.nus[k], p.eta) * w_b(p.lambdas[a], p.nus[k], p.eta);
    C den(1, 0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) den *= w_d(p.lambdas[b], p.lambdas[a]);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) den *= w_d(p.nus[j], p.nus[k]);
    if (abs_d(den) < 1e-300) throw SingularWeight("z6_det: coinciding rapidities");
    return num * det_complex(phi_matrix(p, delta_gen)) / den;
}

namespace detail {

template <class C>
ModelParams6<C> drop_lambda_nu1(const ModelParams6<C>& p, int alpha0) {
    ModelParams6<C> q;
    q.eta = p.eta;
    for (int b = 0; b < p.size(); ++b)
        if (b != alpha0) q.lambdas.push_back(p.lambdas[b]);
    for (int k = 1; k < p.size(); ++k) q.nus.push_back(p.nus[k]);
    return q;
}

}  // namespace detail

// Relative residual of the partition-function recursion relating sizes N and
// N-1 after removing lambda_alpha and nu_1 (alpha is 1-based).
template <class C>
double z6_recursion_residual(const ModelParams6<C>& p, int alpha, double delta_gen = kDeltaGen) {
    const int n = p.size();
    if (n < 2) throw PreconditionError("z6_recursion_residual: N must be >= 2");
    if (alpha < 1 || alpha > n) throw PreconditionError("z6_recursion_residual: bad alpha");
    const int a0 = alpha - 1;
    const ModelParams6<C> q = detail::drop_lambda_nu1(p, a0);
    const C lhs = z6_det(q, delta_gen) / z6_det(p, delta_gen);

    const C la = p.lambdas[a0];
    const C nu1 = p.nus[0];
    C rhs = C((alpha - 1) % 2 == 0 ? 1 : -1, 0) /
            (w_a(la, nu1, p.eta) * w_b(la, nu1, p.eta));
    for (int b = 0; b < n; ++b) {
        if (b == a0) continue;
        rhs *= w_d(p.lambdas[b], la) / (w_a(p.lambdas[b], nu1, p.eta) * w_b(p.lambdas[b], nu1, p.eta));
    }
    for (int k = 1; k < n; ++k)
        rhs *= w_d(nu1, p.nus[k]) / (w_a(la, p.nus[k], p.eta) * w_b(la, p.nus[k], p.eta));
    rhs *= det_complex(phi_matrix(q, delta_gen)) / det_complex(phi_matrix(p, delta_gen));

    return abs_d(lhs - rhs) / std::max(abs_d(lhs), 1e-300);
}

namespace detail {

// Minor of m with the given rows and the first s columns removed.
// rows is a sorted list of 0-based indices.
template <class C>
C phi_minor_det(const Mat<C>& m, const std::vector<int>& rows_removed, int s) {
    const int n = m.rows();
    std::vector<int> keep;
    for (int i = 0; i < n; ++i) {
        bool drop = false;
        for (int r : rows_removed) drop = drop || r == i;
        if (!drop) keep.push_back(i);
    }
    Mat<C> sub(n - s, n - s);
    for (int i = 0; i < n - s; ++i)
        for (int j = 0; j < n - s; ++j) sub(i, j) = m(keep[i], s + j);
    return det_complex(sub);
}

}  // namespace detail

// General closed expression for the boundary correlation functions: an s-fold
// sum over injective index tuples with sign factor, single-index H weights,
// pairwise E weights and a minor of the phi matrix.
//
// Each pairwise E denominator is cancelled algebraically against the matching
// factor of an H product before anything is multiplied out.  This keeps the
// evaluator finite at the structurally degenerate points produced by fusion
// (lambda pairs offset by exactly eta), where the naive factorization is 0/0.
template <class C>
C corr6_closed(const ModelParams6<C>& p, const CorrSpec& spec, double delta_gen = kDeltaGen) {
    const int n = p.size();
    const int r = spec.r;
    const int s = int(spec.eps.size());
    if (r < 0 || r > n || s < 1 || s > n) throw PreconditionError("corr6_closed: invalid spec");
    const C eta = p.eta;
    const Mat<C> m = phi_matrix(p, delta_gen);
    const C detm = det_complex(m);
    if (abs_d(detm) < 1e-300) throw DivisionByZero("corr6_closed: det M vanishes");

    // Column prefactor.
    C pre(1, 0);
    for (int j = 0; j < s; ++j) {
        C num(1, 0), den(1, 0);
        for (int k = j + 1; k < n; ++k) num *= w_d(p.nus[j], p.nus[k]);
        for (int b = 0; b < r; ++b) den *= w_a(p.lambdas[b], p.nus[j], eta);
        for (int b = r; b < n; ++b) den *= w_b(p.lambdas[b], p.nus[j], eta);
        if (abs_d(den) < 1e-300) throw SingularWeight("corr6_closed: vanishing a/b prefactor");
        pre *= num / den;
    }

    std::vector<int> tuple(s, -1);   // 1-based alpha indices
    std::vector<char> used(n + 1, 0);
    C sum(0, 0);

    auto term_value = [&]() {
        // Sign exponent.
        long ex = 0;
        for (int j = 0; j < s; ++j)
            for (int k = j + 1; k < s; ++k)
                if (tuple[k] > tuple[j]) ++ex;
        for (int k = 0; k < s; ++k) {
            ex += tuple[k] - 1;
            if (spec.eps[k] > 0) ex += (n - (k + 1)) - r;
        }
        C val(ex % 2 == 0 ? 1 : -1, 0);

        // H factors with the cancelled entries skipped, and the sign flips
        // from the (-,+) pair cancellations.
        for (int j = 0; j < s; ++j) {
            const C lam = p.lambdas[tuple[j] - 1];
            C h(1, 0);
            if (spec.eps[j] < 0) {
                for (int b = 1; b <= r; ++b) {
                    // skip e(lambda_b, lam) when b pairs with an earlier '-'.
                    bool skip = false;
                    for (int q = 0; q < j; ++q)
                        skip = skip || (spec.eps[q] < 0 && tuple[q] == b);
                    if (!skip) h *= w_e(p.lambdas[b - 1], lam, eta);
                }
                for (int b = r + 1; b <= n; ++b) {
                    // skip d(lambda_b, lam) when b is a '+' member of the tuple
                    // (either side of a mixed pair).
                    bool skip = false;
                    for (int q = 0; q < s; ++q)
                        skip = skip || (spec.eps[q] > 0 && tuple[q] == b);
                    if (!skip) h *= w_d(p.lambdas[b - 1], lam);
                }
                C den(1, 0);
                for (int k = 0; k < n; ++k) den *= w_b(lam, p.nus[k], eta);
                if (abs_d(den) < 1e-300) throw SingularWeight("corr6_closed: H- denominator");
                h /= den;
            } else {
                for (int b = 1; b <= r; ++b) {
                    // d(lambda_b, lam): never cancelled here; mixed-pair
                    // cancellations for (+,-) pairs live in the '-' member's H.
                    h *= w_d(p.lambdas[b - 1], lam);
                }
                for (int b = r + 1; b <= n; ++b) {
                    bool skip = false;
                    for (int q = 0; q < j; ++q)
                        skip = skip || (spec.eps[q] > 0 && tuple[q] == b);
                    if (!skip) h *= w_e(lam, p.lambdas[b - 1], eta);
                }
                C den(1, 0);
                for (int k = 0; k < n; ++k) den *= w_a(lam, p.nus[k], eta);
                if (abs_d(den) < 1e-300) throw SingularWeight("corr6_closed: H+ denominator");
                h /= den;
            }
            val *= h;
        }

        // E numerators; denominators were absorbed above.
        for (int j = 0; j < s; ++j)
            for (int k = j + 1; k < s; ++k) {
                const C lj = p.lambdas[tuple[j] - 1];
                const C lk = p.lambdas[tuple[k] - 1];
                const int ej = spec.eps[j], ek = spec.eps[k];
                if (ej < 0 && ek > 0) {
                    val *= -w_a(lj, p.nus[k], eta) * w_a(lk, p.nus[j], eta);
                } else if (ej < 0 && ek < 0) {
                    val *= w_a(lj, p.nus[k], eta) * w_b(lk, p.nus[j], eta);
                } else if (ej > 0 && ek > 0) {
                    val *= w_b(lj, p.nus[k], eta) * w_a(lk, p.nus[j], eta);
                } else {
                    val *= w_b(lj, p.nus[k], eta) * w_b(lk, p.nus[j], eta);
                }
            }

        std::vector<int> rows;
        for (int q = 0; q < s; ++q) rows.push_back(tuple[q] - 1);
        return val * detail::phi_minor_det(m, rows, s);
    };

    std::function<void(int)> dfs = [&](int k) {
        if (k == s) {
            sum += term_value();
            return;
        }
        const int lo = spec.eps[k] < 0 ? 1 : r + 1;
        const int hi = spec.eps[k] < 0 ? r : n;
        for (int a = lo; a <= hi; ++a) {
            if (used[a]) continue;
            used[a] = 1;
            tuple[k] = a;
            dfs(k + 1);
            used[a] = 0;
        }
    };
    dfs(0);  // an unfillable selector yields the empty sum, i.e. 0

    return pre * sum / detm;
}

// Recursive evaluator: peels the first projector via the two recursion
// relations (down-spin and up-spin variants), descending to lattice size N-1
// with nu_1 and one lambda removed; the partition-function ratio between the
// two sizes is evaluated with the determinant form.
template <class C>
C corr6_recursive(const ModelParams6<C>& p, const CorrSpec& spec, double delta_gen = kDeltaGen) {
    const int n = p.size();
    const int r = spec.r;
    const int s = int(spec.eps.size());
    if (r < 0 || r > n || s < 0 || s > n) throw PreconditionError("corr6_recursive: invalid spec");
    if (s == 0) return C(1, 0);
    const C eta = p.eta;
    const C zn = z6_det(p, delta_gen);
    const C nu1 = p.nus[0];

    C sum(0, 0);
    const bool down = spec.eps[0] < 0;
    const int lo = down ? 1 : r + 1;
    const int hi = down ? r : n;
    for (int a = lo; a <= hi; ++a) {
        const C la = p.lambdas[a - 1];
        C w = w_c<C>(eta);
        if (down) {
            for (int b = 1; b <= r; ++b) {
                if (b == a) continue;
                const C lb = p.lambdas[b - 1];
                // f(lambda_a, lambda_b) = sh(lambda_b - lambda_a + eta) / sh(lambda_b - lambda_a)
                w *= w_b(lb, nu1, eta) * sh(lb - la + eta) / sh(lb - la);
            }
            for (int k = 1; k < n; ++k) w *= w_a(la, p.nus[k], eta);
        } else {
            for (int b = r + 1; b <= n; ++b) {
                if (b == a) continue;
                const C lb = p.lambdas[b - 1];
                w *= w_a(lb, nu1, eta) * sh(la - lb + eta) / sh(la - lb);
            }
            for (int k = 1; k < n; ++k) w *= w_b(la, p.nus[k], eta);
        }
        if (w == C(0, 0)) continue;

        const ModelParams6<C> q = detail::drop_lambda_nu1(p, a - 1);
        CorrSpec sub;
        sub.r = down ? r - 1 : r;
        sub.eps.assign(spec.eps.begin() + 1, spec.eps.end());
        const C f_sub = sub.eps.empty() ? C(1, 0) : corr6_recursive(q, sub, delta_gen);
        sum += w * (z6_det(q, delta_gen) / zn) * f_sub;
    }
    if (down) {
        for (int b = r + 1; b <= n; ++b) sum *= w_a(p.lambdas[b - 1], nu1, eta);
    } else {
        for (int b = 1; b <= r; ++b) sum *= w_b(p.lambdas[b - 1], nu1, eta);
    }
    return sum;
}

}  // namespace dwbc

#endif
