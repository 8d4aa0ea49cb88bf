#ifndef DWBC_RMATRIX_HPP
#define DWBC_RMATRIX_HPP

#include "dwbc/matrix.hpp"
#include "dwbc/weights.hpp"

namespace dwbc {

// Spin-1/2 R-matrix in the ordered pair basis (++, +-, -+, --), first factor
// auxiliary, second quantum.
template <class C>
Mat<C> r6(const C& lam, const C& nu, const C& eta, double delta_gen = kDeltaGen) {
    const C den = sh(lam - nu + eta);
    if (abs_d(den) < delta_gen) throw SingularWeight("r6: sh(lam - nu + eta) vanishes");
    Mat<C> r(4, 4);
    const C bb = sh(lam - nu) / den;
    const C cc = sh(eta) / den;
    r(0, 0) = C(1, 0);
    r(1, 1) = bb;
    r(1, 2) = cc;
    r(2, 1) = cc;
    r(2, 2) = bb;
    r(3, 3) = C(1, 0);
    return r;
}

// L-weight matrix: diag-block form with entries a, b, c.
template <class C>
Mat<C> l6(const C& lam, const C& nu, const C& eta) {
    Mat<C> m(4, 4);
    const C a = w_a(lam, nu, eta);
    const C b = w_b(lam, nu, eta);
    const C c = w_c<C>(eta);
    m(0, 0) = a;
    m(1, 1) = b;
    m(1, 2) = c;
    m(2, 1) = c;
    m(2, 2) = b;
    m(3, 3) = a;
    return m;
}

}  // namespace dwbc

#endif
