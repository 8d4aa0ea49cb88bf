#ifndef DWBC_SCALAR_HPP
#define DWBC_SCALAR_HPP

#include <cmath>
#include <complex>

#include <boost/multiprecision/cpp_complex.hpp>

namespace dwbc {

// Default complex scalar and the extended-precision one (~50 significant digits).
using cxd = std::complex<double>;
using cx50 = boost::multiprecision::cpp_complex_50;

// Default genericity tolerance; all singularity guards key off it.
inline constexpr double kDeltaGen = 1e-3;

template <class C>
struct scalar_traits;

template <>
struct scalar_traits<cxd> {
    using real_type = double;
    static constexpr const char* name = "double";
};

template <>
struct scalar_traits<cx50> {
    using real_type = cx50::value_type;
    static constexpr const char* name = "extended";
};

template <class C>
C sh(const C& z) {
    using std::sinh;
    return sinh(z);
}

template <class C>
C ch(const C& z) {
    using std::cosh;
    return cosh(z);
}

template <class C>
C cexp(const C& z) {
    using std::exp;
    return exp(z);
}

// |z| as a plain double, for tolerance comparisons.
template <class C>
double abs_d(const C& z) {
    using std::abs;
    return static_cast<double>(abs(z));
}

template <class C>
double re_d(const C& z) {
    return static_cast<double>(z.real());
}

template <class C>
double im_d(const C& z) {
    return static_cast<double>(z.imag());
}

template <class C>
C make_cx(double re, double im = 0.0) {
    return C(re, im);
}

template <class C>
cxd to_cxd(const C& z) {
    return cxd(re_d(z), im_d(z));
}

template <class CTo, class CFrom>
CTo cx_cast(const CFrom& z) {
    return CTo(typename scalar_traits<CTo>::real_type(z.real()),
               typename scalar_traits<CTo>::real_type(z.imag()));
}

template <>
inline cxd cx_cast<cxd, cx50>(const cx50& z) {
    return to_cxd(z);
}

// n-th derivative of sh: sh for even n, ch for odd n.
template <class C>
C sh_deriv(const C& z, int n) {
    return (n % 2 == 0) ? sh(z) : ch(z);
}

}  // namespace dwbc

#endif
