#pragma once

// Double-double arithmetic (unevaluated sum of two doubles, ~32 significant
// digits).  Used where an alternating series loses more digits to cancellation
// than a plain double carries; only the handful of operations the series
// kernels need are provided.

#include <cmath>
#include <complex>

namespace gft::detail {

struct DDouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DDouble() = default;
    constexpr DDouble(double h) : hi(h) {}
    constexpr DDouble(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

inline DDouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DDouble quick_two_sum(double a, double b) {
    // requires |a| >= |b|
    double s = a + b;
    return {s, b - (s - a)};
}

inline DDouble two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DDouble add(const DDouble& x, const DDouble& y) {
    DDouble s = two_sum(x.hi, y.hi);
    double e = s.lo + x.lo + y.lo;
    return quick_two_sum(s.hi, e);
}

inline DDouble sub(const DDouble& x, const DDouble& y) {
    return add(x, {-y.hi, -y.lo});
}

inline DDouble mul(const DDouble& x, const DDouble& y) {
    DDouble p = two_prod(x.hi, y.hi);
    double e = p.lo + x.hi * y.lo + x.lo * y.hi;
    return quick_two_sum(p.hi, e);
}

inline DDouble mul(const DDouble& x, double d) {
    DDouble p = two_prod(x.hi, d);
    double e = p.lo + x.lo * d;
    return quick_two_sum(p.hi, e);
}

inline DDouble div(const DDouble& x, double d) {
    double q1 = x.hi / d;
    DDouble p = two_prod(q1, d);
    double rh = (x.hi - p.hi) - p.lo + x.lo;  // exact-ish residual
    double q2 = rh / d;
    return quick_two_sum(q1, q2);
}

// x / y for full double-double divisor.
inline DDouble div(const DDouble& x, const DDouble& y) {
    double q1 = x.hi / y.hi;
    DDouble r = sub(x, mul(y, q1));
    double q2 = r.hi / y.hi;
    r = sub(r, mul(y, q2));
    double q3 = r.hi / y.hi;
    DDouble q = quick_two_sum(q1, q2);
    return add(q, {q3, 0.0});
}

// Complex value with double-double real and imaginary parts.
struct DDComplex {
    DDouble re, im;

    DDComplex() = default;
    DDComplex(DDouble r, DDouble i) : re(r), im(i) {}
    explicit DDComplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> to_complex() const {
        return {double(re), double(im)};
    }
};

inline DDComplex add(const DDComplex& x, const DDComplex& y) {
    return {add(x.re, y.re), add(x.im, y.im)};
}

inline DDComplex mul(const DDComplex& x, const DDComplex& y) {
    return {sub(mul(x.re, y.re), mul(x.im, y.im)),
            add(mul(x.re, y.im), mul(x.im, y.re))};
}

inline DDComplex mul(const DDComplex& x, const DDouble& d) {
    return {mul(x.re, d), mul(x.im, d)};
}

inline DDComplex div(const DDComplex& x, const DDouble& d) {
    return {div(x.re, d), div(x.im, d)};
}

} // namespace gft::detail
