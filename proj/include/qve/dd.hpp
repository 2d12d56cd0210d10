#ifndef QVE_DD_HPP
#define QVE_DD_HPP

#include <cmath>

namespace qve {

// Minimal double-double arithmetic (~32 significant digits).  Used only
// where a plain double series cancels catastrophically (mid-range Bessel J
// of imaginary order).  Algorithms are the classical error-free transforms
// of Dekker and Knuth with FMA-based products.

struct dd {
    double hi = 0.0, lo = 0.0;
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {
    // requires |a| >= |b|
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return quick_two_sum(s.hi, lo);
}

inline dd dd_sub(dd a, dd b) {
    return dd_add(a, {-b.hi, -b.lo});
}

inline dd dd_mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_mul(dd a, double b) {
    dd p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_div(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = dd_sub(a, dd_mul(b, q1));
    double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul(b, q2));
    double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return dd_add(q, {q3, 0.0});
}

// complex double-double, just the operations the J series needs
struct cdd {
    dd re, im;
};

inline cdd cdd_add(cdd a, cdd b) {
    return {dd_add(a.re, b.re), dd_add(a.im, b.im)};
}

inline cdd cdd_mul(cdd a, cdd b) {
    return {dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im)),
            dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

inline cdd cdd_mul(cdd a, dd b) {
    return {dd_mul(a.re, b), dd_mul(a.im, b)};
}

inline cdd cdd_div(cdd a, cdd b) {
    dd den = dd_add(dd_mul(b.re, b.re), dd_mul(b.im, b.im));
    cdd num = cdd_mul(a, cdd{b.re, {-b.im.hi, -b.im.lo}});
    return {dd_div(num.re, den), dd_div(num.im, den)};
}

} // namespace qve

#endif
