#pragma once

#include <cmath>

namespace nrc {

// Double-double arithmetic (~31 significant digits).  Only the handful of
// operations needed by the near-unit-disk branches of the order-3 geometry
// are provided.  Representation: value = hi + lo with |lo| <= ulp(hi)/2.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    DD() = default;
    DD(double h) : hi(h), lo(0.0) {}
    DD(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

namespace dd_detail {

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DD quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

}  // namespace dd_detail

inline DD operator+(DD a, DD b) {
    using namespace dd_detail;
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD a, DD b) { return a + DD(-b.hi, -b.lo); }
inline DD operator-(DD a) { return {-a.hi, -a.lo}; }

inline DD operator*(DD a, DD b) {
    using namespace dd_detail;
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DD operator/(DD a, DD b) {
    using namespace dd_detail;
    double q1 = a.hi / b.hi;
    DD r = a - b * DD(q1);
    double q2 = r.hi / b.hi;
    r = r - b * DD(q2);
    double q3 = r.hi / b.hi;
    DD q = quick_two_sum(q1, q2);
    return q + DD(q3);
}

inline DD dd_sqrt(DD a) {
    if (a.hi <= 0.0) return {0.0, 0.0};
    double y = std::sqrt(a.hi);
    DD yd(y);
    // One Newton step in double-double: y += (a - y^2) / (2y).
    DD r = (a - yd * yd) / DD(2.0 * y);
    return yd + r;
}

}  // namespace nrc
