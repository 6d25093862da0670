#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace chern4 {

// All arithmetic in this library is exact. Pairings, pivots and bounds are
// arbitrary-precision integers or rationals; floating point never enters.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// cpp_int division truncates toward zero; these round toward -/+ infinity.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) == (b < 0))) ++q;
    return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(rat_num(r), rat_den(r)); }
inline Int rat_ceil(const Rat& r) { return ceil_div(rat_num(r), rat_den(r)); }

// Largest integer t with t^2 <= r; r must be >= 0.
// sqrt(p/q) = sqrt(p*q)/q, so isqrt(p*q) brackets the root to within 1/q.
inline Int rat_isqrt(const Rat& r) {
    const Int pq = rat_num(r) * rat_den(r);
    const Int s = boost::multiprecision::sqrt(pq);
    Int t = floor_div(s, rat_den(r));
    while (Rat((t + 1) * (t + 1)) <= r) ++t;
    while (t > 0 && Rat(t * t) > r) --t;
    return t;
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

} // namespace chern4
