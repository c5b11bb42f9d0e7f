#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace qfock {

// Exact rational scalar. mpq_class already maintains the canonical form we
// need (gcd-reduced, positive denominator), so this is a thin alias plus a
// couple of helpers used by the printing layer.
using BigRat = mpq_class;

inline BigRat rat(long n) { return BigRat(n); }
inline BigRat rat(long n, long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    BigRat r(n, d);
    r.canonicalize();
    return r;
}

inline bool is_zero(const BigRat& r) { return sgn(r) == 0; }

inline std::string to_string(const BigRat& r) {
    return r.get_str();  // "p/q" or "p"
}

}  // namespace qfock
