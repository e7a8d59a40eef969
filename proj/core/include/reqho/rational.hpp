#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace reqho::exact {

// Arbitrary-precision integers and rationals. mpq_class keeps values
// reduced with a positive denominator, which is exactly the canonical
// form every structure above this layer relies on for equality checks.
using BigInt = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rat& q) { return sgn(q); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline long to_long(const Rat& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw std::domain_error("to_long: not a machine integer");
    return q.get_num().get_si();
}

inline double to_double(const Rat& q) { return q.get_d(); }

// Serialized as "n" or "n/d"; the inverse of rat_parse.
inline std::string rat_str(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_parse: bad rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace reqho::exact
