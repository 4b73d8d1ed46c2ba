#ifndef PROBEMR_RATIONAL_HPP
#define PROBEMR_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace probemr {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator), which is what every rank claim in this library leans on.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Formats as "p/q", the token format used by the matrix text serialization.
inline std::string to_token(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p/q" or a bare integer "p".
Rational parse_token(const std::string& tok);

} // namespace probemr

#endif
