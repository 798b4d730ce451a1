#ifndef RATIONAL_HPP
#define RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

// Arbitrary-precision rational scalar. GMP keeps values canonical
// (reduced, positive denominator), which is exactly the invariant we need.
using BigRational = mpq_class;

// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on junk.
inline BigRational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (size_t i = 0; i < s.size(); i++) {
        char c = s[i];
        if (!(isdigit((unsigned char)c) || c == '/' || c == '-' || c == '+'))
            throw std::invalid_argument("bad rational literal: " + s);
    }
    BigRational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

// Formats as "p" or "p/q".
inline std::string rational_str(const BigRational& r) {
    return r.get_str();
}

inline int rat_sign(const BigRational& r) { return sgn(r); }

#endif
