#ifndef POLY_HPP
#define POLY_HPP

#include "rational.hpp"
#include <utility>
#include <vector>

// Dense univariate polynomial over BigRational, coefficients in ascending
// degree order with trailing zeros stripped. The zero polynomial has an
// empty coefficient vector and degree -1.
struct RatPoly {
    std::vector<BigRational> coeffs;

    RatPoly() = default;
    explicit RatPoly(std::vector<BigRational> c) : coeffs(std::move(c)) { normalize(); }

    void normalize() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    int degree() const { return (int)coeffs.size() - 1; }
    bool is_zero() const { return coeffs.empty(); }
    const BigRational& leading() const { return coeffs.back(); }

    BigRational eval(const BigRational& x) const {
        BigRational acc = 0;
        for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
        return acc;
    }

    static RatPoly constant(const BigRational& c) {
        return RatPoly(std::vector<BigRational>{c});
    }
    // x^d with coefficient c
    static RatPoly monomial(const BigRational& c, int d) {
        std::vector<BigRational> v(d + 1, BigRational(0));
        v[d] = c;
        return RatPoly(std::move(v));
    }

    std::string str(const std::string& var = "x") const;
};

RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const BigRational& c, const RatPoly& a);
bool operator==(const RatPoly& a, const RatPoly& b);

// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a, const RatPoly& b);

RatPoly poly_derivative(const RatPoly& p);

// Monic gcd (zero polynomial if both inputs are zero).
RatPoly poly_gcd(RatPoly a, RatPoly b);

// p / gcd(p, p'), monic. Throws on zero polynomial.
RatPoly squarefree_part(const RatPoly& p);

// Sturm chain: S0 = p, S1 = p', S_{i+1} = -(S_{i-1} mod S_i), stopping at a
// zero remainder. Throws on deg p < 1.
struct SturmChain {
    std::vector<RatPoly> polys;
};

SturmChain sturm_chain(const RatPoly& p);

// Number of sign changes in (S0(a), S1(a), ...), zeros skipped.
int sign_variations(const SturmChain& c, const BigRational& a);

// Distinct real roots of squarefree p in the half-open interval (a, b].
// Throws if a >= b or if p is not squarefree (the message names a square
// factor, namely gcd(p, p')).
int count_roots(const RatPoly& p, const BigRational& a, const BigRational& b);

// Root isolation helper: shrinks (lo, hi] around the unique root of p in the
// interval by Sturm bisection until hi - lo <= width. Requires exactly one
// root in (lo, hi].
std::pair<BigRational, BigRational> isolate_root(const RatPoly& p, BigRational lo,
                                                 BigRational hi,
                                                 const BigRational& width);

// Parses "c0,c1,...,cn" ascending-coefficient literals, each "p" or "p/q".
RatPoly parse_poly(const std::string& s);

#endif
