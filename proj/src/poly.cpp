#include "poly.hpp"
#include <sstream>
#include <stdexcept>

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<BigRational> c(std::max(a.coeffs.size(), b.coeffs.size()), BigRational(0));
    for (size_t i = 0; i < a.coeffs.size(); i++) c[i] += a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); i++) c[i] += b.coeffs[i];
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<BigRational> c(std::max(a.coeffs.size(), b.coeffs.size()), BigRational(0));
    for (size_t i = 0; i < a.coeffs.size(); i++) c[i] += a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); i++) c[i] -= b.coeffs[i];
    return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<BigRational> c(a.coeffs.size() + b.coeffs.size() - 1, BigRational(0));
    for (size_t i = 0; i < a.coeffs.size(); i++)
        for (size_t j = 0; j < b.coeffs.size(); j++) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return RatPoly(std::move(c));
}

RatPoly operator*(const BigRational& c, const RatPoly& a) {
    std::vector<BigRational> v = a.coeffs;
    for (auto& x : v) x *= c;
    return RatPoly(std::move(v));
}

bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs == b.coeffs; }

std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    RatPoly r = a;
    if (a.degree() < b.degree()) return {RatPoly(), r};
    std::vector<BigRational> q(a.degree() - b.degree() + 1, BigRational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int d = r.degree() - b.degree();
        BigRational f = r.leading() / b.leading();
        q[d] = f;
        for (int i = 0; i <= b.degree(); i++) r.coeffs[i + d] -= f * b.coeffs[i];
        r.normalize();
    }
    return {RatPoly(std::move(q)), r};
}

RatPoly poly_derivative(const RatPoly& p) {
    if (p.degree() < 1) return RatPoly();
    std::vector<BigRational> c(p.degree());
    for (int i = 1; i <= p.degree(); i++) c[i - 1] = BigRational(i) * p.coeffs[i];
    return RatPoly(std::move(c));
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        BigRational inv = 1 / a.leading();
        a = inv * a;
    }
    return a;
}

RatPoly squarefree_part(const RatPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
    if (p.degree() == 0) return RatPoly::constant(1);
    RatPoly g = poly_gcd(p, poly_derivative(p));
    RatPoly q = poly_divmod(p, g).first;
    BigRational inv = 1 / q.leading();
    return inv * q;
}

SturmChain sturm_chain(const RatPoly& p) {
    if (p.degree() < 1) throw std::domain_error("Sturm chain needs degree >= 1");
    SturmChain c;
    c.polys.push_back(p);
    c.polys.push_back(poly_derivative(p));
    while (!c.polys.back().is_zero()) {
        const RatPoly& prev = c.polys[c.polys.size() - 2];
        const RatPoly& cur = c.polys.back();
        RatPoly r = poly_divmod(prev, cur).second;
        if (r.is_zero()) break;
        c.polys.push_back(BigRational(-1) * r);
    }
    return c;
}

int sign_variations(const SturmChain& c, const BigRational& a) {
    int count = 0, last = 0;
    for (const RatPoly& p : c.polys) {
        int s = rat_sign(p.eval(a));
        if (s == 0) continue;
        if (last != 0 && s != last) count++;
        last = s;
    }
    return count;
}

int count_roots(const RatPoly& p, const BigRational& a, const BigRational& b) {
    if (!(a < b)) throw std::domain_error("count_roots needs a < b");
    if (p.degree() < 1) throw std::domain_error("count_roots needs degree >= 1");
    RatPoly g = poly_gcd(p, poly_derivative(p));
    if (g.degree() > 0)
        throw std::domain_error("count_roots: polynomial not squarefree, square factor " +
                                g.str());
    SturmChain c = sturm_chain(p);
    return sign_variations(c, a) - sign_variations(c, b);
}

std::pair<BigRational, BigRational> isolate_root(const RatPoly& p, BigRational lo,
                                                 BigRational hi,
                                                 const BigRational& width) {
    SturmChain c = sturm_chain(p);
    auto roots_in = [&](const BigRational& a, const BigRational& b) {
        return sign_variations(c, a) - sign_variations(c, b);
    };
    if (roots_in(lo, hi) != 1)
        throw std::domain_error("isolate_root: interval does not contain exactly one root");
    while (hi - lo > width) {
        BigRational mid = (lo + hi) / 2;
        if (roots_in(lo, mid) == 1)
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi};
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        if (!first) out << (sgn(coeffs[i]) > 0 ? " + " : " - ");
        BigRational c = first ? coeffs[i] : abs(coeffs[i]);
        first = false;
        if (i == 0 || abs(c) != 1) out << rational_str(c);
        if (i >= 1) {
            if (abs(c) != 1) out << "*";
            else if (c == -1) out << "-";
            out << var;
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

RatPoly parse_poly(const std::string& s) {
    std::vector<BigRational> c;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        // trim whitespace
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("empty coefficient");
        c.push_back(parse_rational(tok.substr(a, b - a + 1)));
    }
    return RatPoly(std::move(c));
}
