#include "matrix.hpp"
#include <cstdint>
#include <stdexcept>

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n);
    for (int i = 0; i < n; i++) m[i][i] = 1;
    return m;
}

bool operator==(const RatMatrix& x, const RatMatrix& y) { return x.n == y.n && x.a == y.a; }

RatMatrix mat_mul(const RatMatrix& x, const RatMatrix& y) {
    RatMatrix r(x.n);
    for (int i = 0; i < x.n; i++)
        for (int k = 0; k < x.n; k++) {
            if (x[i][k] == 0) continue;
            for (int j = 0; j < x.n; j++) r[i][j] += x[i][k] * y[k][j];
        }
    return r;
}

std::vector<BigRational> vec_mat(const std::vector<BigRational>& v, const RatMatrix& m) {
    std::vector<BigRational> r(m.n, BigRational(0));
    for (int i = 0; i < m.n; i++) {
        if (v[i] == 0) continue;
        for (int j = 0; j < m.n; j++) r[j] += v[i] * m[i][j];
    }
    return r;
}

// ---- dense rational Gaussian elimination on the column system A z = b ----

static std::vector<BigRational> gauss_solve(RatMatrix a, std::vector<BigRational> b) {
    int n = a.n;
    std::vector<int> perm(n);
    for (int i = 0; i < n; i++) perm[i] = i;
    for (int col = 0; col < n; col++) {
        int piv = -1;
        for (int r = col; r < n; r++)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw std::domain_error("solve_linear: singular matrix");
        std::swap(a.a[col], a.a[piv]);
        std::swap(b[col], b[piv]);
        for (int r = col + 1; r < n; r++) {
            if (a[r][col] == 0) continue;
            BigRational f = a[r][col] / a[col][col];
            for (int c = col; c < n; c++) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<BigRational> z(n);
    for (int i = n - 1; i >= 0; i--) {
        BigRational s = b[i];
        for (int j = i + 1; j < n; j++) s -= a[i][j] * z[j];
        z[i] = s / a[i][i];
    }
    return z;
}

// ---- Dixon p-adic lifting for larger exact systems (A z = b) ----

namespace {

const uint64_t DIXON_P = 9223372036854775783ULL; // largest prime below 2^63

uint64_t mulmod(uint64_t x, uint64_t y) {
    return (uint64_t)((__uint128_t)x * y % DIXON_P);
}
uint64_t addmod(uint64_t x, uint64_t y) {
    uint64_t s = x + y;
    if (s >= DIXON_P || s < x) s -= DIXON_P;
    return s;
}
uint64_t submod(uint64_t x, uint64_t y) { return x >= y ? x - y : x + DIXON_P - y; }
uint64_t powmod(uint64_t x, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, x);
        x = mulmod(x, x);
        e >>= 1;
    }
    return r;
}
uint64_t invmod(uint64_t x) { return powmod(x, DIXON_P - 2); }

uint64_t mpz_mod_p(const mpz_class& z) {
    mpz_class m = z % mpz_class(DIXON_P);
    if (m < 0) m += mpz_class(DIXON_P);
    return m.get_ui();
}

// Rational reconstruction of x mod m: u/v with |u|, v <= sqrt(m/2), gcd(v,m)=1.
bool rat_reconstruct(const mpz_class& x, const mpz_class& m, mpz_class& num,
                     mpz_class& den) {
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), mpz_class(m / 2).get_mpz_t());
    mpz_class r0 = m, r1 = x % m, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += m;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1; r1 = r2; t0 = t1; t1 = t2;
    }
    if (t1 == 0) return false;
    if (t1 < 0) { t1 = -t1; r1 = -r1; }
    if (t1 > bound) return false;
    num = r1;
    den = t1;
    return gcd(den, mpz_class(DIXON_P)) == 1;
}

std::vector<BigRational> dixon_solve(const RatMatrix& a, const std::vector<BigRational>& b) {
    int n = a.n;
    // scale each equation to integers
    std::vector<std::vector<mpz_class>> ai(n, std::vector<mpz_class>(n));
    std::vector<mpz_class> bi(n);
    for (int i = 0; i < n; i++) {
        mpz_class l = b[i].get_den();
        for (int j = 0; j < n; j++) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a[i][j].get_den().get_mpz_t());
        for (int j = 0; j < n; j++) {
            mpq_class s = a[i][j] * BigRational(l);
            ai[i][j] = s.get_num();
        }
        mpq_class s = b[i] * BigRational(l);
        bi[i] = s.get_num();
    }
    // inverse of A mod p by Gauss-Jordan
    std::vector<std::vector<uint64_t>> m(n, std::vector<uint64_t>(n)),
        inv(n, std::vector<uint64_t>(n, 0));
    for (int i = 0; i < n; i++) {
        inv[i][i] = 1;
        for (int j = 0; j < n; j++) m[i][j] = mpz_mod_p(ai[i][j]);
    }
    for (int col = 0; col < n; col++) {
        int piv = -1;
        for (int r = col; r < n; r++)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw std::domain_error("dixon: matrix singular mod p");
        std::swap(m[col], m[piv]);
        std::swap(inv[col], inv[piv]);
        uint64_t f = invmod(m[col][col]);
        for (int j = 0; j < n; j++) {
            m[col][j] = mulmod(m[col][j], f);
            inv[col][j] = mulmod(inv[col][j], f);
        }
        for (int r = 0; r < n; r++) {
            if (r == col || m[r][col] == 0) continue;
            uint64_t g = m[r][col];
            for (int j = 0; j < n; j++) {
                m[r][j] = submod(m[r][j], mulmod(g, m[col][j]));
                inv[r][j] = submod(inv[r][j], mulmod(g, inv[col][j]));
            }
        }
    }
    // p-adic lifting: x = sum_k d_k p^k with d_k = A^{-1} r_k mod p
    std::vector<mpz_class> r = bi, x(n, 0);
    mpz_class pk = 1, p = DIXON_P;
    const int max_iter = 4096;
    for (int iter = 0; iter < max_iter; iter++) {
        std::vector<uint64_t> rm(n), d(n, 0);
        for (int i = 0; i < n; i++) rm[i] = mpz_mod_p(r[i]);
        for (int i = 0; i < n; i++) {
            uint64_t s = 0;
            for (int j = 0; j < n; j++) s = addmod(s, mulmod(inv[i][j], rm[j]));
            d[i] = s;
        }
        for (int i = 0; i < n; i++) x[i] += pk * mpz_class(d[i]);
        // r = (r - A d) / p
        for (int i = 0; i < n; i++) {
            mpz_class s = r[i];
            for (int j = 0; j < n; j++)
                if (d[j]) s -= ai[i][j] * mpz_class(d[j]);
            mpz_divexact(r[i].get_mpz_t(), s.get_mpz_t(), p.get_mpz_t());
        }
        pk *= p;
        bool converged = true;
        for (int i = 0; i < n && converged; i++) converged = (r[i] == 0);
        bool attempt = converged || (iter >= 16 && (iter & (iter - 1)) == 0);
        if (!attempt) continue;
        std::vector<BigRational> z(n);
        bool ok = true;
        for (int i = 0; i < n && ok; i++) {
            mpz_class num, den;
            if (converged) {
                z[i] = BigRational(x[i]);
            } else if (rat_reconstruct(x[i], pk, num, den)) {
                z[i] = BigRational(num) / BigRational(den);
            } else {
                ok = false;
            }
        }
        if (!ok) continue;
        // exact verification
        for (int i = 0; i < n && ok; i++) {
            BigRational s = 0;
            for (int j = 0; j < n; j++)
                if (z[j] != 0) s += BigRational(ai[i][j]) * z[j];
            ok = (s == BigRational(bi[i]));
        }
        if (ok) return z;
    }
    throw std::domain_error("dixon: lifting failed to converge");
}

} // namespace

std::vector<BigRational> solve_linear(const RatMatrix& m, const std::vector<BigRational>& v) {
    if ((int)v.size() != m.n) throw std::invalid_argument("solve_linear: size mismatch");
    // x M = v  <=>  M^T x^T = v^T
    RatMatrix t(m.n);
    for (int i = 0; i < m.n; i++)
        for (int j = 0; j < m.n; j++) t[i][j] = m[j][i];
    if (m.n <= 48) return gauss_solve(std::move(t), v);
    try {
        return dixon_solve(t, v);
    } catch (const std::domain_error&) {
        return gauss_solve(std::move(t), v); // singular mod p, or genuine singularity
    }
}

BigRational determinant(RatMatrix m) {
    int n = m.n;
    BigRational det = 1;
    for (int col = 0; col < n; col++) {
        int piv = -1;
        for (int r = col; r < n; r++)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(m.a[col], m.a[piv]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < n; r++) {
            if (m[r][col] == 0) continue;
            BigRational f = m[r][col] / m[col][col];
            for (int c = col; c < n; c++) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

RatPoly char_poly(const RatMatrix& a) {
    int n = a.n;
    std::vector<BigRational> c(n + 1, BigRational(0));
    c[n] = 1;
    RatMatrix m = a;
    for (int k = 1; k <= n; k++) {
        if (k > 1) {
            // m = a * (m + c[n-k+1] I)
            RatMatrix t = m;
            for (int i = 0; i < n; i++) t[i][i] += c[n - k + 1];
            m = mat_mul(a, t);
        }
        BigRational tr = 0;
        for (int i = 0; i < n; i++) tr += m[i][i];
        c[n - k] = -tr / k;
    }
    return RatPoly(std::move(c));
}

AdjugateRowSums adjugate_row_sums(const RatMatrix& b) {
    int n = b.n;
    // Entries of 1 * adj(I - aB) have degree <= n-1; det(I - aB) degree <= n.
    // Interpolate through n+1 sample points where I - aB is nonsingular.
    std::vector<BigRational> xs;
    std::vector<std::vector<BigRational>> rows; // per point: n adj entries
    std::vector<BigRational> dets;
    int denom = 1009;
    for (int t = 1; (int)xs.size() < n + 1; t++) {
        BigRational alpha(t, denom);
        RatMatrix m(n);
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) m[i][j] = (i == j ? 1 : 0) - alpha * b[i][j];
        BigRational det = determinant(m);
        if (det == 0) continue;
        std::vector<BigRational> ones(n, BigRational(1));
        std::vector<BigRational> sol = solve_linear(m, ones); // 1 (I-aB)^{-1}
        for (auto& s : sol) s *= det;
        xs.push_back(alpha);
        rows.push_back(std::move(sol));
        dets.push_back(det);
    }
    // Lagrange interpolation
    auto interpolate = [&](auto value_at) {
        RatPoly acc;
        for (int i = 0; i < (int)xs.size(); i++) {
            RatPoly li = RatPoly::constant(1);
            BigRational scale = 1;
            for (int j = 0; j < (int)xs.size(); j++) {
                if (j == i) continue;
                li = li * RatPoly(std::vector<BigRational>{-xs[j], 1});
                scale *= xs[i] - xs[j];
            }
            acc = acc + (value_at(i) / scale) * li;
        }
        return acc;
    };
    AdjugateRowSums out;
    out.det = interpolate([&](int i) { return dets[i]; });
    for (int col = 0; col < n; col++)
        out.entries.push_back(interpolate([&](int i) { return rows[i][col]; }));
    // verify the adjugate identity (1 adj(I-aB)) (I-aB) = det(I-aB) * 1
    for (int j = 0; j < n; j++) {
        RatPoly s = out.entries[j]; // identity diagonal contribution
        for (int i = 0; i < n; i++) {
            if (b[i][j] == 0) continue;
            // subtract alpha * entry_i * B[i][j]
            RatPoly term = b[i][j] * out.entries[i];
            s = s - RatPoly(std::vector<BigRational>{0, 1}) * term;
        }
        if (!(s == out.det))
            throw std::logic_error("adjugate_row_sums: identity check failed");
    }
    return out;
}
