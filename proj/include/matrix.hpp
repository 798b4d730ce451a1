#ifndef MATRIX_HPP
#define MATRIX_HPP

#include "poly.hpp"
#include "rational.hpp"
#include <vector>

// Square matrix of rationals, row-major.
struct RatMatrix {
    int n = 0;
    std::vector<std::vector<BigRational>> a;

    RatMatrix() = default;
    explicit RatMatrix(int n_)
        : n(n_), a(n_, std::vector<BigRational>(n_, BigRational(0))) {}

    static RatMatrix identity(int n);

    std::vector<BigRational>& operator[](int i) { return a[i]; }
    const std::vector<BigRational>& operator[](int i) const { return a[i]; }
};

bool operator==(const RatMatrix& x, const RatMatrix& y);

RatMatrix mat_mul(const RatMatrix& x, const RatMatrix& y);

// Row vector times matrix.
std::vector<BigRational> vec_mat(const std::vector<BigRational>& v, const RatMatrix& m);

// Exact solution x of x M = v. Throws std::domain_error on singular M.
// Gaussian elimination for small systems; Dixon p-adic lifting with rational
// reconstruction for larger ones (both exact).
std::vector<BigRational> solve_linear(const RatMatrix& m, const std::vector<BigRational>& v);

BigRational determinant(RatMatrix m);

// det(lambda I - M) via the Faddeev-LeVerrier recurrence, exact.
RatPoly char_poly(const RatMatrix& m);

// The row vector 1 * adj(I - alpha B), entries as polynomials in alpha.
// Computed by exact Lagrange interpolation of det(I - aB) * 1 * (I - aB)^{-1}
// at rational sample points, then verified against the adjugate identity
// (1 * adj(I - alpha B)) (I - alpha B) = det(I - alpha B) * 1.
struct AdjugateRowSums {
    std::vector<RatPoly> entries; // one polynomial per column
    RatPoly det;                  // det(I - alpha B)
};
AdjugateRowSums adjugate_row_sums(const RatMatrix& b);

#endif
