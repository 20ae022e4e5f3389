#pragma once

// Exact integer linear algebra on small dense matrices (order <= 64).
// Everything here works over Z or Q with GMP integers; nothing touches
// floating point.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace seidel {

using BigInt = mpz_class;

/// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t order);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t order);

    std::size_t order() const { return n_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool is_symmetric() const;

    /// bound * I - M
    IntMatrix shifted_negation(long bound) const;
    /// M + c * I
    IntMatrix plus_identity(long c) const;

    IntMatrix operator-() const;
    friend bool operator==(const IntMatrix& lhs, const IntMatrix& rhs);

    std::string to_string() const;

private:
    std::size_t n_ = 0;
    std::vector<BigInt> a_;
};

/// Dense polynomial, coeffs[k] is the coefficient of x^k.
struct IntPolynomial {
    std::vector<BigInt> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
    /// Multiplicity of 0 as a root (number of trailing zero coefficients).
    std::size_t zero_root_multiplicity() const;
    BigInt evaluate(const BigInt& x) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

/// Rank over Q, by fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& m);

BigInt determinant(const IntMatrix& m);

/// det(xI - M) via Faddeev-LeVerrier; every division is exact.
IntPolynomial char_poly(const IntMatrix& m);

/// Exact positive-semidefiniteness via rational LDL^T with diagonal pivoting.
bool is_psd(const IntMatrix& m);

/// True iff every eigenvalue of the symmetric matrix M is <= bound,
/// i.e. bound*I - M is positive semidefinite.
bool max_eig_le(const IntMatrix& m, long bound);

// Rectangular integer matrices used by the lattice code.
using IntRows = std::vector<std::vector<BigInt>>;

/// Row-style Hermite normal form of the row span: the nonzero rows of
/// the result form a Z-basis of the lattice spanned by the input rows.
/// Pivots are positive and entries above each pivot are reduced into
/// [0, pivot).
IntRows hermite_normal_form(IntRows rows);

/// Z-basis of {x in Z^cols : A x = 0} for A with `cols` columns.
IntRows integer_kernel(const IntRows& a, std::size_t cols);

} // namespace seidel
