#include "seidel/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace seidel {

IntMatrix::IntMatrix(std::size_t order) : n_(order), a_(order * order) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) throw std::invalid_argument("IntMatrix: rows must form a square matrix");
        std::size_t j = 0;
        for (long v : row) (*this)(i, j++) = v;
        ++i;
    }
}

IntMatrix IntMatrix::identity(std::size_t order) {
    IntMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::shifted_negation(long bound) const {
    IntMatrix out(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = -a_[k];
    for (std::size_t i = 0; i < n_; ++i) out(i, i) += bound;
    return out;
}

IntMatrix IntMatrix::plus_identity(long c) const {
    IntMatrix out = *this;
    for (std::size_t i = 0; i < n_; ++i) out(i, i) += c;
    return out;
}

IntMatrix IntMatrix::operator-() const { return shifted_negation(0); }

bool operator==(const IntMatrix& lhs, const IntMatrix& rhs) {
    return lhs.n_ == rhs.n_ && lhs.a_ == rhs.a_;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) os << (j ? " " : "") << (*this)(i, j);
        os << '\n';
    }
    return os.str();
}

std::size_t IntPolynomial::zero_root_multiplicity() const {
    std::size_t k = 0;
    while (k < coeffs.size() && coeffs[k] == 0) ++k;
    return k;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

// Fraction-free elimination to row echelon form. Returns the rank and
// writes the sign of the row permutation and the last pivot.
std::size_t bareiss(std::vector<std::vector<BigInt>>& a, std::size_t cols, int& sign) {
    const std::size_t rows = a.size();
    sign = 1;
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                BigInt t = a[r][col] * a[i][j] - a[i][col] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        ++r;
    }
    return r;
}

std::vector<std::vector<BigInt>> to_rows(const IntMatrix& m) {
    const std::size_t n = m.order();
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    return a;
}

} // namespace

std::size_t rank(const IntMatrix& m) {
    auto a = to_rows(m);
    int sign = 1;
    return bareiss(a, m.order(), sign);
}

BigInt determinant(const IntMatrix& m) {
    const std::size_t n = m.order();
    if (n == 0) return 1;
    auto a = to_rows(m);
    int sign = 1;
    if (bareiss(a, n, sign) < n) return 0;
    return sign * a[n - 1][n - 1];
}

IntPolynomial char_poly(const IntMatrix& a) {
    const std::size_t n = a.order();
    IntPolynomial p;
    p.coeffs.assign(n + 1, 0);
    p.coeffs[n] = 1;
    // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
    IntMatrix mk(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix next(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                BigInt s = 0;
                for (std::size_t l = 0; l < n; ++l) s += a(i, l) * mk(l, j);
                next(i, j) = s;
            }
        for (std::size_t i = 0; i < n; ++i) next(i, i) += p.coeffs[n - k + 1];
        BigInt trace = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) trace += a(i, l) * next(l, i);
        BigInt c = -trace;
        if (mpz_divisible_ui_p(c.get_mpz_t(), k) == 0)
            throw std::logic_error("char_poly: inexact Faddeev-LeVerrier division");
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
        p.coeffs[n - k] = c;
        mk = std::move(next);
    }
    return p;
}

bool is_psd(const IntMatrix& m) {
    const std::size_t n = m.order();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);

    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;

    while (!active.empty()) {
        std::size_t best = active.size();
        for (std::size_t k = 0; k < active.size(); ++k) {
            const mpq_class& d = a[active[k]][active[k]];
            if (sgn(d) < 0) return false;
            if (sgn(d) > 0 && (best == active.size() || d > a[active[best]][active[best]])) best = k;
        }
        if (best == active.size()) {
            // Zero diagonal: a PSD matrix must vanish on the remaining block.
            for (std::size_t i : active)
                for (std::size_t j : active)
                    if (sgn(a[i][j]) != 0) return false;
            return true;
        }
        const std::size_t p = active[best];
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
        const mpq_class pivot = a[p][p];
        for (std::size_t i : active) {
            if (sgn(a[i][p]) == 0) continue;
            const mpq_class f = a[i][p] / pivot;
            for (std::size_t j : active) a[i][j] -= f * a[p][j];
        }
    }
    return true;
}

bool max_eig_le(const IntMatrix& m, long bound) { return is_psd(m.shifted_negation(bound)); }

namespace {

// Unimodular row reduction of columns [0, reduce_cols): after the call,
// rows [0, r) are in echelon form with positive pivots and rows [r, end)
// vanish on the reduced columns. Returns r.
std::size_t integer_echelon(IntRows& a, std::size_t reduce_cols, bool reduce_above) {
    const std::size_t rows = a.size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < reduce_cols && r < rows; ++col) {
        bool have_pivot = false;
        for (;;) {
            std::size_t p = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (a[i][col] == 0) continue;
                if (p == rows || abs(a[i][col]) < abs(a[p][col])) p = i;
            }
            if (p == rows) break;
            have_pivot = true;
            std::swap(a[p], a[r]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a[i][col] == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[r][col].get_mpz_t());
                for (std::size_t j = col; j < a[i].size(); ++j) a[i][j] -= q * a[r][j];
                if (a[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (!have_pivot) continue;
        if (a[r][col] < 0)
            for (auto& x : a[r]) x = -x;
        if (reduce_above) {
            for (std::size_t i = 0; i < r; ++i) {
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[r][col].get_mpz_t());
                if (q == 0) continue;
                for (std::size_t j = col; j < a[i].size(); ++j) a[i][j] -= q * a[r][j];
            }
        }
        ++r;
    }
    return r;
}

} // namespace

IntRows hermite_normal_form(IntRows rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows.front().size();
    for (const auto& row : rows)
        if (row.size() != cols) throw std::invalid_argument("hermite_normal_form: ragged rows");
    const std::size_t r = integer_echelon(rows, cols, true);
    rows.resize(r);
    return rows;
}

IntRows integer_kernel(const IntRows& a, std::size_t cols) {
    const std::size_t k = a.size();
    // Row i of the work matrix is [column i of A | e_i].
    IntRows work(cols, std::vector<BigInt>(k + cols));
    for (std::size_t i = 0; i < cols; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (a[j].size() != cols) throw std::invalid_argument("integer_kernel: ragged rows");
            work[i][j] = a[j][i];
        }
        work[i][k + i] = 1;
    }
    const std::size_t r = integer_echelon(work, k, false);
    IntRows kernel;
    for (std::size_t i = r; i < cols; ++i)
        kernel.emplace_back(work[i].begin() + static_cast<std::ptrdiff_t>(k), work[i].end());
    return hermite_normal_form(std::move(kernel));
}

} // namespace seidel
