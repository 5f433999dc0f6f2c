#include "brieskorn/matrix.hpp"

#include "brieskorn/errors.hpp"

namespace brieskorn {
namespace {

void require_square(const IntegerMatrix& a) {
    if (a.rows() != a.cols()) throw DomainError("matrix must be square");
}

// Division that must be exact in Bareiss updates.
Integer exact_div(const Integer& num, const Integer& den) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

} // namespace

Integer bareiss_determinant(const IntegerMatrix& input) {
    require_square(input);
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntegerMatrix m = input;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::vector<Integer> leading_principal_minors(const IntegerMatrix& input) {
    require_square(input);
    const std::size_t n = input.rows();
    IntegerMatrix m = input;
    std::vector<Integer> minors;
    minors.reserve(n);
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        // Without pivoting, the k-th Bareiss pivot is the k-th leading minor.
        minors.push_back(m(k, k));
        if (m(k, k) == 0) break;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return minors;
}

ScaledInverse bareiss_inverse(const IntegerMatrix& input) {
    require_square(input);
    const std::size_t n = input.rows();
    if (n == 0) throw DomainError("cannot invert an empty matrix");
    IntegerMatrix m(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = input(i, j);
        m(i, n + i) = 1;
    }
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) throw DomainError("singular matrix has no inverse");
            m.swap_rows(k, p);
            sign = -sign;
        }
        const Integer pivot = m(k, k);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const Integer factor = m(i, k);
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                m(i, j) = exact_div(pivot * m(i, j) - factor * m(k, j), prev);
            }
            m(i, k) = 0;
        }
        prev = pivot;
    }
    // Left block is now prev * I, so the right block is prev * A^{-1}.
    ScaledInverse out;
    out.scale = prev;
    out.determinant = sign * prev;
    out.scaled_inverse = IntegerMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (m(i, i) != prev) throw InternalError("fraction-free Gauss-Jordan left a non-scalar diagonal");
        for (std::size_t j = 0; j < n; ++j) out.scaled_inverse(i, j) = m(i, n + j);
    }
    return out;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw DomainError("matrix shape mismatch");
    IntegerMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

RationalMatrix multiply(const IntegerMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw DomainError("matrix shape mismatch");
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            const Rational aik(a(i, k));
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

} // namespace brieskorn
