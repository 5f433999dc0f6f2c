#include "brieskorn/continued_fraction.hpp"

#include "brieskorn/errors.hpp"

#include <algorithm>

namespace brieskorn {

FramingChain::FramingChain(std::vector<std::int64_t> framings) : framings_(std::move(framings)) {
    if (framings_.empty()) {
        throw DomainError("framing chain must be nonempty");
    }
    if (std::any_of(framings_.begin(), framings_.end(), [](std::int64_t m) { return m > -2; })) {
        throw DomainError("leg framings must all be <= -2");
    }
}

FramingChain FramingChain::twos(std::size_t k) {
    return FramingChain(std::vector<std::int64_t>(k, -2));
}

FramingChain neg_continued_fraction(const Rational& r) {
    if (r <= Rational(0) || r >= Rational(1)) {
        throw DomainError("negative continued fraction needs 0 < r < 1, got " + r.to_string());
    }
    // -1/r = -q/p. Peel m = -ceil(q/p); the remainder -q/p - m = (c*p - q)/p
    // is -1/(next), so the next term expands -p/(c*p - q).
    Integer q = r.denominator();
    Integer p = r.numerator();
    std::vector<std::int64_t> out;
    while (true) {
        Integer c;
        mpz_cdiv_q(c.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
        out.push_back(-to_int64(c));
        Integer rem = c * p - q;
        if (rem == 0) break;
        q = p;
        p = rem;
    }
    return FramingChain(std::move(out));
}

Rational cf_evaluate(const FramingChain& chain) {
    // Fold from the tail: x_k = m_k, x_i = m_i - 1/x_{i+1}; result is -1/x_1.
    const auto m = chain.framings();
    Rational x(static_cast<long>(m.back()));
    for (std::size_t i = m.size() - 1; i-- > 0;) {
        x = Rational(static_cast<long>(m[i])) - Rational(1) / x;
    }
    return Rational(-1) / x;
}

} // namespace brieskorn
