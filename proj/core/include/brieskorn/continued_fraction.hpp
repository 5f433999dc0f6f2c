#pragma once

#include "brieskorn/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace brieskorn {

/// Leg framings [m1, ..., mk] of a negative continued fraction, every entry <= -2.
class FramingChain {
public:
    /// Throws DomainError if empty or some entry exceeds -2.
    explicit FramingChain(std::vector<std::int64_t> framings);

    /// k copies of -2.
    static FramingChain twos(std::size_t k);

    std::span<const std::int64_t> framings() const { return framings_; }
    std::size_t size() const { return framings_.size(); }
    std::int64_t operator[](std::size_t i) const { return framings_[i]; }

    friend bool operator==(const FramingChain&, const FramingChain&) = default;

private:
    std::vector<std::int64_t> framings_;
};

/// Expands -1/r as m1 - 1/(m2 - 1/(... - 1/mk)) with every mi <= -2.
/// Requires 0 < r < 1; the expansion is unique.
FramingChain neg_continued_fraction(const Rational& r);

/// Inverse of neg_continued_fraction: returns r in (0,1).
Rational cf_evaluate(const FramingChain& chain);

} // namespace brieskorn
