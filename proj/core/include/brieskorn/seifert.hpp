#pragma once

#include "brieskorn/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace brieskorn {

/// Exponents (a1, ..., an) of a Brieskorn sphere: n >= 3, each >= 2,
/// pairwise coprime, stored ascending.
class BrieskornIndex {
public:
    /// Sorts the input; throws DomainError on any violated invariant.
    explicit BrieskornIndex(std::vector<std::int64_t> exponents);

    std::span<const std::int64_t> exponents() const { return exponents_; }
    std::size_t size() const { return exponents_.size(); }
    Integer product() const;

    /// "Sigma(2,3,5)"
    std::string to_string() const;
    /// "2,3,5"; the cache and fixture key.
    std::string key() const;

    friend bool operator==(const BrieskornIndex&, const BrieskornIndex&) = default;
    friend auto operator<=>(const BrieskornIndex&, const BrieskornIndex&) = default;

private:
    std::vector<std::int64_t> exponents_;
};

/// Normalized Seifert invariants M(e0; r1, ..., rn) with every ri in (0,1).
class SeifertData {
public:
    /// Throws DomainError if some multiplier lies outside (0,1).
    SeifertData(std::int64_t e0, std::vector<Rational> multipliers);

    std::int64_t e0() const { return e0_; }
    std::span<const Rational> multipliers() const { return multipliers_; }

    /// "M(-2; 1/2, 2/3, 4/5)"
    std::string to_string() const;
    /// Accepts the to_string() grammar; whitespace is free. Throws DomainError.
    static SeifertData parse(std::string_view text);

    friend bool operator==(const SeifertData&, const SeifertData&) = default;

private:
    std::int64_t e0_;
    std::vector<Rational> multipliers_;
};

/// Canonically oriented presentation, with euler_number = -1/(a1...an).
SeifertData from_brieskorn(const BrieskornIndex& index);

/// e0 + sum ri.
Rational euler_number(const SeifertData& m);

/// M(-n - e0; 1 - r1, ..., 1 - rn). Requires n >= 1.
SeifertData reverse_orientation(const SeifertData& m);

/// |H1| = |e * prod qi|, cross-checked against |det Q| of the standard graph.
/// Throws InternalError if the two disagree.
Integer h1_order(const SeifertData& m);

} // namespace brieskorn
