#pragma once

#include "brieskorn/contact.hpp"
#include "brieskorn/rational.hpp"
#include "brieskorn/seifert.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace brieskorn {

// A published lower-bound witness for d, given in its own coordinate order.
// Coordinates are the center, then the legs in `leg_order`, each center-outward.
struct PublishedWitness {
    std::string name;
    std::vector<std::int64_t> coordinates;
    std::vector<std::size_t> leg_order;
    Rational grading;

    CharVector canonical(const PlumbingGraph& g) const;
};

struct Table1Row {
    std::vector<std::int64_t> exponents;
    Rational d3;
    Rational d;
    bool e0_minus_one = false; // d3 and fillable count are cited, not computed
    std::vector<PublishedWitness> witnesses;
};

// Sigma(2, 3, 6k + sign) for k >= k_min.
struct Table1Family {
    std::string label;
    std::int64_t sign = 1;
    std::int64_t k_min = 1;
    Rational d3;
    Rational d;
    bool e0_minus_one = false;

    BrieskornIndex member(std::int64_t k) const;
    std::optional<std::int64_t> parameter(const BrieskornIndex& index) const;
    std::vector<PublishedWitness> witnesses(std::int64_t k) const;
};

struct Table1Expectation {
    std::string label;
    BrieskornIndex index;
    Rational d3;
    Rational d;
    std::int64_t fillable_count = 2;
    bool e0_minus_one = false;
    std::vector<PublishedWitness> witnesses;
};

struct Table1Fixture {
    std::vector<Table1Row> rows;
    std::vector<Table1Family> families;

    static const Table1Fixture& published();

    std::size_t three_exponent_rows() const;
    std::size_t four_exponent_rows() const;
    std::optional<Table1Expectation> lookup(const BrieskornIndex& index) const;
    // Every named row plus family members with k_min <= k <= k_max.
    std::vector<Table1Expectation> instantiate(std::int64_t k_max) const;
};

} // namespace brieskorn
