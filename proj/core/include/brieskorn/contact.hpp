#pragma once

#include "brieskorn/plumbing.hpp"
#include "brieskorn/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace brieskorn {

/// Evaluations <K, v> of a covector on the vertex classes, in canonical order.
class CharVector {
public:
    CharVector() = default;
    explicit CharVector(std::vector<std::int64_t> values) : values_(std::move(values)) {}

    std::span<const std::int64_t> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    std::int64_t operator[](std::size_t i) const { return values_[i]; }

    CharVector negated() const;
    std::string to_string() const;

    friend bool operator==(const CharVector&, const CharVector&) = default;

private:
    std::vector<std::int64_t> values_;
};

/// Right length and values[v] == framing(v) (mod 2) at every vertex.
bool is_characteristic(const PlumbingGraph& g, const CharVector& k);

inline constexpr const char* kDelegatedFlag = "e0 >= -1: fillable count delegated to the external classification";

/// Vertex permutation listing the center, then the legs in `leg_order`, each center-outward.
/// Entry i is the canonical index of coordinate i.
std::vector<std::size_t> leg_order_map(const PlumbingGraph& g, std::span<const std::size_t> leg_order);

/// Places coords[i] at canonical vertex ordering[i]. Throws DomainError unless
/// ordering is a permutation of the same length as coords.
CharVector apply_ordering(std::span<const std::int64_t> coords, std::span<const std::size_t> ordering);

/// |e0 + 1| * prod |m + 1| over all leg framings.
/// Throws NotApplicable (flag kDelegatedFlag) when the center framing is >= -1.
Integer fillable_count(const PlumbingGraph& g);

/// -1 at the unique -3 vertex, 0 elsewhere. Throws NotApplicable unless exactly
/// one vertex is framed -3 and all others -2.
CharVector canonical_vector(const PlumbingGraph& g);

/// (v^T Q^{-1} v + |G|) / 4. Throws DomainError if v is not characteristic.
Rational d3(const PlumbingGraph& g, const CharVector& v);

/// (-abcd + a + b + c + d - 3) / 4, the four-leg center -3 family.
Rational d3_quadruple_closed(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

/// (s + t + a + b - (t+1)[ab - (s+1)(ab - a - b)]) / 4, the e0 = -2 three-leg family.
Rational d3_e0m2_closed(std::int64_t s, std::int64_t t, std::int64_t a, std::int64_t b);

/// (t+2)ab - [(s+2)(t+2) - 1](ab - a - b).
Integer h1_e0m2_closed(std::int64_t s, std::int64_t t, std::int64_t a, std::int64_t b);

/// The Seifert data whose reversal has the e0 = -2 graph with parameters (s,t,a,b):
/// M(-1; (t+2)/((t+2)(s+2)-1), 1/a, 1/b).
SeifertData e0m2_dual(std::int64_t s, std::int64_t t, std::int64_t a, std::int64_t b);

/// Center -3 with all -2 legs of lengths a-1, b-1, ...
PlumbingGraph center_minus3_graph(std::span<const std::int64_t> exponents);

} // namespace brieskorn
