#include "brieskorn/contact.hpp"

#include "brieskorn/errors.hpp"

#include <sstream>

namespace brieskorn {

CharVector CharVector::negated() const {
    std::vector<std::int64_t> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = -values_[i];
    return CharVector(std::move(out));
}

std::string CharVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? " " : "") << values_[i];
    os << ')';
    return os.str();
}

bool is_characteristic(const PlumbingGraph& g, const CharVector& k) {
    if (k.size() != g.vertex_count()) return false;
    for (std::size_t v = 0; v < k.size(); ++v) {
        if (((k[v] - g.framing(v)) % 2) != 0) return false;
    }
    return true;
}

std::vector<std::size_t> leg_order_map(const PlumbingGraph& g, std::span<const std::size_t> leg_order) {
    const auto legs = g.legs();
    std::vector<std::size_t> seen(legs.size(), 0);
    for (std::size_t l : leg_order) {
        if (l >= legs.size() || seen[l]++) throw DomainError("leg order is not a permutation of the legs");
    }
    if (leg_order.size() != legs.size()) throw DomainError("leg order is not a permutation of the legs");
    std::vector<std::size_t> start(legs.size());
    std::size_t next = 1;
    for (std::size_t l = 0; l < legs.size(); ++l) {
        start[l] = next;
        next += legs[l].size();
    }
    std::vector<std::size_t> out{0};
    for (std::size_t l : leg_order)
        for (std::size_t j = 0; j < legs[l].size(); ++j) out.push_back(start[l] + j);
    return out;
}

CharVector apply_ordering(std::span<const std::int64_t> coords, std::span<const std::size_t> ordering) {
    if (coords.size() != ordering.size()) {
        throw DomainError("ordering map has " + std::to_string(ordering.size()) + " entries for a vector of length " +
                          std::to_string(coords.size()));
    }
    std::vector<std::int64_t> values(coords.size());
    std::vector<bool> hit(coords.size(), false);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (ordering[i] >= coords.size() || hit[ordering[i]]) throw DomainError("ordering map is not a permutation");
        hit[ordering[i]] = true;
        values[ordering[i]] = coords[i];
    }
    return CharVector(std::move(values));
}

Integer fillable_count(const PlumbingGraph& g) {
    if (g.center_framing() >= -1) {
        throw NotApplicable("fillable count formula needs center framing <= -2 (no blow-down available)",
                            kDelegatedFlag);
    }
    Integer count = abs(Integer(static_cast<long>(g.center_framing() + 1)));
    for (std::size_t v = 1; v < g.vertex_count(); ++v) {
        count *= static_cast<long>(-(g.framing(v) + 1));
    }
    return count;
}

CharVector canonical_vector(const PlumbingGraph& g) {
    std::size_t minus3 = 0;
    std::size_t where = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.framing(v) == -3) {
            ++minus3;
            where = v;
        } else if (g.framing(v) != -2) {
            throw NotApplicable("canonical vector needs framings in {-2,-3}; vertex " + std::to_string(v) +
                                    " has " + std::to_string(g.framing(v)),
                                "canonical vector not determined");
        }
    }
    if (minus3 != 1) {
        throw NotApplicable("canonical vector needs exactly one -3 vertex, found " + std::to_string(minus3),
                            "canonical vector not determined");
    }
    std::vector<std::int64_t> values(g.vertex_count(), 0);
    values[where] = -1;
    return CharVector(std::move(values));
}

Rational d3(const PlumbingGraph& g, const CharVector& v) {
    if (!is_characteristic(g, v)) {
        throw DomainError("d3 needs a characteristic covector, got " + v.to_string());
    }
    const Rational square = g.form().inverse_square(v.values());
    return (square + Rational(static_cast<long>(g.vertex_count()))) / Rational(4);
}

namespace {
Integer Z(std::int64_t x) { return Integer(static_cast<long>(x)); }
} // namespace

Rational d3_quadruple_closed(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    const Integer num = -Z(a) * Z(b) * Z(c) * Z(d) + Z(a) + Z(b) + Z(c) + Z(d) - 3;
    return Rational(num, Integer(4));
}

Rational d3_e0m2_closed(std::int64_t s, std::int64_t t, std::int64_t a, std::int64_t b) {
    const Integer ab = Z(a) * Z(b);
    const Integer x = ab - Z(a) - Z(b);
    const Integer num = Z(s) + Z(t) + Z(a) + Z(b) - (Z(t) + 1) * (ab - (Z(s) + 1) * x);
    return Rational(num, Integer(4));
}

Integer h1_e0m2_closed(std::int64_t s, std::int64_t t, std::int64_t a, std::int64_t b) {
    const Integer ab = Z(a) * Z(b);
    return (Z(t) + 2) * ab - ((Z(s) + 2) * (Z(t) + 2) - 1) * (ab - Z(a) - Z(b));
}

SeifertData e0m2_dual(std::int64_t s, std::int64_t t, std::int64_t a, std::int64_t b) {
    if (s < 0 || t < 0 || a < 2 || b < 2) throw DomainError("e0 = -2 family needs s,t >= 0 and a,b >= 2");
    const Integer num = Z(t) + 2;
    const Integer den = (Z(t) + 2) * (Z(s) + 2) - 1;
    return SeifertData(-1, {Rational(num, den), Rational(Integer(1), Z(a)), Rational(Integer(1), Z(b))});
}

PlumbingGraph center_minus3_graph(std::span<const std::int64_t> exponents) {
    std::vector<FramingChain> legs;
    for (auto a : exponents) {
        if (a < 2) throw DomainError("leg exponent must be >= 2");
        legs.push_back(FramingChain::twos(static_cast<std::size_t>(a - 1)));
    }
    return PlumbingGraph(-3, std::move(legs));
}

} // namespace brieskorn
