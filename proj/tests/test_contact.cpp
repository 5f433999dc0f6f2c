#include "brieskorn/contact.hpp"
#include "brieskorn/diophantine.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/plumbing.hpp"
#include "brieskorn/seifert.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace brieskorn;

namespace {

PlumbingGraph graph_of(std::vector<std::int64_t> e) { return standard_graph(from_brieskorn(BrieskornIndex(std::move(e)))); }

Rational d3_can(const PlumbingGraph& g) { return d3(g, canonical_vector(g)); }

PlumbingGraph e0m2_graph(std::int64_t s, std::int64_t t, std::int64_t a, std::int64_t b) {
    return standard_graph(reverse_orientation(e0m2_dual(s, t, a, b)));
}

// Center framing and leg framings with the leg order forgotten.
std::pair<std::int64_t, std::vector<std::vector<std::int64_t>>> shape(const PlumbingGraph& g) {
    std::vector<std::vector<std::int64_t>> legs;
    for (const auto& l : g.legs()) legs.emplace_back(l.framings().begin(), l.framings().end());
    std::sort(legs.begin(), legs.end());
    return {g.center_framing(), legs};
}

// Matrix d3 with an independent inverse.
mpq_class oracle_d3(const PlumbingGraph& g, const CharVector& v) {
    const auto inv = oracle::gauss_inverse(oracle::to_dense(g.form().matrix()));
    std::vector<long> k(v.values().begin(), v.values().end());
    return (oracle::square(*inv, k) + static_cast<long>(k.size())) / 4;
}

} // namespace

TEST_SUITE("contact-invariants") {

TEST_CASE("characteristic parity") {
    const auto g = graph_of({2, 3, 5});
    CHECK(is_characteristic(g, CharVector(std::vector<std::int64_t>(8, 0))));
    CHECK_FALSE(is_characteristic(g, CharVector(std::vector<std::int64_t>(7, 0))));
    std::vector<std::int64_t> odd(8, 0);
    odd[3] = 1;
    CHECK_FALSE(is_characteristic(g, CharVector(odd)));
    CHECK_THROWS_AS(d3(g, CharVector(odd)), DomainError);
}

TEST_CASE("fillable count examples") {
    CHECK(fillable_count(graph_of({2, 3, 7, 41})) == 2);
    CHECK(fillable_count(graph_of({2, 3, 5})) == 1);
    CHECK(fillable_count(graph_of({2, 7, 11})) == 2);
    try {
        (void)fillable_count(graph_of({2, 3, 7}));
        FAIL("expected NotApplicable");
    } catch (const NotApplicable& e) {
        CHECK(std::string(e.flag()) == kDelegatedFlag);
    }
}

TEST_CASE("canonical vector examples") {
    const auto g = graph_of({2, 7, 11});
    const auto v = canonical_vector(g);
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            ++nonzero;
            CHECK(v[i] == -1);
            CHECK(g.framing(i) == -3);
        }
    }
    CHECK(nonzero == 1);
    CHECK(is_characteristic(g, v));
    const auto big = canonical_vector(graph_of({2, 3, 7, 41}));
    CHECK(big[0] == -1);
    CHECK_THROWS_AS(canonical_vector(graph_of({2, 3, 5})), NotApplicable);
    CHECK_THROWS_AS(canonical_vector(PlumbingGraph(-3, {FramingChain({-3})})), NotApplicable);
    CHECK_THROWS_AS(canonical_vector(PlumbingGraph(-2, {FramingChain({-4})})), NotApplicable);
}

TEST_CASE("d3 examples") {
    CHECK(d3_can(graph_of({2, 3, 7, 41})) == Rational(-418));
    CHECK(d3_can(graph_of({3, 5, 7})) == Rational(0));
    CHECK(d3_can(graph_of({4, 5, 9})) == Rational(-6));
    CHECK(d3_can(graph_of({2, 3, 11, 13})) == Rational(-208));
}

TEST_CASE("closed form examples") {
    CHECK(d3_quadruple_closed(2, 3, 7, 41) == Rational(-418));
    CHECK(d3_quadruple_closed(2, 3, 11, 13) == Rational(-208));
    CHECK(d3_quadruple_closed(2, 3, 5, 7) == Rational(-49));
    CHECK(d3_e0m2_closed(1, 2, 2, 7) == Rational(0));
    CHECK(d3_e0m2_closed(0, 3, 4, 5) == Rational(-6));
    CHECK(d3_e0m2_closed(1, 0, 2, 9) == Rational(2));
    CHECK(h1_e0m2_closed(0, 0, 5, 7) == 1);
    CHECK(h1_e0m2_closed(1, 2, 2, 7) == 1);
    CHECK(h1_e0m2_closed(0, 0, 2, 3) == 9);
    CHECK(abs(determinant(e0m2_graph(0, 0, 2, 3).form())) == 9);
}

TEST_CASE("e0 = -2 parameters reproduce the Table graphs") {
    CHECK(shape(e0m2_graph(1, 2, 2, 7)) == shape(graph_of({2, 7, 11})));
    CHECK(shape(e0m2_graph(0, 3, 4, 5)) == shape(graph_of({4, 5, 9})));
    CHECK(shape(e0m2_graph(1, 0, 2, 9)) == shape(graph_of({2, 5, 9})));
}

TEST_CASE("closed four-leg form equals the matrix form exactly on homology spheres") {
    // The star with center -3 and a-1, b-1, c-1, d-1 twos has Q^{-1}_{00} = 1/e, so the
    // matrix value is (1/e + a+b+c+d - 3)/4; the closed form assumes e = -1/abcd.
    std::vector<Quadruple> spheres;
    std::size_t quadruples = 0;
    for (std::int64_t a = 2; a <= 5000; ++a)
        for (std::int64_t b = a + 1; a * b <= 5000; ++b)
            for (std::int64_t c = b + 1; a * b * c <= 5000; ++c)
                for (std::int64_t d = c + 1; a * b * c * d <= 5000; ++d) {
                    const std::vector<std::int64_t> e{a, b, c, d};
                    bool coprime = true;
                    for (std::size_t i = 0; i < 4; ++i)
                        for (std::size_t j = i + 1; j < 4; ++j) coprime = coprime && std::gcd(e[i], e[j]) == 1;
                    if (!coprime) continue;
                    ++quadruples;
                    const PlumbingGraph g = center_minus3_graph(e);
                    const Rational euler = Rational(1) - Rational(1, a) - Rational(1, b) - Rational(1, c) - Rational(1, d);
                    const Integer det = abs(determinant(g.form()));
                    if (det == 0) continue;
                    const Rational matrix = d3_can(g);
                    CAPTURE(a);
                    CAPTURE(b);
                    CAPTURE(c);
                    CAPTURE(d);
                    REQUIRE(matrix == (Rational(1) / euler + Rational(a + b + c + d - 3)) / Rational(4));
                    const bool sphere = det == 1 && g.form().negative_definite();
                    if (sphere) spheres.push_back({a, b, c, d});
                    REQUIRE((d3_quadruple_closed(a, b, c, d) == matrix) == sphere);
                }
    CHECK(quadruples > 10);
    std::sort(spheres.begin(), spheres.end());
    CHECK(spheres == quadruples_unit());
}

TEST_CASE("e0 = -2 closed forms against the matrix") {
    std::size_t applicable = 0, spheres = 0;
    for (std::int64_t s = 0; s <= 6; ++s)
        for (std::int64_t t = 0; t <= 6; ++t)
            for (std::int64_t a = 2; a <= 12; ++a)
                for (std::int64_t b = a + 1; b <= 12; ++b) {
                    if (std::gcd(a, b) != 1) continue;
                    const PlumbingGraph g = e0m2_graph(s, t, a, b);
                    const Integer det = abs(determinant(g.form()));
                    const Integer closed = h1_e0m2_closed(s, t, a, b);
                    REQUIRE(abs(closed) == det);
                    if (det == 0 || !g.form().negative_definite()) continue;
                    REQUIRE(closed == det);
                    CharVector v;
                    try {
                        v = canonical_vector(g);
                    } catch (const NotApplicable&) {
                        continue;
                    }
                    ++applicable;
                    const Rational matrix = d3(g, v);
                    const bool sphere = det == 1;
                    spheres += sphere;
                    CAPTURE(s);
                    CAPTURE(t);
                    CAPTURE(a);
                    CAPTURE(b);
                    REQUIRE((d3_e0m2_closed(s, t, a, b) == matrix) == sphere);
                }
    CHECK(applicable == 114);
    CHECK(spheres == 14);
}

TEST_CASE("matrix d3 matches an independent inverse and is negation invariant") {
    for (auto e : std::vector<std::vector<std::int64_t>>{{2, 7, 11}, {3, 4, 11}, {3, 5, 14}, {3, 7, 19}, {2, 3, 11, 13}}) {
        const auto g = graph_of(e);
        const auto v = canonical_vector(g);
        CHECK(d3(g, v).raw() == oracle_d3(g, v));
    }
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = oracle::random_star(rng, 10, -5, -2);
        std::vector<FramingChain> legs;
        for (const auto& l : s.legs) legs.emplace_back(std::vector<std::int64_t>(l.begin(), l.end()));
        const PlumbingGraph g(s.center, legs);
        if (determinant(g.form()) == 0) continue;
        std::vector<std::int64_t> k(g.vertex_count());
        std::uniform_int_distribution<std::int64_t> half(-3, 3);
        for (std::size_t v = 0; v < k.size(); ++v) k[v] = 2 * half(rng) + (g.framing(v) & 1);
        const CharVector cv(k);
        REQUIRE(d3(g, cv) == d3(g, cv.negated()));
        REQUIRE(d3(g, cv).raw() == oracle_d3(g, cv));
    }
}

TEST_CASE("fillable count is 2 exactly for a unique -3 among -2s") {
    // every star with at most 12 vertices and framings in [-4,-2], up to leg order
    std::size_t graphs = 0, twos = 0;
    std::vector<std::vector<std::int64_t>> legs;
    auto check = [&](std::int64_t center) {
        std::vector<FramingChain> chains;
        for (const auto& l : legs) chains.emplace_back(l);
        const PlumbingGraph g(center, chains);
        std::size_t minus3 = 0, minus2 = 0;
        for (auto m : g.framings()) {
            minus3 += m == -3;
            minus2 += m == -2;
        }
        const bool shape = minus3 == 1 && minus3 + minus2 == g.vertex_count();
        const bool two = fillable_count(g) == 2;
        REQUIRE(two == shape);
        ++graphs;
        twos += two;
    };
    // legs are encoded as base-3 words, nondecreasing to avoid permutations
    auto leg_from = [](std::size_t len, std::size_t code) {
        std::vector<std::int64_t> l(len);
        for (std::size_t j = 0; j < len; ++j, code /= 3) l[j] = -2 - static_cast<std::int64_t>(code % 3);
        return l;
    };
    auto extend = [&](auto&& self, std::size_t budget, std::pair<std::size_t, std::size_t> last) -> void {
        for (std::int64_t c = -4; c <= -2; ++c) check(c);
        for (std::size_t len = last.first; len <= budget; ++len) {
            std::size_t words = 1;
            for (std::size_t j = 0; j < len; ++j) words *= 3;
            for (std::size_t code = len == last.first ? last.second : 0; code < words; ++code) {
                legs.push_back(leg_from(len, code));
                self(self, budget - len, {len, code});
                legs.pop_back();
            }
        }
    };
    extend(extend, 6, {1, 0});
    CHECK(graphs > 1000);
    CHECK(twos > 10);
    // the count only sees the framing multiset, so one leg covers every multiset up to 12 vertices
    for (std::size_t len = 1; len <= 11; ++len) {
        std::size_t words = 1;
        for (std::size_t j = 0; j < len; ++j) words *= 3;
        for (std::size_t code = 0; code < words; ++code) {
            legs = {leg_from(len, code)};
            for (std::int64_t c = -4; c <= -2; ++c) check(c);
        }
    }
    CHECK(graphs > 800000);
}

TEST_CASE("ordering maps") {
    const auto g = graph_of({2, 3, 11}); // legs of lengths 1, 2, 5
    const std::vector<std::size_t> order{2, 0, 1};
    CHECK(leg_order_map(g, order) == std::vector<std::size_t>{0, 4, 5, 6, 7, 8, 1, 2, 3});
    const std::vector<std::int64_t> coords{0, 0, 0, 0, 0, -1, 0, 0, 0};
    CHECK(apply_ordering(coords, leg_order_map(g, order)) == canonical_vector(g));
    CHECK_THROWS_AS(leg_order_map(g, std::vector<std::size_t>{0, 0, 1}), DomainError);
    CHECK_THROWS_AS(apply_ordering(coords, std::vector<std::size_t>{0, 1}), DomainError);
}

}
