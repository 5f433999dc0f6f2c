#include "brieskorn/contact.hpp"
#include "brieskorn/diophantine.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/rational.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace brieskorn;

namespace {

using Triple = std::array<std::int64_t, 3>;

std::set<Triple> as_abc(const std::vector<AdmissibleTriple>& ts) {
    std::set<Triple> out;
    for (const auto& t : ts) out.insert({t.a, t.b, t.third()});
    return out;
}

const std::set<Triple> kNine = {{5, 7, 3}, {4, 11, 3}, {2, 7, 11}, {3, 14, 5}, {3, 10, 7},
                                {4, 5, 9}, {3, 8, 11}, {3, 7, 19}, {2, 9, 5}};

} // namespace

TEST_SUITE("diophantine") {

TEST_CASE("unit quadruples") {
    const auto q = quadruples_unit();
    CHECK(q == std::vector<Quadruple>{{2, 3, 7, 41}, {2, 3, 11, 13}});
    // (c-6)(d-6) = 35 over the divisor pairs
    for (const auto& [x, y] : std::vector<std::pair<int, int>>{{1, 35}, {5, 7}}) {
        const Quadruple expected{2, 3, x + 6, y + 6};
        CHECK(std::find(q.begin(), q.end(), expected) != q.end());
    }
    for (const auto& s : q) {
        const Rational lhs = Rational(1, s.a) + Rational(1, s.b) + Rational(1, s.c) + Rational(1, s.d);
        CHECK(lhs == Rational(1) + Rational(1, s.a * s.b * s.c * s.d));
    }
}

TEST_CASE("unit quadruple oracle") {
    CHECK(quadruples_unit_oracle(100) == quadruples_unit());
    CHECK(quadruples_unit_oracle(41) == quadruples_unit());
    CHECK(quadruples_unit_oracle(10).empty());
    CHECK(quadruples_unit_oracle(40) == std::vector<Quadruple>{{2, 3, 11, 13}});
    CHECK_THROWS_AS(quadruples_unit_oracle(1), DomainError);
}

TEST_CASE("no integral quadruple for the second equation") {
    const auto report = prop_new_check(200);
    CHECK(report.solutions.empty());
    CHECK(report.triples_scanned == 199ull * 198 * 197 / 6);
    CHECK(report.reduction_checks == 198ull * 197 / 2);
    // (2,3,5): d(90 - 12 - 20 - 30) = 28 gives d = 1 < 3
    CHECK(3 * 30 - 2 * 6 - 2 * 10 - 2 * 15 == 28);
    CHECK(30 - 2 == 28);
}

TEST_CASE("admissible triples") {
    const auto sol = admissible_triples(25);
    CHECK(as_abc(sol.finite) == kNine);
    CHECK(std::is_sorted(sol.finite.begin(), sol.finite.end()));
    REQUIRE(sol.families.size() == 1);
    const TripleFamily& fam = sol.families.front();
    CHECK(fam == TripleFamily{2, 3, 6, 2});
    CHECK(fam.label() == "(2,3,6v-1), v>=2");
    CHECK(sol.instantiated.size() == 24);
    CHECK(fam.instantiate(4) == std::vector<AdmissibleTriple>{{2, 3, 6, 2}, {2, 3, 6, 3}, {2, 3, 6, 4}});
    for (const auto& t : sol.all()) CHECK((property_mask(t) & kFirstThree) == kFirstThree);
}

TEST_CASE("the u = 2, a = 3 divisor row") {
    const auto sol = admissible_triples(25);
    std::vector<std::pair<std::int64_t, std::int64_t>> vb;
    for (const auto& t : sol.finite)
        if (t.u == 2 && t.a == 3) vb.emplace_back(t.v, t.b);
    std::sort(vb.begin(), vb.end());
    CHECK(vb == std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 14}, {4, 10}, {6, 8}, {10, 7}});
    for (const auto& t : sol.finite) CHECK_FALSE((t.u == 3 && t.a == 3));
    const bool dropped = std::any_of(sol.audit.begin(), sol.audit.end(),
                                     [](const DroppedDivisor& d) { return d.u == 2 && d.a == 4 && d.t == 14; });
    CHECK(dropped);
}

TEST_CASE("u = 2 and u = 3 completing-the-square identities hold for every a and v in range") {
    for (std::int64_t a = 2; a <= 60; ++a)
        for (std::int64_t v = 2; v <= 60; ++v) {
            const Integer A(static_cast<long>(a)), V(static_cast<long>(v));
            const Integer n2 = 4 * V * V - 5 * V + 2, t2 = V * (A - 2) - (A - 1);
            CHECK((A - 2) * (A - 2) * n2 == 4 * t2 * t2 + (3 * A + 2) * t2 + (A * A - A + 2));
            const Integer n3 = 9 * V * V - 8 * V + 2, t3 = V * (2 * A - 3) - (A - 1);
            CHECK((2 * A - 3) * (2 * A - 3) * n3 == 9 * t3 * t3 + (2 * A + 6) * t3 + (A * A - 2 * A + 3));
        }
}

TEST_CASE("factorisation identities for emitted triples") {
    for (const auto& t : admissible_triples(25).finite) {
        const std::int64_t a = t.a, b = t.b, v = t.v;
        if (t.u == 2) CHECK(((v - 1) * a - (2 * v - 1)) * ((v - 1) * b - (2 * v - 1)) == 4 * v * v - 5 * v + 2);
        if (t.u == 3) CHECK(((2 * v - 1) * a - (3 * v - 1)) * ((2 * v - 1) * b - (3 * v - 1)) == 9 * v * v - 8 * v + 2);
    }
}

TEST_CASE("oracle agreement") {
    for (auto [ab, vb] : std::vector<std::pair<std::int64_t, std::int64_t>>{{20, 25}, {8, 12}, {6, 30}}) {
        const auto oracle = admissible_triples_oracle(ab, vb);
        std::vector<AdmissibleTriple> expected;
        for (const auto& t : admissible_triples(vb).all())
            if (t.u <= ab && t.b <= ab * vb) expected.push_back(t);
        CHECK(oracle == expected);
        for (const auto& t : oracle) {
            CHECK(t.u != 4);
            CHECK(t.u != 5);
            CHECK(t.a <= 5);
            CHECK(t.u <= 6);
        }
    }
    const auto oracle = admissible_triples_oracle(20, 25);
    std::set<Triple> family;
    for (const auto& t : oracle)
        if (t.u == 6) family.insert({t.a, t.b, t.third()});
    CHECK(family.count({2, 3, 11}) == 1);
    CHECK(family.count({2, 3, 17}) == 1);
    CHECK(family.size() == 24);
}

TEST_CASE("property 4") {
    const auto kept = property4_filter(admissible_triples(25).all());
    CHECK(as_abc(kept) == std::set<Triple>{{5, 7, 3}, {4, 11, 3}, {2, 7, 11}});
    CHECK((property_mask(5, 7, 2, 2) & kLinear) != 0);
    CHECK((property_mask(3, 14, 2, 3) & kLinear) == 0);
    CHECK(5 + 7 + 2 + 2 == 4 + 1 * (35 - 23));
    CHECK(3 + 14 + 2 + 3 != 4 + 2 * (42 - 25));
}

TEST_CASE("property 2 is strict and property masks are exact") {
    // (2,3,5) with u = 2, v = 3: 1/2 + 1/3 + 3/5 > 1
    CHECK((property_mask(2, 3, 2, 3) & kSumAboveOne) != 0);
    CHECK((property_mask(3, 4, 2, 2) & kSumAboveOne) != 0);
    CHECK((property_mask(2, 4, 2, 2) & kCoprime) == 0);
    CHECK_THROWS_AS(property_mask(1, 4, 2, 2), DomainError);
    for (std::int64_t a = 2; a <= 30; ++a)
        for (std::int64_t b = a + 1; b <= 30; ++b)
            for (std::int64_t u = 2; u <= 6; ++u)
                for (std::int64_t v = 2; v <= 6; ++v) {
                    const Rational sum = Rational(1, a) + Rational(1, b) + Rational(v, u * v - 1);
                    CHECK(((property_mask(a, b, u, v) & kSumAboveOne) != 0) == (sum > Rational(1)));
                }
}

TEST_CASE("homology and d3 bridges over the admissible set") {
    const auto all = admissible_triples(25).all();
    for (const auto& t : all) {
        CHECK(h1_e0m2_closed(t.u - 2, t.v - 2, t.a, t.b) == 1);
        const bool p4 = (property_mask(t) & kLinear) != 0;
        CHECK(p4 == (d3_e0m2_closed(t.u - 2, t.v - 2, t.a, t.b) == Rational(0)));
    }
    // property 3 is the |H1| = 1 condition on the whole scanned box
    for (std::int64_t a = 2; a <= 20; ++a)
        for (std::int64_t b = a + 1; b <= 40; ++b)
            for (std::int64_t u = 2; u <= 6; ++u)
                for (std::int64_t v = 2; v <= 8; ++v) {
                    const bool p3 = (property_mask(a, b, u, v) & kCongruence) != 0;
                    CHECK(p3 == (h1_e0m2_closed(u - 2, v - 2, a, b) == 1));
                    const bool p4 = (property_mask(a, b, u, v) & kLinear) != 0;
                    CHECK(p4 == (d3_e0m2_closed(u - 2, v - 2, a, b) == Rational(0)));
                }
}

TEST_CASE("TSV rendering") {
    const auto sol = admissible_triples(3);
    const std::string tsv = render_tsv(sol);
    CHECK(tsv.rfind("a\tb\tu\tv\tuv-1\tmask\texponents\n", 0) == 0);
    CHECK(tsv.find("5\t7\t2\t2\t3\t15\t3,5,7\n") != std::string::npos);
    CHECK(tsv.find("FAMILY\t2\t3\t6\tv>=2\t6v-1\t7\t2,3,6v-1\n") != std::string::npos);
    CHECK(render_tsv(quadruples_unit()) == "a\tb\tc\td\n2\t3\t7\t41\n2\t3\t11\t13\n");
}

}
