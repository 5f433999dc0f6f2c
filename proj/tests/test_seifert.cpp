#include "brieskorn/errors.hpp"
#include "brieskorn/plumbing.hpp"
#include "brieskorn/seifert.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace brieskorn;

namespace {

std::vector<Rational> sorted(std::span<const Rational> rs) {
    std::vector<Rational> out(rs.begin(), rs.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool same_up_to_order(const SeifertData& a, const SeifertData& b) {
    return a.e0() == b.e0() && sorted(a.multipliers()) == sorted(b.multipliers());
}

SeifertData M(std::int64_t e0, std::vector<Rational> rs) { return SeifertData(e0, std::move(rs)); }

} // namespace

TEST_SUITE("seifert-data") {

TEST_CASE("Brieskorn index validation and normalisation") {
    CHECK(BrieskornIndex({5, 7, 3}).to_string() == "Sigma(3,5,7)");
    CHECK(BrieskornIndex({5, 7, 3}) == BrieskornIndex({3, 5, 7}));
    CHECK(BrieskornIndex({2, 3, 5}).key() == "2,3,5");
    CHECK(BrieskornIndex({2, 3, 7, 41}).product() == 1722);
    CHECK_THROWS_AS(BrieskornIndex({2, 4, 5}), DomainError);
    CHECK_THROWS_AS(BrieskornIndex({2, 3}), DomainError);
    CHECK_THROWS_AS(BrieskornIndex({1, 3, 5}), DomainError);
    CHECK_THROWS_AS(BrieskornIndex({3, 3, 5}), DomainError);
}

TEST_CASE("from_brieskorn examples") {
    CHECK(from_brieskorn(BrieskornIndex({2, 3, 5})) == M(-2, {Rational(1, 2), Rational(2, 3), Rational(4, 5)}));
    CHECK(from_brieskorn(BrieskornIndex({2, 3, 7})) == M(-1, {Rational(1, 2), Rational(1, 3), Rational(1, 7)}));
    // multipliers follow the sorted exponents; compare as a multiset
    const SeifertData m = from_brieskorn(BrieskornIndex({2, 7, 11}));
    CHECK(same_up_to_order(m, M(-2, {Rational(1, 2), Rational(7, 11), Rational(6, 7)})));
    CHECK(m.multipliers()[1] == Rational(6, 7));
    CHECK(same_up_to_order(reverse_orientation(m), M(-1, {Rational(4, 11), Rational(1, 2), Rational(1, 7)})));
}

TEST_CASE("euler number examples") {
    CHECK(euler_number(M(-2, {Rational(1, 2), Rational(2, 3), Rational(4, 5)})) == Rational(-1, 30));
    CHECK(euler_number(M(-1, {Rational(1, 2), Rational(1, 3), Rational(1, 7)})) == Rational(-1, 42));
    CHECK(euler_number(M(-1, {})) == Rational(-1));
}

TEST_CASE("orientation reversal") {
    CHECK(reverse_orientation(M(-2, {Rational(1, 2), Rational(7, 11), Rational(6, 7)})) ==
          M(-1, {Rational(1, 2), Rational(4, 11), Rational(1, 7)}));
    CHECK(reverse_orientation(M(-2, {Rational(1, 2), Rational(2, 3), Rational(4, 5)})) ==
          M(-1, {Rational(1, 2), Rational(1, 3), Rational(1, 5)}));
    CHECK_THROWS_AS(reverse_orientation(M(-1, {})), DomainError);
}

TEST_CASE("SeifertData validation and text round trip") {
    CHECK_THROWS_AS(M(-1, {Rational(1)}), DomainError);
    CHECK_THROWS_AS(M(-1, {Rational(0)}), DomainError);
    CHECK_THROWS_AS(M(-1, {Rational(3, 2)}), DomainError);
    const SeifertData m = M(-2, {Rational(1, 2), Rational(2, 3), Rational(4, 5)});
    CHECK(m.to_string() == "M(-2; 1/2, 2/3, 4/5)");
    CHECK(SeifertData::parse(m.to_string()) == m);
    CHECK(SeifertData::parse("M(+3;1/2,1/3)") == M(3, {Rational(1, 2), Rational(1, 3)}));
    CHECK(SeifertData::parse(M(-1, {}).to_string()) == M(-1, {}));
    CHECK_THROWS_AS(SeifertData::parse("M(-1)"), DomainError);
    CHECK(SeifertData::parse("M(-1; )") == M(-1, {}));
    CHECK_THROWS_AS(SeifertData::parse("M(-1; 2/4)"), DomainError);
    CHECK_THROWS_AS(SeifertData::parse("M(-1; 1/2"), DomainError);
    CHECK_THROWS_AS(SeifertData::parse("N(-1; 1/2)"), DomainError);
    CHECK_THROWS_AS(SeifertData::parse("M(x; 1/2)"), DomainError);
}

TEST_CASE("h1 order examples") {
    CHECK(h1_order(from_brieskorn(BrieskornIndex({2, 3, 5}))) == 1);
    CHECK(h1_order(from_brieskorn(BrieskornIndex({2, 3, 7, 41}))) == 1);
    CHECK(h1_order(M(-2, {Rational(1, 3), Rational(1, 3)})) == 12);
}

TEST_CASE("every index with product <= 10^4 is a homology sphere with e = -1/A") {
    std::size_t count = 0;
    std::vector<std::int64_t> cur;
    auto go = [&](auto&& self, std::int64_t from, std::int64_t prod) -> void {
        if (cur.size() >= 3) {
            const BrieskornIndex idx(cur);
            const SeifertData m = from_brieskorn(idx);
            REQUIRE(euler_number(m) == Rational(-1) / Rational(idx.product()));
            REQUIRE(h1_order(m) == 1);
            for (const auto& r : m.multipliers()) REQUIRE((r > Rational(0) && r < Rational(1)));
            ++count;
        }
        for (std::int64_t a = from; prod * a <= 10'000; ++a) {
            if (std::any_of(cur.begin(), cur.end(), [&](auto x) { return std::gcd(x, a) != 1; })) continue;
            cur.push_back(a);
            self(self, a + 1, prod * a);
            cur.pop_back();
        }
    };
    go(go, 2, 1);
    CHECK(count > 4000);
}

TEST_CASE("reversal negates the Euler number and is an involution") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> legs(1, 5), e0(-6, 3), den(2, 30);
    for (int i = 0; i < 500; ++i) {
        std::vector<Rational> rs;
        const int n = legs(rng);
        for (int j = 0; j < n; ++j) {
            const long q = den(rng);
            std::uniform_int_distribution<long> num(1, q - 1);
            rs.emplace_back(num(rng), q);
        }
        const SeifertData m(e0(rng), rs);
        CHECK(euler_number(reverse_orientation(m)) == Rational(0) - euler_number(m));
        CHECK(reverse_orientation(reverse_orientation(m)) == m);
    }
}

TEST_CASE("Sigma(2,3,6k-1) reversed is M(-1; k/(6k-1), 1/2, 1/3)") {
    for (std::int64_t k = 2; k <= 10; ++k) {
        const SeifertData rev = reverse_orientation(from_brieskorn(BrieskornIndex({2, 3, 6 * k - 1})));
        CHECK(same_up_to_order(rev, M(-1, {Rational(k, 6 * k - 1), Rational(1, 2), Rational(1, 3)})));
    }
}

TEST_CASE("reversed data of the d3 != 0 family") {
    const std::vector<std::pair<std::vector<std::int64_t>, SeifertData>> cases = {
        {{3, 7, 10}, M(-1, {Rational(4, 7), Rational(1, 3), Rational(1, 10)})},
        {{4, 5, 9}, M(-1, {Rational(5, 9), Rational(1, 4), Rational(1, 5)})},
        {{3, 8, 11}, M(-1, {Rational(6, 11), Rational(1, 3), Rational(1, 8)})},
        {{3, 7, 19}, M(-1, {Rational(10, 19), Rational(1, 3), Rational(1, 7)})},
        {{3, 5, 14}, M(-1, {Rational(3, 5), Rational(1, 3), Rational(1, 14)})},
    };
    for (const auto& [e, expected] : cases) {
        CAPTURE(BrieskornIndex(e).to_string());
        CHECK(same_up_to_order(reverse_orientation(from_brieskorn(BrieskornIndex(e))), expected));
    }
}

}
