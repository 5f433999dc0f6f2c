#include "brieskorn/table1.hpp"

#include "brieskorn/errors.hpp"

namespace brieskorn {
namespace {

// Vector with entries (position, value), positions 1-based.
std::vector<std::int64_t> sparse(std::size_t n, std::initializer_list<std::pair<std::size_t, std::int64_t>> e) {
    std::vector<std::int64_t> v(n, 0);
    for (auto [i, x] : e) v.at(i - 1) = x;
    return v;
}

PublishedWitness witness(std::string name, std::vector<std::int64_t> coords, std::vector<std::size_t> legs,
                     long grading) {
    return {std::move(name), std::move(coords), std::move(legs), Rational(grading)};
}

Table1Fixture build() {
    Table1Fixture f;
    auto row = [&](std::vector<std::int64_t> e, long d3, long d, bool cited, std::vector<PublishedWitness> w = {}) {
        f.rows.push_back({std::move(e), Rational(d3), Rational(d), cited, std::move(w)});
    };
    row({2, 5, 7}, 0, 0, true);
    row({3, 4, 5}, 0, 0, true);
    row({2, 7, 11}, 0, 2, false, {witness("V1", sparse(12, {{3, -1}, {12, 2}}), {2, 0, 1}, 2)});
    row({3, 4, 11}, 0, 2, false, {witness("V3", sparse(15, {{2, -1}, {15, 2}}), {0, 1, 2}, 2)});
    row({3, 5, 7}, 0, 2, false, {witness("V2", sparse(12, {{2, -1}, {12, 2}}), {0, 1, 2}, 2)});
    row({2, 5, 9}, 2, 2, false, {witness("V1", sparse(12, {{3, -1}}), {1, 0, 2}, 2)});
    row({3, 7, 10}, -6, 2, false, {witness("V1", sparse(15, {{2, -1}, {3, 2}}), {1, 0, 2}, 2)});
    row({3, 7, 19}, -18, 2, false, {witness("V4", sparse(18, {{2, -1}, {6, 2}}), {2, 0, 1}, 2)});
    row({3, 8, 11}, -10, 2, false, {witness("V3", sparse(15, {{2, -1}, {4, 2}}), {2, 0, 1}, 2)});
    row({4, 5, 9}, -6, 2, false, {witness("V2", sparse(12, {{2, -1}, {12, 2}}), {2, 0, 1}, 2)});
    row({3, 5, 14}, -4, 4, false, {witness("V5", sparse(18, {{2, -1}, {3, 2}}), {1, 0, 2}, 4)});
    row({2, 3, 7, 41}, -418, 12, false, {witness("V", sparse(50, {{1, -1}, {2, 2}}), {0, 1, 2, 3}, 12)});
    row({2, 3, 11, 13}, -208, 6, false, {witness("V", sparse(26, {{1, -1}, {2, 2}}), {0, 1, 2, 3}, 6)});

    f.families.push_back({"Sigma(2,3,6k+1), k>=1", 1, 1, Rational(0), Rational(0), true});
    f.families.push_back({"Sigma(2,3,6k-1), k>=2", -1, 2, Rational(2), Rational(2), false});
    return f;
}

} // namespace

CharVector PublishedWitness::canonical(const PlumbingGraph& g) const {
    return apply_ordering(coordinates, leg_order_map(g, leg_order));
}

BrieskornIndex Table1Family::member(std::int64_t k) const {
    if (k < k_min) throw DomainError(label + ": parameter k = " + std::to_string(k) + " is below " + std::to_string(k_min));
    return BrieskornIndex({2, 3, 6 * k + sign});
}

std::optional<std::int64_t> Table1Family::parameter(const BrieskornIndex& index) const {
    const auto e = index.exponents();
    if (e.size() != 3 || e[0] != 2 || e[1] != 3 || (e[2] - sign) % 6 != 0) return std::nullopt;
    const std::int64_t k = (e[2] - sign) / 6;
    if (k < k_min) return std::nullopt;
    return k;
}

std::vector<PublishedWitness> Table1Family::witnesses(std::int64_t k) const {
    if (e0_minus_one) return {};
    // -1 on the -3 vertex, which sits at the end of the leg listed first.
    const std::size_t n = 7 + static_cast<std::size_t>(k);
    return {witness("V2," + std::to_string(k), sparse(n, {{6, -1}}), {2, 0, 1}, 2)};
}

const Table1Fixture& Table1Fixture::published() {
    static const Table1Fixture fixture = build();
    return fixture;
}

std::size_t Table1Fixture::three_exponent_rows() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.exponents.size() == 3;
    return n;
}

std::size_t Table1Fixture::four_exponent_rows() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.exponents.size() == 4;
    return n;
}

std::optional<Table1Expectation> Table1Fixture::lookup(const BrieskornIndex& index) const {
    for (const auto& r : rows) {
        BrieskornIndex idx(r.exponents);
        if (idx == index) return Table1Expectation{idx.to_string(), idx, r.d3, r.d, 2, r.e0_minus_one, r.witnesses};
    }
    for (const auto& fam : families) {
        if (auto k = fam.parameter(index))
            return Table1Expectation{fam.label, index, fam.d3, fam.d, 2, fam.e0_minus_one, fam.witnesses(*k)};
    }
    return std::nullopt;
}

std::vector<Table1Expectation> Table1Fixture::instantiate(std::int64_t k_max) const {
    std::vector<Table1Expectation> out;
    for (const auto& fam : families)
        for (std::int64_t k = fam.k_min; k <= k_max; ++k) {
            const auto idx = fam.member(k);
            out.push_back({idx.to_string(), idx, fam.d3, fam.d, 2, fam.e0_minus_one, fam.witnesses(k)});
        }
    for (const auto& r : rows) {
        BrieskornIndex idx(r.exponents);
        out.push_back({idx.to_string(), idx, r.d3, r.d, 2, r.e0_minus_one, r.witnesses});
    }
    return out;
}

} // namespace brieskorn
