#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace brieskorn {

struct Quadruple {
    std::int64_t a = 0, b = 0, c = 0, d = 0;
    auto operator<=>(const Quadruple&) const = default;
    std::string to_string() const;
};

// Pairwise coprime a<b<c<d with 1/a+1/b+1/c+1/d = 1+1/abcd. Derived by replaying
// the bounding inequalities (a = 2, b = 3, then (c-6)(d-6) = 35).
std::vector<Quadruple> quadruples_unit();
std::vector<Quadruple> quadruples_unit_oracle(std::int64_t bound);

struct PropNewReport {
    std::int64_t bound = 0;
    std::uint64_t triples_scanned = 0;
    std::vector<Quadruple> solutions;   // a<b<c, d >= 3 integral
    std::uint64_t reduction_checks = 0; // a = 2 cases where 2d(bc-b-c) = bc-1 was verified
};

// Scans c > b > a >= 2 with entries <= bound for integral d = (abc-2)/(3abc-2ab-2ac-2bc) >= 3.
PropNewReport prop_new_check(std::int64_t bound);

// Exponent triple (a, b, uv - 1) with u, v >= 2 and a < b.
struct AdmissibleTriple {
    std::int64_t a = 0, b = 0, u = 0, v = 0;
    std::int64_t third() const { return u * v - 1; }
    std::int64_t x() const { return a * b - a - b; }
    std::array<std::int64_t, 3> exponents() const; // sorted
    auto operator<=>(const AdmissibleTriple&) const = default;
};

enum PropertyBit : unsigned {
    kCoprime = 1u << 0,     // a, b, uv - 1 pairwise coprime
    kSumAboveOne = 1u << 1, // 1/a + 1/b + v/(uv-1) > 1
    kCongruence = 1u << 2,  // v*a*b - 1 = (uv-1)(ab-a-b)
    kLinear = 1u << 3,      // a+b+u+v = 4 + (v-1)(ab - (u-1)(ab-a-b))
};
inline constexpr unsigned kFirstThree = kCoprime | kSumAboveOne | kCongruence;

unsigned property_mask(std::int64_t a, std::int64_t b, std::int64_t u, std::int64_t v);
inline unsigned property_mask(const AdmissibleTriple& t) { return property_mask(t.a, t.b, t.u, t.v); }

// The infinite branch (a, b, u*v - 1) for v >= v_min.
struct TripleFamily {
    std::int64_t a = 0, b = 0, u = 0, v_min = 2;
    std::string label() const;
    std::vector<AdmissibleTriple> instantiate(std::int64_t v_max) const;
    bool contains(const AdmissibleTriple& t) const;
    bool operator==(const TripleFamily&) const = default;
};

struct DroppedDivisor {
    std::int64_t u = 0, a = 0, t = 0;
    std::string reason;
};

struct TripleSolutions {
    std::vector<AdmissibleTriple> finite;       // sorted
    std::vector<TripleFamily> families;
    std::vector<AdmissibleTriple> instantiated; // family members with v <= v_bound
    std::vector<DroppedDivisor> audit;
    std::vector<AdmissibleTriple> all() const;  // finite and instantiated, sorted
};

// Solutions of properties 1-3, derived branch by branch over u.
TripleSolutions admissible_triples(std::int64_t v_bound);

// Direct scan over 2 <= a < b <= a_bound * v_bound, 2 <= u <= a_bound, 2 <= v <= v_bound.
std::vector<AdmissibleTriple> admissible_triples_oracle(std::int64_t a_bound, std::int64_t v_bound,
                                                        unsigned threads = 0);

std::vector<AdmissibleTriple> property4_filter(const std::vector<AdmissibleTriple>& triples);

// Tab separated rows "a b u v uv-1 mask exponents" plus one "FAMILY" row per family.
// The last column is the sorted exponent triple.
std::string render_tsv(const TripleSolutions& solutions);
std::string render_tsv(const std::vector<AdmissibleTriple>& triples);
std::string render_tsv(const std::vector<Quadruple>& quadruples);

} // namespace brieskorn
