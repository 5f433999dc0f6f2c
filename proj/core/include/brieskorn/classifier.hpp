#pragma once

#include "brieskorn/full_path.hpp"
#include "brieskorn/seifert.hpp"
#include "brieskorn/table1.hpp"

#include <optional>
#include <utility>
#include <string>
#include <vector>

namespace brieskorn {

enum class Certification { None, Exhaustive, WitnessVerified, Cited };
enum class Source { Computed, Cited, NotApplicable };

std::string to_string(Certification c);
std::string to_string(Source s);
Certification parse_certification(std::string_view text);
Source parse_source(std::string_view text);

struct InvariantReport {
    InvariantReport(BrieskornIndex index_, bool reversed_, SeifertData seifert_, Rational euler_, Integer h1_,
                    bool negative_definite_)
        : index(std::move(index_)), reversed(reversed_), seifert(std::move(seifert_)), euler(std::move(euler_)),
          h1(std::move(h1_)), negative_definite(negative_definite_) {}

    BrieskornIndex index;
    bool reversed = false; // report describes -Sigma
    SeifertData seifert;
    Rational euler;
    Integer h1;
    bool negative_definite = false;
    std::optional<Integer> fillable_count;
    Source fillable_source = Source::NotApplicable;
    std::optional<Rational> d3;
    Source d3_source = Source::NotApplicable;
    std::optional<Rational> d;
    Certification d_certification = Certification::None;
    std::vector<std::string> notes;

    std::string manifold() const;
    friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

struct ClassifyOptions {
    Integer budget = kDefaultBudget;
    unsigned threads = 0;
    const Table1Fixture* fixture = nullptr; // defaults to the published table
    std::vector<CharVector> extra_witnesses;
};

InvariantReport classify(const BrieskornIndex& index, const ClassifyOptions& options = {});

// Report for the reversed orientation: d(-Y) = -d(Y), fillable data not carried over.
InvariantReport reverse(const InvariantReport& report);

std::string render_text(const InvariantReport& report);

struct Table1RowResult {
    Table1Expectation expected;
    InvariantReport computed;
    bool d3_ok = false;
    bool d_ok = false;
    bool fillable_ok = false;
    bool pass() const { return d3_ok && d_ok && fillable_ok; }
};

struct Table1Diff {
    std::vector<Table1RowResult> rows;
    std::size_t failures() const;
    bool all_pass() const { return failures() == 0; }
    std::string render() const;
};

Table1Diff reproduce_table1(std::int64_t k_max, const ClassifyOptions& options = {});

struct TwoFillableSearch {
    std::int64_t max_product = 0;
    std::vector<InvariantReport> found;      // fillable count exactly 2, e0 <= -2
    std::vector<BrieskornIndex> delegated;   // e0 = -1
    std::vector<std::string> exclusions;     // reasons n >= 5 is skipped
    std::size_t examined = 0;
};

// Every pairwise coprime index with 3 or 4 exponents and product <= max_product.
std::vector<BrieskornIndex> enumerate_indices(std::int64_t max_product, std::size_t min_size = 3,
                                              std::size_t max_size = 4);

TwoFillableSearch search_two_fillable(std::int64_t max_product, const ClassifyOptions& options = {});

} // namespace brieskorn
