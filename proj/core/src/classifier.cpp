#include "brieskorn/classifier.hpp"

#include "brieskorn/contact.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/plumbing.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace brieskorn {

std::string to_string(Certification c) {
    switch (c) {
    case Certification::None: return "none";
    case Certification::Exhaustive: return "exhaustive";
    case Certification::WitnessVerified: return "witness-verified";
    case Certification::Cited: return "cited";
    }
    return "none";
}

std::string to_string(Source s) {
    switch (s) {
    case Source::Computed: return "computed";
    case Source::Cited: return "cited";
    case Source::NotApplicable: return "not-applicable";
    }
    return "not-applicable";
}

Certification parse_certification(std::string_view text) {
    for (auto c : {Certification::None, Certification::Exhaustive, Certification::WitnessVerified, Certification::Cited})
        if (to_string(c) == text) return c;
    throw DomainError("unknown certification '" + std::string(text) + "'");
}

Source parse_source(std::string_view text) {
    for (auto s : {Source::Computed, Source::Cited, Source::NotApplicable})
        if (to_string(s) == text) return s;
    throw DomainError("unknown source '" + std::string(text) + "'");
}

std::string InvariantReport::manifold() const { return (reversed ? "-" : "") + index.to_string(); }

namespace {

InvariantReport classify_impl(const BrieskornIndex& index, const ClassifyOptions& options) {
    const Table1Fixture& fixture = options.fixture ? *options.fixture : Table1Fixture::published();
    const auto expected = fixture.lookup(index);

    const SeifertData seifert = from_brieskorn(index);
    const PlumbingGraph g = standard_graph(seifert);
    InvariantReport r{index, false, seifert, euler_number(seifert), h1_order(seifert), g.form().negative_definite()};

    if (seifert.e0() <= -2) {
        r.fillable_count = fillable_count(g);
        r.fillable_source = Source::Computed;
    } else if (expected && expected->e0_minus_one) {
        r.fillable_count = Integer(expected->fillable_count);
        r.fillable_source = Source::Cited;
        r.notes.push_back("fillable count cited from the published table (e0 = -1)");
    } else {
        r.notes.push_back(kDelegatedFlag);
    }

    std::vector<CharVector> witnesses = options.extra_witnesses;
    try {
        const CharVector can = canonical_vector(g);
        r.d3 = d3(g, can);
        r.d3_source = Source::Computed;
        witnesses.push_back(can);
    } catch (const NotApplicable& e) {
        if (expected && expected->e0_minus_one) {
            r.d3 = expected->d3;
            r.d3_source = Source::Cited;
            r.notes.push_back("d3 cited from the published table (e0 = -1)");
        } else {
            r.notes.push_back(std::string("d3: ") + e.flag());
        }
    }

    if (expected) {
        for (const auto& w : expected->witnesses) {
            const CharVector k = w.canonical(g);
            const auto check = verify_vector(g, k);
            const bool ok = check.path.status == PathStatus::EndsCorrectly;
            r.notes.push_back("witness " + w.name + (ok ? " ends correctly" : " fails") + ", grading " +
                              check.graded.grading.to_string());
            witnesses.push_back(k);
        }
    }

    const auto ct = correction_term(g, options.budget, witnesses, options.threads);
    if (ct.status == CorrectionTerm::Status::Exact) {
        r.d = ct.value;
        r.d_certification = Certification::Exhaustive;
        r.notes.push_back("d: exhaustive over " + to_string(ct.initial_vector_count) + " initial vectors");
    } else if (ct.value) {
        r.d = ct.value;
        r.d_certification = Certification::WitnessVerified;
        r.notes.push_back("d: lower bound " + ct.value->to_string() + " from witness " + ct.witness->to_string() +
                          "; " + to_string(ct.initial_vector_count) + " initial vectors exceed budget " +
                          to_string(options.budget));
    } else if (expected) {
        r.d = expected->d;
        r.d_certification = Certification::Cited;
        r.notes.push_back("d cited from the published table; no witness ends correctly within budget");
    } else {
        r.notes.push_back("d: undetermined, " + to_string(ct.initial_vector_count) + " initial vectors exceed budget");
    }
    return r;
}

} // namespace

InvariantReport classify(const BrieskornIndex& index, const ClassifyOptions& options) {
    try {
        return classify_impl(index, options);
    } catch (const DomainError& e) {
        throw DomainError(index.to_string() + ": " + e.what());
    }
}

InvariantReport reverse(const InvariantReport& report) {
    InvariantReport out = report;
    out.reversed = !report.reversed;
    out.seifert = reverse_orientation(report.seifert);
    out.euler = euler_number(out.seifert);
    out.negative_definite = false;
    out.fillable_count.reset();
    out.fillable_source = Source::NotApplicable;
    out.d3.reset();
    out.d3_source = Source::NotApplicable;
    if (report.d) out.d = Rational(0) - *report.d;
    out.notes.clear();
    out.notes.push_back("d(-Y) = -d(Y) for an integer homology sphere");
    return out;
}

std::string render_text(const InvariantReport& r) {
    std::ostringstream os;
    os << "manifold           " << r.manifold() << '\n'
       << "seifert            " << r.seifert.to_string() << '\n'
       << "euler              " << r.euler.to_string() << '\n'
       << "h1                 " << to_string(r.h1) << '\n'
       << "negative definite  " << (r.negative_definite ? "yes" : "no") << '\n'
       << "fillable count     " << (r.fillable_count ? to_string(*r.fillable_count) : "-") << " ("
       << to_string(r.fillable_source) << ")\n"
       << "d3(xi_can)         " << (r.d3 ? r.d3->to_string() : "-") << " (" << to_string(r.d3_source) << ")\n"
       << "d                  " << (r.d ? r.d->to_string() : "-") << " (" << to_string(r.d_certification) << ")\n";
    for (const auto& n : r.notes) os << "note               " << n << '\n';
    return os.str();
}

std::size_t Table1Diff::failures() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.pass(); }));
}

std::string Table1Diff::render() const {
    std::ostringstream os;
    for (const auto& row : rows) {
        const auto& c = row.computed;
        os << (row.pass() ? "PASS " : "FAIL ") << row.expected.index.to_string() << "  d3 "
           << (c.d3 ? c.d3->to_string() : "-") << " (" << to_string(c.d3_source) << ", expected "
           << row.expected.d3.to_string() << ")  d " << (c.d ? c.d->to_string() : "-") << " ("
           << to_string(c.d_certification) << ", expected " << row.expected.d.to_string() << ")  fillable "
           << (c.fillable_count ? to_string(*c.fillable_count) : "-") << '\n';
    }
    os << (all_pass() ? "PASS" : "FAIL") << ": " << rows.size() - failures() << "/" << rows.size() << " rows\n";
    return os.str();
}

namespace {

template <class T, class F>
std::vector<T> map_parallel(std::size_t count, unsigned threads, F&& f) {
    std::vector<std::optional<T>> slots(count);
    detail::parallel_jobs(count, threads, [&](std::uint64_t i) { slots[i] = f(static_cast<std::size_t>(i)); });
    std::vector<T> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

ClassifyOptions inner_options(const ClassifyOptions& options, unsigned outer) {
    ClassifyOptions inner = options;
    if (outer > 1) inner.threads = 1;
    return inner;
}

} // namespace

Table1Diff reproduce_table1(std::int64_t k_max, const ClassifyOptions& options) {
    const Table1Fixture& fixture = options.fixture ? *options.fixture : Table1Fixture::published();
    const auto expected = fixture.instantiate(k_max);
    const unsigned outer = detail::resolve_threads(options.threads);
    const ClassifyOptions inner = inner_options(options, outer);
    Table1Diff diff;
    diff.rows = map_parallel<Table1RowResult>(expected.size(), outer, [&](std::size_t i) {
        const auto& e = expected[i];
        Table1RowResult row{e, classify(e.index, inner)};
        row.d3_ok = row.computed.d3 && *row.computed.d3 == e.d3;
        row.d_ok = row.computed.d && *row.computed.d == e.d;
        row.fillable_ok = row.computed.fillable_count && *row.computed.fillable_count == e.fillable_count;
        return row;
    });
    return diff;
}

std::vector<BrieskornIndex> enumerate_indices(std::int64_t max_product, std::size_t min_size, std::size_t max_size) {
    if (min_size < 3 || max_size < min_size) throw DomainError("enumerate_indices: need 3 <= min_size <= max_size");
    std::vector<BrieskornIndex> out;
    std::vector<std::int64_t> current;
    auto extend = [&](auto&& self, std::int64_t from, std::int64_t product) -> void {
        if (current.size() >= min_size) out.emplace_back(current);
        if (current.size() == max_size) return;
        for (std::int64_t a = from; product * a <= max_product; ++a) {
            if (std::any_of(current.begin(), current.end(), [&](std::int64_t x) { return std::gcd(x, a) != 1; }))
                continue;
            current.push_back(a);
            self(self, a + 1, product * a);
            current.pop_back();
        }
    };
    extend(extend, 2, 1);
    std::sort(out.begin(), out.end());
    return out;
}

TwoFillableSearch search_two_fillable(std::int64_t max_product, const ClassifyOptions& options) {
    if (max_product < 1) throw DomainError("max_product must be positive");
    TwoFillableSearch out;
    out.max_product = max_product;

    // Five or more legs are ruled out analytically, not by enumeration.
    Rational five(0);
    for (long p : {2, 3, 5, 7, 11}) five = five + Rational(1, p);
    five = five - Rational(2);
    out.exclusions.push_back("n >= 6 with e0 = -3: e(Y) >= -3 + 6/2 = 0, so Y is not negative definite");
    out.exclusions.push_back("n = 5 with e0 = -3: the reversed Euler number is at most " + five.to_string() +
                             " < 0, but it must be positive");

    const auto indices = enumerate_indices(max_product);
    out.examined = indices.size();
    std::vector<BrieskornIndex> candidates;
    for (const auto& idx : indices) {
        const SeifertData m = from_brieskorn(idx);
        if (m.e0() == -1) {
            out.delegated.push_back(idx);
            continue;
        }
        if (fillable_count(standard_graph(m)) == 2) candidates.push_back(idx);
    }
    const unsigned outer = detail::resolve_threads(options.threads);
    const ClassifyOptions inner = inner_options(options, outer);
    out.found = map_parallel<InvariantReport>(candidates.size(), outer,
                                              [&](std::size_t i) { return classify(candidates[i], inner); });
    return out;
}

} // namespace brieskorn
