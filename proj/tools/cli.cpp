#include "cli.hpp"

#include "brieskorn/classifier.hpp"
#include "brieskorn/contact.hpp"
#include "brieskorn/diophantine.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/full_path.hpp"
#include "brieskorn/plumbing.hpp"
#include "brieskorn/report_json.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace brieskorn::cli {
namespace {

struct Input {
    std::vector<std::int64_t> exponents;
    std::string seifert;

    void attach(CLI::App* cmd, bool allow_seifert) {
        cmd->add_option("exponents", exponents, "Brieskorn exponents, any order");
        if (allow_seifert) cmd->add_option("--seifert", seifert, "Seifert data such as \"M(-2; 1/2, 2/3, 4/5)\"");
    }

    BrieskornIndex index() const {
        if (exponents.empty()) throw DomainError("no exponents given");
        return BrieskornIndex(exponents);
    }

    SeifertData data() const {
        if (!seifert.empty()) {
            if (!exponents.empty()) throw DomainError("give either exponents or --seifert, not both");
            return SeifertData::parse(seifert);
        }
        return from_brieskorn(index());
    }

    std::string label() const { return seifert.empty() ? index().to_string() : data().to_string(); }
};

Integer parse_budget(const std::string& text) {
    const Integer b = parse_integer(text);
    if (b < 0) throw DomainError("budget must be non-negative");
    return b;
}

std::vector<std::vector<std::int64_t>> read_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    std::vector<std::vector<std::int64_t>> rows;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::vector<std::int64_t> row;
        std::string tok;
        while (is >> tok) {
            try {
                std::size_t used = 0;
                row.push_back(std::stoll(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw DomainError(path + ": bad integer '" + tok + "'");
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

// Either a full vertex permutation or, prefixed by "legs", a leg order.
std::vector<std::size_t> read_ordering(const std::string& path, const PlumbingGraph& g) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::string first;
        if (!(is >> first)) continue;
        std::vector<std::size_t> values;
        const bool legs = first == "legs";
        if (!legs) is.str(line), is.clear();
        long long x;
        while (is >> x) {
            if (x < 0) throw DomainError(path + ": negative index in ordering");
            values.push_back(static_cast<std::size_t>(x));
        }
        if (!is.eof()) throw DomainError(path + ": bad ordering line");
        return legs ? leg_order_map(g, values) : values;
    }
    throw DomainError(path + ": no ordering found");
}

int cmd_info(const Input& in, bool json, bool reversed, const std::string& budget, const std::string& cache_path,
             std::ostream& out) {
    const auto idx = in.index();
    std::optional<ReportCache> cache;
    if (!cache_path.empty()) cache.emplace(cache_path);
    std::optional<InvariantReport> report;
    if (cache) report = cache->find(idx);
    if (!report) {
        ClassifyOptions opts;
        opts.budget = parse_budget(budget);
        report = classify(idx, opts);
        if (cache) cache->store(*report);
    }
    const InvariantReport shown = reversed ? reverse(*report) : *report;
    out << (json ? to_json(shown) + "\n" : render_text(shown));
    return kOk;
}

int cmd_d3(const Input& in, std::ostream& out) {
    const PlumbingGraph g = standard_graph(in.data());
    const CharVector can = canonical_vector(g);
    out << in.label() << "  d3(xi_can) = " << d3(g, can).to_string() << '\n';
    return kOk;
}

int cmd_count(const Input& in, std::ostream& out) {
    const PlumbingGraph g = standard_graph(in.data());
    out << in.label() << "  vertices " << g.vertex_count() << "  initial vectors "
        << to_string(initial_vector_count(g)) << '\n';
    try {
        out << "fillable count " << to_string(fillable_count(g)) << '\n';
    } catch (const NotApplicable& e) {
        out << "fillable count not applicable: " << e.flag() << '\n';
    }
    return kOk;
}

int cmd_graph(const Input& in, std::ostream& out) {
    out << standard_graph(in.data()).dump();
    return kOk;
}

int cmd_dinv(const Input& in, const std::string& budget, const std::string& verify, const std::string& ordering,
             const std::string& expect, unsigned threads, std::ostream& out) {
    const PlumbingGraph g = standard_graph(in.data());
    const std::optional<Rational> expected = expect.empty() ? std::nullopt : std::optional(Rational::parse(expect));
    if (!verify.empty()) {
        std::optional<std::vector<std::size_t>> perm;
        if (!ordering.empty()) perm = read_ordering(ordering, g);
        bool ok = true;
        for (const auto& row : read_rows(verify)) {
            const CharVector k = perm ? apply_ordering(row, *perm) : CharVector(row);
            const auto check = verify_vector(g, k);
            const bool ends = check.path.status == PathStatus::EndsCorrectly;
            const bool match = !expected || check.graded.grading == *expected;
            ok = ok && ends && match;
            out << k.to_string() << "  grading " << check.graded.grading.to_string() << "  "
                << (ends ? "ends correctly" : "fails") << " after " << check.path.steps << " steps"
                << (match ? "" : "  MISMATCH") << '\n';
        }
        return ok ? kOk : kMismatch;
    }
    std::vector<CharVector> witnesses;
    try {
        witnesses.push_back(canonical_vector(g));
    } catch (const NotApplicable&) {
    }
    const auto ct = correction_term(g, parse_budget(budget), witnesses, threads);
    out << in.label() << "  initial vectors " << to_string(ct.initial_vector_count) << '\n';
    if (!ct.value) {
        out << "d undetermined: over budget and no witness ends correctly\n";
        return expected ? kMismatch : kOk;
    }
    const bool exact = ct.status == CorrectionTerm::Status::Exact;
    out << "d " << (exact ? "= " : ">= ") << ct.value->to_string() << " ("
        << (exact ? "exhaustive" : "witness-verified") << ")  witness " << ct.witness->to_string() << '\n';
    return expected && *expected != *ct.value ? kMismatch : kOk;
}

int cmd_search(std::int64_t max_product, const std::string& budget, std::ostream& out) {
    ClassifyOptions opts;
    opts.budget = parse_budget(budget);
    const auto result = search_two_fillable(max_product, opts);
    out << "# " << result.examined << " indices with 3 or 4 exponents and product <= " << max_product << '\n';
    for (const auto& e : result.exclusions) out << "# excluded " << e << '\n';
    out << "manifold\td3\td\tcertification\n";
    for (const auto& r : result.found)
        out << r.index.to_string() << '\t' << (r.d3 ? r.d3->to_string() : "-") << '\t'
            << (r.d ? r.d->to_string() : "-") << '\t' << to_string(r.d_certification) << '\n';
    out << "# " << result.found.size() << " with exactly two fillable structures; " << result.delegated.size()
        << " with e0 = -1 delegated\n";
    return kOk;
}

int cmd_table1(std::int64_t k_max, const std::string& budget, std::ostream& out) {
    ClassifyOptions opts;
    opts.budget = parse_budget(budget);
    const auto diff = reproduce_table1(k_max, opts);
    out << diff.render();
    return diff.all_pass() ? kOk : kMismatch;
}

int cmd_dioph(const std::string& which, std::optional<std::int64_t> bound, std::int64_t a_bound, bool oracle,
              std::ostream& out) {
    if (which == "quadruples") {
        const auto found = quadruples_unit();
        out << render_tsv(found);
        if (oracle) {
            const auto check = quadruples_unit_oracle(bound.value_or(100));
            const bool agree = check == found;
            out << "# oracle (bound " << bound.value_or(100) << ") " << (agree ? "agrees" : "DISAGREES") << ": "
                << check.size() << " rows\n";
            if (!agree) return kMismatch;
        }
        return kOk;
    }
    if (which == "prop-new") {
        const auto report = prop_new_check(bound.value_or(200));
        out << render_tsv(report.solutions);
        out << "# scanned " << report.triples_scanned << " triples up to " << report.bound << "; "
            << report.solutions.size() << " solutions; " << report.reduction_checks << " a = 2 reductions checked\n";
        return kOk;
    }
    if (which == "triples") {
        const std::int64_t v_bound = bound.value_or(25);
        const auto sol = admissible_triples(v_bound);
        out << render_tsv(sol);
        for (const auto& d : sol.audit)
            out << "# dropped u=" << d.u << " a=" << d.a << " t=" << d.t << ": " << d.reason << '\n';
        out << "# property 4\n" << render_tsv(property4_filter(sol.all()));
        if (oracle) {
            const auto check = admissible_triples_oracle(a_bound, v_bound);
            std::vector<AdmissibleTriple> in_range;
            for (const auto& t : sol.all())
                if (t.u <= a_bound && t.v <= v_bound && t.b <= a_bound * v_bound) in_range.push_back(t);
            const bool agree = check == in_range;
            out << "# oracle (a <= " << a_bound << ", v <= " << v_bound << ") " << (agree ? "agrees" : "DISAGREES")
                << ": " << check.size() << " rows\n";
            if (!agree) return kMismatch;
        }
        return kOk;
    }
    throw DomainError("unknown dioph problem '" + which + "'");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of Brieskorn homology spheres and their plumbing graphs", "brieskorn"};
    app.require_subcommand(1);

    Input input;
    bool json = false, reversed = false, oracle = false;
    std::string budget = to_string(kDefaultBudget), cache, verify, ordering, expect;
    std::string search_budget = "100000";
    std::int64_t max_product = 1000, k_max = 5, a_bound = 20;
    std::optional<std::int64_t> bound;
    unsigned threads = 0;
    std::string problem;

    auto* info = app.add_subcommand("info", "all invariants of a Brieskorn sphere");
    input.attach(info, false);
    info->add_flag("--json", json, "print JSON");
    info->add_flag("--reverse", reversed, "report the reversed orientation");
    info->add_option("--budget", budget, "initial-vector budget for the exhaustive d search");
    info->add_option("--cache", cache, "JSON-lines report cache");

    auto* d3cmd = app.add_subcommand("d3", "d3 of the canonical contact structure");
    input.attach(d3cmd, true);

    auto* dinv = app.add_subcommand("dinv", "correction term d");
    input.attach(dinv, true);
    dinv->add_option("--budget", budget, "initial-vector budget");
    dinv->add_option("--verify", verify, "file of vectors to verify, one per line");
    dinv->add_option("--ordering", ordering, "coordinate ordering for --verify vectors");
    dinv->add_option("--expect", expect, "expected value; exit 2 on mismatch");
    dinv->add_option("--threads", threads, "worker threads (0 = all cores)");

    auto* count = app.add_subcommand("count", "fillable count and initial vector count");
    input.attach(count, true);

    auto* graph = app.add_subcommand("graph", "dump the standard plumbing graph");
    input.attach(graph, true);

    auto* search = app.add_subcommand("search", "Brieskorn spheres with exactly two fillable structures");
    search->add_option("--max-product", max_product, "bound on the product of exponents");
    search->add_option("--budget", search_budget, "initial-vector budget per manifold");

    auto* table = app.add_subcommand("table1", "reproduce the two-fillable table");
    table->add_option("--kmax", k_max, "largest family parameter");
    table->add_option("--budget", budget, "initial-vector budget per manifold");

    auto* dioph = app.add_subcommand("dioph", "the Diophantine enumerations");
    dioph->add_option("problem", problem, "quadruples, prop-new or triples")
        ->required()
        ->check(CLI::IsMember({"quadruples", "prop-new", "triples"}));
    dioph->add_option("--bound", bound, "scan bound (v bound for triples)");
    dioph->add_option("--a-bound", a_bound, "a and u bound for the triples oracle");
    dioph->add_flag("--oracle", oracle, "cross-check against a direct scan");

    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    try {
        app.parse(reversed_args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        const int code = app.exit(e, os, os);
        err << os.str();
        return code == 0 ? kOk : kDomainError;
    }

    try {
        if (*info) return cmd_info(input, json, reversed, budget, cache, out);
        if (*d3cmd) return cmd_d3(input, out);
        if (*dinv) return cmd_dinv(input, budget, verify, ordering, expect, threads, out);
        if (*count) return cmd_count(input, out);
        if (*graph) return cmd_graph(input, out);
        if (*search) return cmd_search(max_product, search_budget, out);
        if (*table) return cmd_table1(k_max, budget, out);
        if (*dioph) return cmd_dioph(problem, bound, a_bound, oracle, out);
    } catch (const NotApplicable& e) {
        err << "not applicable: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kDomainError;
    }
    return kOk;
}

} // namespace brieskorn::cli
