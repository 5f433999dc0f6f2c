#include "brieskorn/full_path.hpp"

#include "brieskorn/errors.hpp"
#include "lattice_scan.hpp"

#include <algorithm>

namespace brieskorn {

namespace detail {

PathStatus walk_full_path(std::span<const std::int64_t> framings, const PlumbingGraph& g,
                          std::span<std::int64_t> k, std::size_t& steps, std::vector<std::size_t>* trace) {
    const std::size_t n = framings.size();
    std::int64_t max_abs = 1;
    for (auto m : framings) max_abs = std::max<std::int64_t>(max_abs, m < 0 ? -m : m);
    const std::size_t limit = 4 * n * static_cast<std::size_t>(max_abs) * n;
    steps = 0;
    while (true) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            const std::int64_t top = -framings[v];
            if (k[v] > top) return PathStatus::Fails;
            if (k[v] == top && pick == n) pick = v;
        }
        if (pick == n) {
            for (std::size_t v = 0; v < n; ++v) {
                if (k[v] < framings[v]) return PathStatus::Fails;
            }
            return PathStatus::EndsCorrectly;
        }
        k[pick] += 2 * framings[pick];
        for (auto w : g.neighbors(pick)) k[w] += 2;
        if (trace) trace->push_back(pick);
        if (++steps > limit) {
            throw InternalError("full path exceeded its step bound " + std::to_string(limit));
        }
    }
}

} // namespace detail

namespace {

void require_characteristic(const PlumbingGraph& g, const CharVector& k) {
    if (!is_characteristic(g, k)) {
        throw DomainError("vector " + k.to_string() + " is not characteristic on a graph with " +
                          std::to_string(g.vertex_count()) + " vertices");
    }
}

void require_negative_definite(const PlumbingGraph& g) {
    if (!g.form().negative_definite()) {
        throw DomainError("full path algorithm needs a negative-definite plumbing");
    }
}

} // namespace

bool is_initial(const PlumbingGraph& g, const CharVector& k) {
    if (!is_characteristic(g, k)) return false;
    for (std::size_t v = 0; v < k.size(); ++v) {
        const std::int64_t m = g.framing(v);
        if (k[v] < m + 2 || k[v] > -m) return false;
    }
    return true;
}

PathOutcome full_path(const PlumbingGraph& g, const CharVector& k) {
    require_characteristic(g, k);
    require_negative_definite(g);
    std::vector<std::int64_t> values(k.values().begin(), k.values().end());
    PathOutcome out;
    out.status = detail::walk_full_path(g.framings(), g, values, out.steps, &out.reflections);
    out.final_vector = CharVector(std::move(values));
    return out;
}

Rational maslov_grading(const PlumbingGraph& g, const CharVector& k) {
    require_characteristic(g, k);
    return (g.form().inverse_square(k.values()) + Rational(static_cast<long>(g.vertex_count()))) / Rational(4);
}

VectorVerification verify_vector(const PlumbingGraph& g, const CharVector& k) {
    VectorVerification out;
    out.path = full_path(g, k);
    out.graded = GradedVector{k, maslov_grading(g, k)};
    return out;
}

Integer initial_vector_count(const PlumbingGraph& g) {
    Integer count = 1;
    for (auto m : g.framings()) {
        if (m >= 0) return 0;
        count *= static_cast<long>(-m);
    }
    return count;
}

CorrectionTerm correction_term(const PlumbingGraph& g, const Integer& budget, std::span<const CharVector> witnesses,
                               unsigned threads) {
    require_negative_definite(g);
    CorrectionTerm out;
    out.initial_vector_count = initial_vector_count(g);

    std::optional<Rational> best_witness;
    std::optional<CharVector> best_vector;
    for (const auto& w : witnesses) {
        const auto check = verify_vector(g, w);
        if (check.path.status != PathStatus::EndsCorrectly) continue;
        if (!best_witness || check.graded.grading > *best_witness) {
            best_witness = check.graded.grading;
            best_vector = w;
        }
    }

    if (out.initial_vector_count > budget) {
        out.status = CorrectionTerm::Status::BudgetExceeded;
        out.value = best_witness;
        out.witness = best_vector;
        return out;
    }

    const auto result = detail::descending_search(g, threads);
    out.status = CorrectionTerm::Status::Exact;
    out.value = result.grading;
    out.witness = result.vector;
    out.levels_examined = result.levels;
    if (best_witness && *best_witness > result.grading) {
        throw InternalError("witness grading " + best_witness->to_string() + " exceeds exhaustive maximum " +
                            result.grading.to_string());
    }
    return out;
}

} // namespace brieskorn
