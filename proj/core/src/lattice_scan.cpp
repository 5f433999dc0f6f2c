#include "lattice_scan.hpp"

#include "brieskorn/errors.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>

namespace brieskorn::detail {
namespace {

template <class Int>
Int narrow(const Integer& z);
template <>
std::int64_t narrow<std::int64_t>(const Integer& z) { return z.get_si(); }
template <>
Integer narrow<Integer>(const Integer& z) { return z; }

Integer widen(std::int64_t x) { return Integer(static_cast<long>(x)); }
const Integer& widen(const Integer& x) { return x; }

template <class Int>
struct Model {
    std::size_t n = 0;
    std::vector<Int> gram;               // |det Q| * Q^{-1}, row-major
    std::vector<std::int64_t> lo;        // smallest initial value per vertex
    std::vector<std::int64_t> radix;     // number of initial values per vertex
    std::vector<std::size_t> inner;      // Gray-code digits
    std::vector<std::size_t> outer;      // digits fixed per job
    std::uint64_t jobs = 1;
};

template <class Int>
Model<Int> build_model(const PlumbingGraph& g, unsigned threads) {
    const auto& inv = g.form().scaled_inverse();
    const int s = sgn(inv.scale);
    Model<Int> model;
    model.n = g.vertex_count();
    model.gram.reserve(model.n * model.n);
    for (std::size_t i = 0; i < model.n; ++i)
        for (std::size_t j = 0; j < model.n; ++j)
            model.gram.push_back(narrow<Int>(inv.scaled_inverse(i, j) * s));
    std::vector<std::size_t> digits;
    for (std::size_t v = 0; v < model.n; ++v) {
        const std::int64_t m = g.framing(v);
        model.lo.push_back(m + 2);
        model.radix.push_back(-m);
        if (-m >= 2) digits.push_back(v);
    }
    // Fix the trailing digits per job so workers can split the space.
    const std::uint64_t target = std::max<std::uint64_t>(16, 64ull * std::max(1u, threads));
    while (!digits.empty() && model.jobs < target) {
        const std::size_t v = digits.back();
        const auto r = static_cast<std::uint64_t>(model.radix[v]);
        if (model.jobs > std::numeric_limits<std::uint64_t>::max() / r) break;
        model.jobs *= r;
        model.outer.push_back(v);
        digits.pop_back();
    }
    model.inner = std::move(digits);
    return model;
}

/// True when every intermediate of the incremental score update fits in int64.
bool fits_int64(const PlumbingGraph& g) {
    const auto& inv = g.form().scaled_inverse();
    Integer sum = 0;
    for (std::size_t i = 0; i < inv.scaled_inverse.rows(); ++i)
        for (std::size_t j = 0; j < inv.scaled_inverse.cols(); ++j) sum += abs(inv.scaled_inverse(i, j));
    std::int64_t max_k = 1;
    for (auto m : g.framings()) max_k = std::max<std::int64_t>(max_k, m < 0 ? -m : m + 2);
    const Integer mk = widen(max_k);
    const Integer bound = 8 * mk * mk * sum + 8 * mk * sum;
    return bound < (Integer(1) << 62);
}

/// Visits every vector of one job. `visit(k, score)` returns false to stop the job.
template <class Int, class Visit>
void run_job(const Model<Int>& model, std::uint64_t job, Visit&& visit, const std::atomic<bool>& stop) {
    const std::size_t n = model.n;
    std::vector<std::int64_t> k(model.lo);
    std::uint64_t rest = job;
    for (auto v : model.outer) {
        const auto r = static_cast<std::uint64_t>(model.radix[v]);
        k[v] = model.lo[v] + 2 * static_cast<std::int64_t>(rest % r);
        rest /= r;
    }
    std::vector<Int> pk(n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (k[j] != 0) pk[i] += model.gram[i * n + j] * Int(k[j]);
    Int score(0);
    for (std::size_t i = 0; i < n; ++i) score += pk[i] * Int(k[i]);

    // Knuth's loopless reflected mixed-radix Gray code (TAOCP 7.2.1.1, Algorithm H).
    const std::size_t digits = model.inner.size();
    std::vector<std::int64_t> a(digits, 0);
    std::vector<std::int64_t> dir(digits, 1);
    std::vector<std::size_t> focus(digits + 1);
    std::iota(focus.begin(), focus.end(), std::size_t{0});

    if (!visit(std::span<const std::int64_t>(k), score)) return;
    std::uint64_t tick = 0;
    while (true) {
        const std::size_t j = focus[0];
        focus[0] = 0;
        if (j == digits) break;
        a[j] += dir[j];
        const std::size_t v = model.inner[j];
        const std::int64_t delta = 2 * dir[j];
        const Int* row = &model.gram[v * n];
        score += Int(2 * delta) * pk[v] + Int(delta * delta) * row[v];
        k[v] += delta;
        for (std::size_t i = 0; i < n; ++i) pk[i] += Int(delta) * row[i];
        if (a[j] == 0 || a[j] == model.radix[v] - 1) {
            dir[j] = -dir[j];
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
        if (!visit(std::span<const std::int64_t>(k), score)) return;
        if ((++tick & 0xFFF) == 0 && stop.load(std::memory_order_relaxed)) return;
    }
}

/// Largest value offered so far, optionally restricted to values below a ceiling.
template <class Int>
class MonotoneMax {
public:
    explicit MonotoneMax(std::optional<Int> ceiling) : ceiling_(std::move(ceiling)) {}

    void offer(const std::optional<Int>& candidate) {
        if (!candidate) return;
        std::lock_guard lock(mutex_);
        if (!best_ || *candidate > *best_) best_ = candidate;
    }
    std::optional<Int> get() const { return best_; }
    const std::optional<Int>& ceiling() const { return ceiling_; }

private:
    std::optional<Int> ceiling_;
    std::mutex mutex_;
    std::optional<Int> best_;
};

template <class Int>
std::optional<Int> max_score_below(const Model<Int>& model, const std::optional<Int>& ceiling, unsigned threads) {
    MonotoneMax<Int> cell(ceiling);
    std::atomic<bool> stop{false};
    parallel_jobs(model.jobs, threads, stop, [&](std::uint64_t job) {
        std::optional<Int> local;
        run_job(
            model, job,
            [&](std::span<const std::int64_t>, const Int& score) {
                if ((!ceiling || score < *ceiling) && (!local || score > *local)) local = score;
                return true;
            },
            stop);
        cell.offer(local);
    });
    return cell.get();
}

template <class Int>
struct LevelResult {
    std::optional<std::vector<std::int64_t>> good;
    std::optional<Int> next;
};

/// Walks the full path of every vector scoring exactly `level`; stops at the first
/// that ends correctly. Also reports the best score strictly below `level`.
template <class Int>
LevelResult<Int> check_level(const PlumbingGraph& g, const Model<Int>& model, const Int& level, unsigned threads) {
    MonotoneMax<Int> next(level);
    std::atomic<bool> stop{false};
    std::mutex found_mutex;
    std::optional<std::vector<std::int64_t>> found;
    parallel_jobs(model.jobs, threads, stop, [&](std::uint64_t job) {
        std::optional<Int> local;
        std::vector<std::int64_t> scratch(model.n);
        run_job(
            model, job,
            [&](std::span<const std::int64_t> k, const Int& score) {
                if (score < level) {
                    if (!local || score > *local) local = score;
                    return true;
                }
                if (score != level) return true;
                std::copy(k.begin(), k.end(), scratch.begin());
                std::size_t steps = 0;
                if (walk_full_path(g.framings(), g, scratch, steps, nullptr) == PathStatus::EndsCorrectly) {
                    std::lock_guard lock(found_mutex);
                    if (!found) found.emplace(k.begin(), k.end());
                    stop.store(true);
                    return false;
                }
                return true;
            },
            stop);
        next.offer(local);
    });
    return {std::move(found), next.get()};
}

template <class Int>
SearchResult search_with(const PlumbingGraph& g, unsigned threads) {
    const Model<Int> model = build_model<Int>(g, threads);
    const Integer abs_det = abs(g.form().scaled_inverse().scale);
    const Rational n(static_cast<long>(g.vertex_count()));
    std::optional<Int> level = max_score_below<Int>(model, std::nullopt, threads);
    std::size_t levels = 0;
    while (level) {
        ++levels;
        auto result = check_level<Int>(g, model, *level, threads);
        if (result.good) {
            SearchResult out{(Rational(widen(*level), abs_det) + n) / Rational(4), CharVector(std::move(*result.good)),
                             levels};
            return out;
        }
        level = result.next;
    }
    throw InternalError("no initial vector has a correctly ending full path");
}

template <class Int>
ScanStats scan_with(const PlumbingGraph& g, unsigned threads) {
    const Model<Int> model = build_model<Int>(g, threads);
    std::atomic<std::uint64_t> visited{0};
    MonotoneMax<Int> cell(std::nullopt);
    std::atomic<bool> stop{false};
    parallel_jobs(model.jobs, threads, stop, [&](std::uint64_t job) {
        std::uint64_t count = 0;
        std::optional<Int> local;
        run_job(
            model, job,
            [&](std::span<const std::int64_t>, const Int& score) {
                ++count;
                if (!local || score > *local) local = score;
                return true;
            },
            stop);
        visited += count;
        cell.offer(local);
    });
    ScanStats out;
    out.visited = visited.load();
    out.max_score = cell.get() ? widen(*cell.get()) : Integer(0);
    return out;
}

} // namespace

SearchResult descending_search(const PlumbingGraph& g, unsigned threads) {
    threads = resolve_threads(threads);
    if (fits_int64(g)) return search_with<std::int64_t>(g, threads);
    return search_with<Integer>(g, threads);
}

ScanStats scan_all(const PlumbingGraph& g, unsigned threads) {
    threads = resolve_threads(threads);
    if (fits_int64(g)) return scan_with<std::int64_t>(g, threads);
    return scan_with<Integer>(g, threads);
}

} // namespace brieskorn::detail
