#pragma once

// Independent reference implementations. They share no code with the library
// beyond its value types and use plain mpq_class arithmetic throughout.

#include "brieskorn/plumbing.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<mpq_class>>;

Dense to_dense(const brieskorn::IntegerMatrix& m);
Dense to_dense(const std::vector<std::vector<long>>& m);

mpq_class gauss_determinant(Dense a);
mpz_class laplace_determinant(const std::vector<std::vector<long>>& a);
// Gauss-Jordan inverse; nullopt if singular.
std::optional<Dense> gauss_inverse(Dense a);

// Star-graph intersection matrix built from scratch.
std::vector<std::vector<long>> star_matrix(long center, const std::vector<std::vector<long>>& legs);

// -1/r for the chain m1 - 1/(m2 - ...), evaluated head first.
mpq_class chain_value(const std::vector<long>& chain);

mpq_class square(const Dense& inverse, const std::vector<long>& k);

enum class Outcome { Ends, Fails };

// Lowest-index reflection walk.
Outcome walk(const std::vector<std::vector<long>>& q, std::vector<long> k);
// Every outcome reachable over all choices of reflected vertex.
std::set<Outcome> all_outcomes(const std::vector<std::vector<long>>& q, const std::vector<long>& k);

// Max grading over initial vectors whose lowest-index walk ends correctly.
std::optional<mpq_class> naive_d(const std::vector<std::vector<long>>& q);

// Iterates every initial characteristic vector.
template <class F>
void for_each_initial(const std::vector<long>& framings, F&& f) {
    const std::size_t n = framings.size();
    std::vector<long> k(n);
    for (std::size_t v = 0; v < n; ++v) k[v] = framings[v] + 2;
    while (true) {
        f(k);
        std::size_t v = 0;
        while (v < n && k[v] + 2 > -framings[v]) {
            k[v] = framings[v] + 2;
            ++v;
        }
        if (v == n) return;
        k[v] += 2;
    }
}

struct RandomStar {
    long center;
    std::vector<std::vector<long>> legs;
};

RandomStar random_star(std::mt19937_64& rng, std::size_t max_vertices, long lo, long hi);

} // namespace oracle
