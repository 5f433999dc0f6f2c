#pragma once

// Exhaustive enumeration of initial characteristic vectors.
//
// Every vertex v ranges over m(v)+2, m(v)+4, ..., -m(v). Vectors are visited in
// a reflected mixed-radix Gray order so that consecutive vectors differ by +-2
// in one coordinate, which lets the score K^T P K (P = |det Q| Q^{-1}) be
// updated in O(|G|) per vector instead of O(|G|^2).

#include "brieskorn/full_path.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace brieskorn::detail {

PathStatus walk_full_path(std::span<const std::int64_t> framings, const PlumbingGraph& g,
                          std::span<std::int64_t> k, std::size_t& steps, std::vector<std::size_t>* trace);

struct SearchResult {
    Rational grading;
    CharVector vector;
    std::size_t levels = 0;
};

/// Highest grading level containing an initial vector whose full path ends
/// correctly. Throws InternalError if no level does.
SearchResult descending_search(const PlumbingGraph& g, unsigned threads);

/// Visits every initial vector; exposed for the benchmark and tests.
/// Returns the number of vectors visited and the maximal score seen.
struct ScanStats {
    std::uint64_t visited = 0;
    Integer max_score;
};
ScanStats scan_all(const PlumbingGraph& g, unsigned threads);

} // namespace brieskorn::detail
