#pragma once

#include "brieskorn/contact.hpp"
#include "brieskorn/plumbing.hpp"
#include "brieskorn/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace brieskorn {

enum class PathStatus { EndsCorrectly, Fails };

struct PathOutcome {
    PathStatus status = PathStatus::Fails;
    std::size_t steps = 0;
    CharVector final_vector;
    /// Vertex reflected at each step, in order.
    std::vector<std::size_t> reflections;
};

struct GradedVector {
    CharVector vector;
    Rational grading;
};

/// m(v) + 2 <= K(v) <= -m(v) at every vertex, with characteristic parity.
bool is_initial(const PlumbingGraph& g, const CharVector& k);

/// Walks the full path of k: while some vertex has K(v) = -m(v), reflect at the
/// lowest such vertex (K += 2 PD[v]). Ends correctly once every value lies in
/// [m(v), -m(v) - 2]; fails as soon as a value exceeds -m(v) or a value below
/// m(v) is left with nothing to reflect.
/// Throws DomainError if g is not negative definite or k is not characteristic.
PathOutcome full_path(const PlumbingGraph& g, const CharVector& k);

/// (K^T Q^{-1} K + |G|) / 4.
Rational maslov_grading(const PlumbingGraph& g, const CharVector& k);

struct VectorVerification {
    GradedVector graded;
    PathOutcome path;
};

/// Grading and full-path outcome for an explicitly supplied vector.
VectorVerification verify_vector(const PlumbingGraph& g, const CharVector& k);

/// prod over vertices of the number of initial values, max(0, |m(v)|).
Integer initial_vector_count(const PlumbingGraph& g);

struct CorrectionTerm {
    enum class Status { Exact, BudgetExceeded };

    Status status = Status::BudgetExceeded;
    /// Exact: the correction term. BudgetExceeded: best grading among supplied
    /// witnesses whose full path ends correctly, if any.
    std::optional<Rational> value;
    /// Initial vector realizing `value`.
    std::optional<CharVector> witness;
    Integer initial_vector_count;
    /// Distinct grading levels tested before a correctly ending vector appeared.
    std::size_t levels_examined = 0;
};

inline const Integer kDefaultBudget = Integer(10'000'000);

/// Correction term of the boundary of a negative-definite star plumbing:
/// scans initial vectors in descending grading and returns the grading of the
/// first one whose full path ends correctly. When the number of initial
/// vectors exceeds `budget` nothing is enumerated and only `witnesses` are checked.
/// `threads` = 0 uses the hardware concurrency.
CorrectionTerm correction_term(const PlumbingGraph& g, const Integer& budget = kDefaultBudget,
                               std::span<const CharVector> witnesses = {}, unsigned threads = 0);

} // namespace brieskorn
