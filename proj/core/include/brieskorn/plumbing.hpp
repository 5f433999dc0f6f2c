#pragma once

#include "brieskorn/continued_fraction.hpp"
#include "brieskorn/matrix.hpp"
#include "brieskorn/seifert.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace brieskorn {

/// Symmetric integer intersection form of a plumbing, in canonical vertex order.
///
/// The scaled inverse is computed at most once and shared by every copy of
/// the form; concurrent readers are safe.
class IntersectionForm {
public:
    /// Throws DomainError if `q` is not square and symmetric.
    explicit IntersectionForm(IntegerMatrix q);

    const IntegerMatrix& matrix() const { return q_; }
    std::size_t size() const { return q_.rows(); }

    /// scale * Q^{-1} with integer entries (|scale| = |det Q|). Throws DomainError if singular.
    const ScaledInverse& scaled_inverse() const;
    /// Exact Q^{-1}. Throws DomainError if singular.
    const RationalMatrix& inverse() const;

    /// Cached is_negative_definite().
    bool negative_definite() const;

    /// k^T Q^{-1} k for an integer covector k.
    Rational inverse_square(std::span<const std::int64_t> k) const;

private:
    struct Cache;
    IntegerMatrix q_;
    std::shared_ptr<Cache> cache_;
};

/// Star-shaped plumbing tree: a central vertex and linear legs of framings <= -2.
///
/// Canonical ordering: the center is vertex 0, followed by each leg in order,
/// walked from the center outward.
class PlumbingGraph {
public:
    PlumbingGraph(std::int64_t center_framing, std::vector<FramingChain> legs);

    std::int64_t center_framing() const { return framings_.front(); }
    std::span<const FramingChain> legs() const { return legs_; }
    std::size_t vertex_count() const { return framings_.size(); }

    std::int64_t framing(std::size_t v) const { return framings_[v]; }
    std::span<const std::int64_t> framings() const { return framings_; }
    /// -1 for the center.
    std::ptrdiff_t parent(std::size_t v) const { return parent_[v]; }
    std::span<const std::size_t> neighbors(std::size_t v) const { return adjacency_[v]; }

    /// Lazily built once per graph and shared by copies.
    const IntersectionForm& form() const;

    /// One line per vertex: "index framing parent".
    std::string dump() const;

    friend bool operator==(const PlumbingGraph& a, const PlumbingGraph& b) {
        return a.framings_ == b.framings_ && a.legs_ == b.legs_;
    }

private:
    struct FormCache;
    std::vector<FramingChain> legs_;
    std::vector<std::int64_t> framings_;
    std::vector<std::ptrdiff_t> parent_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::shared_ptr<FormCache> form_cache_;
};

/// Center framing e0, leg i the negative continued fraction of ri.
PlumbingGraph standard_graph(const SeifertData& m);

IntersectionForm intersection_matrix(const PlumbingGraph& g);

/// All leading principal minors alternate in sign starting negative.
bool is_negative_definite(const IntersectionForm& q);

Integer determinant(const IntersectionForm& q);

/// Q^{-1}; the result is cached on the form. Throws DomainError if singular.
RationalMatrix exact_inverse(const IntersectionForm& q);

} // namespace brieskorn
