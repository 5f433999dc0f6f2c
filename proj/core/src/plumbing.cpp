#include "brieskorn/plumbing.hpp"

#include "brieskorn/errors.hpp"

#include <exception>
#include <mutex>
#include <optional>
#include <sstream>

namespace brieskorn {

struct IntersectionForm::Cache {
    std::once_flag inverse_once;
    ScaledInverse scaled;
    std::exception_ptr inverse_error;
    std::once_flag rational_once;
    RationalMatrix rational;
    std::once_flag definite_once;
    bool definite = false;
};

IntersectionForm::IntersectionForm(IntegerMatrix q) : q_(std::move(q)), cache_(std::make_shared<Cache>()) {
    if (q_.rows() != q_.cols()) throw DomainError("intersection form must be square");
    for (std::size_t i = 0; i < q_.rows(); ++i)
        for (std::size_t j = i + 1; j < q_.cols(); ++j)
            if (q_(i, j) != q_(j, i)) throw DomainError("intersection form must be symmetric");
}

const ScaledInverse& IntersectionForm::scaled_inverse() const {
    std::call_once(cache_->inverse_once, [this] {
        try {
            cache_->scaled = bareiss_inverse(q_);
        } catch (...) {
            cache_->inverse_error = std::current_exception();
        }
    });
    if (cache_->inverse_error) std::rethrow_exception(cache_->inverse_error);
    return cache_->scaled;
}

const RationalMatrix& IntersectionForm::inverse() const {
    const ScaledInverse& s = scaled_inverse();
    std::call_once(cache_->rational_once, [this, &s] {
        const std::size_t n = size();
        RationalMatrix inv(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) inv(i, j) = Rational(s.scaled_inverse(i, j), s.scale);
        cache_->rational = std::move(inv);
    });
    return cache_->rational;
}

bool IntersectionForm::negative_definite() const {
    std::call_once(cache_->definite_once, [this] { cache_->definite = is_negative_definite(*this); });
    return cache_->definite;
}

Rational IntersectionForm::inverse_square(std::span<const std::int64_t> k) const {
    if (k.size() != size()) throw DomainError("covector length does not match the form");
    const ScaledInverse& s = scaled_inverse();
    Integer acc = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] == 0) continue;
        Integer row = 0;
        for (std::size_t j = 0; j < k.size(); ++j) {
            if (k[j] != 0) row += s.scaled_inverse(i, j) * static_cast<long>(k[j]);
        }
        acc += row * static_cast<long>(k[i]);
    }
    return Rational(acc, s.scale);
}

struct PlumbingGraph::FormCache {
    std::once_flag once;
    std::optional<IntersectionForm> form;
};

PlumbingGraph::PlumbingGraph(std::int64_t center_framing, std::vector<FramingChain> legs)
    : legs_(std::move(legs)), form_cache_(std::make_shared<FormCache>()) {
    framings_.push_back(center_framing);
    parent_.push_back(-1);
    adjacency_.emplace_back();
    for (const auto& leg : legs_) {
        std::size_t prev = 0;
        for (std::size_t j = 0; j < leg.size(); ++j) {
            const std::size_t v = framings_.size();
            framings_.push_back(leg[j]);
            parent_.push_back(static_cast<std::ptrdiff_t>(prev));
            adjacency_.emplace_back();
            adjacency_[prev].push_back(v);
            adjacency_[v].push_back(prev);
            prev = v;
        }
    }
}

const IntersectionForm& PlumbingGraph::form() const {
    std::call_once(form_cache_->once, [this] {
        const std::size_t n = vertex_count();
        IntegerMatrix q(n, n);
        for (std::size_t v = 0; v < n; ++v) {
            q(v, v) = static_cast<long>(framings_[v]);
            for (auto w : adjacency_[v]) q(v, w) = 1;
        }
        form_cache_->form.emplace(std::move(q));
    });
    return *form_cache_->form;
}

std::string PlumbingGraph::dump() const {
    std::ostringstream os;
    for (std::size_t v = 0; v < vertex_count(); ++v) {
        os << v << ' ' << framings_[v] << ' ' << parent_[v] << '\n';
    }
    return os.str();
}

PlumbingGraph standard_graph(const SeifertData& m) {
    std::vector<FramingChain> legs;
    for (const auto& r : m.multipliers()) legs.push_back(neg_continued_fraction(r));
    return PlumbingGraph(m.e0(), std::move(legs));
}

IntersectionForm intersection_matrix(const PlumbingGraph& g) { return g.form(); }

bool is_negative_definite(const IntersectionForm& q) {
    const auto minors = leading_principal_minors(q.matrix());
    if (minors.size() != q.size()) return false;
    for (std::size_t k = 0; k < minors.size(); ++k) {
        // D_{k+1} must have sign (-1)^{k+1}.
        const int expected = (k % 2 == 0) ? -1 : 1;
        if (sgn(minors[k]) != expected) return false;
    }
    return true;
}

Integer determinant(const IntersectionForm& q) { return bareiss_determinant(q.matrix()); }

RationalMatrix exact_inverse(const IntersectionForm& q) { return q.inverse(); }

} // namespace brieskorn
