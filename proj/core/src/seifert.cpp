#include "brieskorn/seifert.hpp"

#include "brieskorn/congruence.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/plumbing.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace brieskorn {

BrieskornIndex::BrieskornIndex(std::vector<std::int64_t> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.size() < 3) {
        throw DomainError("a Brieskorn sphere needs at least three exponents");
    }
    std::sort(exponents_.begin(), exponents_.end());
    if (exponents_.front() < 2) {
        throw DomainError("Brieskorn exponents must be >= 2");
    }
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        for (std::size_t j = i + 1; j < exponents_.size(); ++j) {
            if (std::gcd(exponents_[i], exponents_[j]) != 1) {
                throw DomainError("Brieskorn exponents must be pairwise coprime: " + std::to_string(exponents_[i]) +
                                  " and " + std::to_string(exponents_[j]));
            }
        }
    }
}

Integer BrieskornIndex::product() const {
    Integer p = 1;
    for (auto a : exponents_) p *= static_cast<long>(a);
    return p;
}

std::string BrieskornIndex::key() const {
    std::string out;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(exponents_[i]);
    }
    return out;
}

std::string BrieskornIndex::to_string() const { return "Sigma(" + key() + ")"; }

SeifertData::SeifertData(std::int64_t e0, std::vector<Rational> multipliers)
    : e0_(e0), multipliers_(std::move(multipliers)) {
    for (const auto& r : multipliers_) {
        if (r <= Rational(0) || r >= Rational(1)) {
            throw DomainError("Seifert multiplier " + r.to_string() + " outside (0,1)");
        }
    }
}

std::string SeifertData::to_string() const {
    std::ostringstream os;
    os << "M(" << e0_ << ";";
    for (std::size_t i = 0; i < multipliers_.size(); ++i) {
        os << (i ? ", " : " ") << multipliers_[i];
    }
    os << ")";
    return os.str();
}

SeifertData SeifertData::parse(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.size() < 4 || s.rfind("M(", 0) != 0 || s.back() != ')') {
        throw DomainError("malformed Seifert data '" + std::string(text) + "', expected M(e0; p1/q1, ...)");
    }
    const std::string body = s.substr(2, s.size() - 3);
    const auto semi = body.find(';');
    if (semi == std::string::npos) {
        throw DomainError("Seifert data needs ';' after e0: '" + std::string(text) + "'");
    }
    const std::int64_t e0 = to_int64(parse_integer(body.substr(0, semi)));
    std::vector<Rational> rs;
    std::string rest = body.substr(semi + 1);
    if (!rest.empty()) {
        std::size_t start = 0;
        while (true) {
            const auto comma = rest.find(',', start);
            const std::string tok = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (tok.find('/') == std::string::npos) {
                throw DomainError("Seifert multiplier '" + tok + "' must be a fraction p/q");
            }
            const auto slash = tok.find('/');
            const Integer p = parse_integer(tok.substr(0, slash));
            const Integer q = parse_integer(tok.substr(slash + 1));
            if (q == 0 || gcd(p, q) != 1) {
                throw DomainError("Seifert multiplier '" + tok + "' is not a reduced fraction");
            }
            rs.emplace_back(p, q);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return SeifertData(e0, std::move(rs));
}

SeifertData from_brieskorn(const BrieskornIndex& index) {
    const Integer total = index.product();
    std::vector<Rational> rs;
    Rational sum(0);
    for (auto a : index.exponents()) {
        const Integer ai(static_cast<long>(a));
        const Integer beta = solve_congruence(total / ai, Integer(-1), ai);
        rs.emplace_back(beta, ai);
        sum += rs.back();
    }
    const Rational e0 = Rational(Integer(-1), total) - sum;
    if (!e0.is_integer()) {
        throw InternalError("Brieskorn normalization produced non-integral e0 for " + index.to_string());
    }
    SeifertData m(to_int64(e0.to_integer()), std::move(rs));
    if (euler_number(m) != Rational(Integer(-1), total)) {
        throw InternalError("Euler number of " + index.to_string() + " is not -1/prod(a)");
    }
    return m;
}

Rational euler_number(const SeifertData& m) {
    Rational e(static_cast<long>(m.e0()));
    for (const auto& r : m.multipliers()) e += r;
    return e;
}

SeifertData reverse_orientation(const SeifertData& m) {
    if (m.multipliers().empty()) {
        throw DomainError("orientation reversal needs at least one multiplier");
    }
    std::vector<Rational> rs;
    for (const auto& r : m.multipliers()) rs.push_back(Rational(1) - r);
    const std::int64_t e0 = -static_cast<std::int64_t>(rs.size()) - m.e0();
    return SeifertData(e0, std::move(rs));
}

Integer h1_order(const SeifertData& m) {
    Rational scaled = euler_number(m);
    for (const auto& r : m.multipliers()) scaled *= Rational(r.denominator());
    const Integer from_euler = scaled.abs().to_integer();
    const Integer from_graph = abs(determinant(intersection_matrix(standard_graph(m))));
    if (from_euler != from_graph) {
        throw InternalError("|H1| mismatch for " + m.to_string() + ": " + from_euler.get_str() + " vs |det Q| " +
                            from_graph.get_str());
    }
    return from_euler;
}

} // namespace brieskorn
