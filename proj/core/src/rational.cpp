#include "brieskorn/rational.hpp"

#include "brieskorn/errors.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace brieskorn {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) {
        throw DomainError("rational with zero denominator");
    }
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.q_ == 0) {
        throw DomainError("division by zero");
    }
    return Rational(mpq_class(a.q_ / b.q_));
}

Integer Rational::to_integer() const {
    if (!is_integer()) {
        throw DomainError("rational " + to_string() + " is not an integer");
    }
    return q_.get_num();
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Integer parse_integer(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = text.size();
    while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
    std::string body(text.substr(i, j - i));
    std::size_t digits = 0;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) digits = 1;
    if (digits >= body.size()) {
        throw DomainError("malformed integer '" + std::string(text) + "'");
    }
    for (std::size_t k = digits; k < body.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(body[k]))) {
            throw DomainError("malformed integer '" + std::string(text) + "'");
        }
    }
    if (body[0] == '+') body.erase(0, 1);
    return Integer(body, 10);
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p()) {
        throw DomainError("integer " + z.get_str() + " does not fit in 64 bits");
    }
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return z.get_si();
}

} // namespace brieskorn
