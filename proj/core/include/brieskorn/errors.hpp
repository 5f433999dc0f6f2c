#pragma once

#include <stdexcept>
#include <string>

namespace brieskorn {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The operation is valid but its formula does not apply to this input.
/// `flag()` carries a short provenance tag for reports.
class NotApplicable : public std::runtime_error {
public:
    NotApplicable(const std::string& what, std::string flag)
        : std::runtime_error(what), flag_(std::move(flag)) {}

    const std::string& flag() const noexcept { return flag_; }

private:
    std::string flag_;
};

/// A postcondition that should hold by construction failed.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace brieskorn
