#pragma once

#include "brieskorn/rational.hpp"

namespace brieskorn {

/// Least x in [0, modulus) with coeff * x == rhs (mod modulus).
/// Throws DomainError if modulus < 2 or gcd(coeff, modulus) does not divide rhs.
Integer solve_congruence(const Integer& coeff, const Integer& rhs, const Integer& modulus);

} // namespace brieskorn
