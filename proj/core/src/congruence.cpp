#include "brieskorn/congruence.hpp"

#include "brieskorn/errors.hpp"

namespace brieskorn {

Integer solve_congruence(const Integer& coeff, const Integer& rhs, const Integer& modulus) {
    if (modulus < 2) {
        throw DomainError("congruence modulus must be >= 2");
    }
    Integer g = gcd(coeff, modulus);
    Integer r = rhs % modulus;
    if (r < 0) r += modulus;
    if (g == 0 || r % g != 0) {
        throw DomainError("unsolvable congruence " + coeff.get_str() + "*x == " + rhs.get_str() +
                          " (mod " + modulus.get_str() + ")");
    }
    const Integer m = modulus / g;
    if (m == 1) return 0;
    Integer a = (coeff / g) % m;
    if (a < 0) a += m;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    Integer x = ((r / g) * inv) % m;
    if (x < 0) x += m;
    return x;
}

} // namespace brieskorn
