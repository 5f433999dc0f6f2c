#include "brieskorn/diophantine.hpp"

#include "brieskorn/errors.hpp"
#include "brieskorn/rational.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace brieskorn {
namespace {

__extension__ typedef __int128 i128;

void require_bound(std::int64_t bound, std::int64_t minimum, const char* what) {
    if (bound < minimum || bound > 1'000'000)
        throw DomainError(std::string(what) + " must lie in [" + std::to_string(minimum) + ", 1000000]");
}

bool coprime(std::int64_t x, std::int64_t y) { return std::gcd(x, y) == 1; }

} // namespace

std::string Quadruple::to_string() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
           std::to_string(d) + ")";
}

std::vector<Quadruple> quadruples_unit() {
    // Sum of reciprocals exceeds 1, so each prefix bounds the next entry.
    std::vector<Quadruple> out;
    const Rational one(1);
    for (std::int64_t a = 2; Rational(4, a) > one; ++a) {
        for (std::int64_t b = a + 1; Rational(1, a) + Rational(3, b) > one; ++b) {
            if (!coprime(a, b)) continue;
            for (std::int64_t c = b + 1; Rational(1, a) + Rational(1, b) + Rational(2, c) > one; ++c) {
                if (!coprime(a, c) || !coprime(b, c)) continue;
                // d (abc - ab - ac - bc) = abc - 1
                const i128 abc = i128(a) * b * c;
                const i128 den = abc - i128(a) * b - i128(a) * c - i128(b) * c;
                if (den <= 0 || (abc - 1) % den != 0) continue;
                const auto d = static_cast<std::int64_t>((abc - 1) / den);
                if (d <= c || !coprime(a, d) || !coprime(b, d) || !coprime(c, d)) continue;
                if (a == 2 && b == 3 && (c - 6) * (d - 6) != 35)
                    throw InternalError("quadruples_unit: factorisation (c-6)(d-6) = 35 violated");
                out.push_back({a, b, c, d});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Quadruple> quadruples_unit_oracle(std::int64_t bound) {
    require_bound(bound, 5, "bound");
    std::vector<Quadruple> out;
    for (std::int64_t a = 2; a <= bound; ++a)
        for (std::int64_t b = a + 1; b <= bound; ++b) {
            if (!coprime(a, b)) continue;
            for (std::int64_t c = b + 1; c <= bound; ++c) {
                if (!coprime(a, c) || !coprime(b, c)) continue;
                for (std::int64_t d = c + 1; d <= bound; ++d) {
                    const i128 lhs = i128(b) * c * d + i128(a) * c * d + i128(a) * b * d + i128(a) * b * c;
                    if (lhs != i128(a) * b * c * d + 1) continue;
                    if (coprime(a, d) && coprime(b, d) && coprime(c, d)) out.push_back({a, b, c, d});
                }
            }
        }
    return out;
}

PropNewReport prop_new_check(std::int64_t bound) {
    require_bound(bound, 4, "bound");
    PropNewReport report;
    report.bound = bound;
    for (std::int64_t a = 2; a <= bound; ++a)
        for (std::int64_t b = a + 1; b <= bound; ++b)
            for (std::int64_t c = b + 1; c <= bound; ++c) {
                ++report.triples_scanned;
                const i128 abc = i128(a) * b * c;
                const i128 num = abc - 2;
                const i128 den = 3 * abc - 2 * i128(a) * b - 2 * i128(a) * c - 2 * i128(b) * c;
                if (a == 2) {
                    // numerator and denominator reduce to 2(bc-1) and 4(bc-b-c)
                    const i128 bc = i128(b) * c;
                    if (num != 2 * (bc - 1) || den != 4 * (bc - b - c))
                        throw InternalError("prop_new_check: a = 2 reduction failed");
                    ++report.reduction_checks;
                }
                if (den <= 0 || num % den != 0) continue;
                const auto d = static_cast<std::int64_t>(num / den);
                if (d < 3) continue;
                if (a == 2 && 2 * i128(d) * (i128(b) * c - b - c) != i128(b) * c - 1)
                    throw InternalError("prop_new_check: 2d(bc-b-c) = bc-1 violated");
                report.solutions.push_back({a, b, c, d});
            }
    return report;
}

std::array<std::int64_t, 3> AdmissibleTriple::exponents() const {
    std::array<std::int64_t, 3> e{a, b, third()};
    std::sort(e.begin(), e.end());
    return e;
}

unsigned property_mask(std::int64_t a, std::int64_t b, std::int64_t u, std::int64_t v) {
    if (a < 2 || b < 2 || u < 2 || v < 2) throw DomainError("property_mask: entries must be >= 2");
    const Integer A(static_cast<long>(a)), B(static_cast<long>(b)), U(static_cast<long>(u)),
        V(static_cast<long>(v));
    const Integer c = U * V - 1;
    const Integer x = A * B - A - B;
    unsigned mask = 0;
    if (coprime(a, b) && gcd(A, c) == 1 && gcd(B, c) == 1) mask |= kCoprime;
    // 1/a + 1/b + v/c > 1  <=>  bc + ac + vab > abc
    if (B * c + A * c + V * A * B > A * B * c) mask |= kSumAboveOne;
    if (V * A * B - 1 == c * x) mask |= kCongruence;
    if (A + B + U + V == 4 + (V - 1) * (A * B - (U - 1) * x)) mask |= kLinear;
    return mask;
}

std::string TripleFamily::label() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(u) + "v-1), v>=" +
           std::to_string(v_min);
}

std::vector<AdmissibleTriple> TripleFamily::instantiate(std::int64_t v_max) const {
    std::vector<AdmissibleTriple> out;
    for (std::int64_t v = v_min; v <= v_max; ++v) out.push_back({a, b, u, v});
    return out;
}

bool TripleFamily::contains(const AdmissibleTriple& t) const {
    return t.a == a && t.b == b && t.u == u && t.v >= v_min;
}

std::vector<AdmissibleTriple> TripleSolutions::all() const {
    std::vector<AdmissibleTriple> out = finite;
    out.insert(out.end(), instantiated.begin(), instantiated.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::vector<std::int64_t> positive_divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t t = 1; t * t <= n; ++t)
        if (n % t == 0) {
            out.push_back(t);
            if (t != n / t) out.push_back(n / t);
        }
    std::sort(out.begin(), out.end());
    return out;
}


void accept(TripleSolutions& out, const AdmissibleTriple& t, std::int64_t divisor, const char* what) {
    if (t.b <= t.a) {
        out.audit.push_back({t.u, t.a, divisor, std::string(what) + ": b <= a"});
        return;
    }
    const unsigned mask = property_mask(t);
    if ((mask & kFirstThree) != kFirstThree) {
        out.audit.push_back({t.u, t.a, divisor, std::string(what) + ": property mask " + std::to_string(mask)});
        return;
    }
    out.finite.push_back(t);
}

} // namespace

TripleSolutions admissible_triples(std::int64_t v_bound) {
    require_bound(v_bound, 2, "v_bound");
    TripleSolutions out;

    // u = 2: a = 2 forces b = 3 - 4v < 0, a >= 6 is excluded by the reciprocal bound.
    out.audit.push_back({2, 2, 0, "a = 2: b = 3 - 4v is negative"});
    for (std::int64_t a = 3; a <= 5; ++a) {
        for (std::int64_t t : positive_divisors(a * a - a + 2)) {
            if ((t + a - 1) % (a - 2) != 0) {
                out.audit.push_back({2, a, t, "v not integral"});
                continue;
            }
            const std::int64_t v = (t + a - 1) / (a - 2);
            if (v < 2) {
                out.audit.push_back({2, a, t, "v < 2"});
                continue;
            }
            const std::int64_t n = 4 * v * v - 5 * v + 2;
            if (n % t != 0 || (n / t + 2 * v - 1) % (v - 1) != 0) {
                out.audit.push_back({2, a, t, "b not integral"});
                continue;
            }
            const std::int64_t b = (n / t + 2 * v - 1) / (v - 1);
            if (((a - 2) * v - (a - 1)) * ((v - 1) * b - (2 * v - 1)) != n)
                throw InternalError("admissible_triples: u = 2 factorisation violated");
            accept(out, {a, b, 2, v}, t, "u = 2");
        }
    }

    // u = 3: a is 2 or 3.
    for (std::int64_t a = 2; a <= 3; ++a) {
        for (std::int64_t t : positive_divisors(a * a - 2 * a + 3)) {
            if ((t + a - 1) % (2 * a - 3) != 0) {
                out.audit.push_back({3, a, t, "v not integral"});
                continue;
            }
            const std::int64_t v = (t + a - 1) / (2 * a - 3);
            if (v < 2) {
                out.audit.push_back({3, a, t, "v < 2"});
                continue;
            }
            const std::int64_t n = 9 * v * v - 8 * v + 2;
            if (n % t != 0 || (n / t + 3 * v - 1) % (2 * v - 1) != 0) {
                out.audit.push_back({3, a, t, "b not integral"});
                continue;
            }
            const std::int64_t b = (n / t + 3 * v - 1) / (2 * v - 1);
            if (((2 * a - 3) * v - (a - 1)) * ((2 * v - 1) * b - (3 * v - 1)) != n)
                throw InternalError("admissible_triples: u = 3 factorisation violated");
            accept(out, {a, b, 3, v}, t, "u = 3");
        }
    }

    // u >= 4 forces a = 2 and b = (2uv - 3) / (v(u-2) - 1); u >= 7 would give b < 3.
    for (std::int64_t u = 4; u <= 6; ++u) {
        bool every_v = true;
        std::vector<AdmissibleTriple> found;
        for (std::int64_t v = 2; v <= v_bound; ++v) {
            const std::int64_t num = 2 * u * v - 3, den = v * (u - 2) - 1;
            if (num % den != 0) {
                every_v = false;
                continue;
            }
            const AdmissibleTriple t{2, num / den, u, v};
            if (t.b <= t.a || (property_mask(t) & kFirstThree) != kFirstThree) {
                every_v = false;
                continue;
            }
            found.push_back(t);
        }
        if (every_v && !found.empty() && std::all_of(found.begin(), found.end(), [&](const AdmissibleTriple& t) {
                return t.b == found.front().b;
            })) {
            out.families.push_back({2, found.front().b, u, 2});
            out.instantiated.insert(out.instantiated.end(), found.begin(), found.end());
        } else {
            if (found.empty()) out.audit.push_back({u, 2, 0, "no integral b for 2 <= v <= bound"});
            out.finite.insert(out.finite.end(), found.begin(), found.end());
        }
    }

    std::sort(out.finite.begin(), out.finite.end());
    out.finite.erase(std::unique(out.finite.begin(), out.finite.end()), out.finite.end());
    return out;
}

std::vector<AdmissibleTriple> admissible_triples_oracle(std::int64_t a_bound, std::int64_t v_bound,
                                                        unsigned threads) {
    require_bound(a_bound, 2, "a_bound");
    require_bound(v_bound, 2, "v_bound");
    const std::int64_t b_max = a_bound * v_bound;
    std::mutex merge;
    std::vector<AdmissibleTriple> out;
    detail::parallel_jobs(static_cast<std::uint64_t>(b_max - 2), detail::resolve_threads(threads),
                          [&](std::uint64_t job) {
                              const auto a = static_cast<std::int64_t>(job) + 2;
                              std::vector<AdmissibleTriple> local;
                              for (std::int64_t b = a + 1; b <= b_max; ++b) {
                                  const i128 ab = i128(a) * b;
                                  const i128 x = ab - a - b;
                                  for (std::int64_t u = 2; u <= a_bound; ++u)
                                      for (std::int64_t v = 2; v <= v_bound; ++v) {
                                          if (v * ab - 1 != (i128(u) * v - 1) * x) continue;
                                          if ((property_mask(a, b, u, v) & kFirstThree) == kFirstThree)
                                              local.push_back({a, b, u, v});
                                      }
                              }
                              std::lock_guard lock(merge);
                              out.insert(out.end(), local.begin(), local.end());
                          });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AdmissibleTriple> property4_filter(const std::vector<AdmissibleTriple>& triples) {
    std::vector<AdmissibleTriple> out;
    std::copy_if(triples.begin(), triples.end(), std::back_inserter(out),
                 [](const AdmissibleTriple& t) { return (property_mask(t) & kLinear) != 0; });
    return out;
}

std::string render_tsv(const std::vector<AdmissibleTriple>& triples) {
    std::ostringstream os;
    os << "a\tb\tu\tv\tuv-1\tmask\texponents\n";
    for (const auto& t : triples) {
        const auto e = t.exponents();
        os << t.a << '\t' << t.b << '\t' << t.u << '\t' << t.v << '\t' << t.third() << '\t' << property_mask(t)
           << '\t' << e[0] << ',' << e[1] << ',' << e[2] << '\n';
    }
    return os.str();
}

std::string render_tsv(const TripleSolutions& solutions) {
    std::string out = render_tsv(solutions.finite);
    for (const auto& f : solutions.families)
        out += "FAMILY\t" + std::to_string(f.a) + '\t' + std::to_string(f.b) + '\t' + std::to_string(f.u) +
               "\tv>=" + std::to_string(f.v_min) + '\t' + std::to_string(f.u) + "v-1\t" +
               std::to_string(kFirstThree) + '\t' + std::to_string(f.a) + ',' + std::to_string(f.b) + ',' +
               std::to_string(f.u) + "v-1\n";
    return out;
}

std::string render_tsv(const std::vector<Quadruple>& quadruples) {
    std::ostringstream os;
    os << "a\tb\tc\td\n";
    for (const auto& q : quadruples) os << q.a << '\t' << q.b << '\t' << q.c << '\t' << q.d << '\n';
    return os.str();
}

} // namespace brieskorn
