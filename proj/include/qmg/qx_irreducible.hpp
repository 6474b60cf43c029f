#ifndef QMG_QX_IRREDUCIBLE_HPP
#define QMG_QX_IRREDUCIBLE_HPP

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qmg/fq_poly.hpp"
#include "qmg/int_arith.hpp"
#include "qmg/int_poly.hpp"

namespace qmg {

namespace detail {

// All positive divisors of n, ascending.  Needs the complete factorization.
inline std::vector<mpz_class> divisors_of(const mpz_class& n, const Budget& budget) {
    const FactoredInt f = factor(n, budget);
    if (!f.complete) throw std::runtime_error("divisors_of: incomplete factorization");
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : f.prime_powers) {
        const std::size_t base = divs.size();
        mpz_class pw{1};
        for (unsigned i = 1; i <= e; ++i) {
            pw *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace detail

/* Integer roots of a monic polynomial, with multiplicity, ascending.  For a
 * monic integer polynomial every rational root is an integer dividing the
 * constant term, so the candidates come from a divisor enumeration; throws
 * when the constant term cannot be factored within the budget.
 */
inline std::vector<mpz_class> rational_roots(const IntPoly& p, const Budget& budget = {}) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    if (!p.is_monic()) throw std::invalid_argument("rational_roots: expects a monic polynomial");

    std::vector<mpz_class> roots;
    IntPoly f = p;
    while (f.degree() > 0 && f.coeff(0) == 0) {
        roots.emplace_back(0);
        f = divide_out_root(f, 0).first;
    }
    if (f.degree() > 0) {
        for (const mpz_class& d : detail::divisors_of(f.coeff(0), budget)) {
            for (const mpz_class& cand : {d, mpz_class(-d)}) {
                while (f.degree() > 0) {
                    auto [q, exact] = divide_out_root(f, cand);
                    if (!exact) break;
                    roots.push_back(cand);
                    f = std::move(q);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/* Irreducibility over Q for monic integer polynomials of degree 2..4; by
 * Gauss's lemma any factorization may be taken monic over Z.  Degrees 2 and
 * 3 reduce to the integer root test.  A quartic needs one more case, the
 * split into two monic quadratics (x^2+Px+u)(x^2+Rx+v): for each divisor
 * pair u*v = d, P and R are the roots of z^2 - az + (b-u-v), so they exist
 * in Z iff a^2 - 4(b-u-v) is a square of the right parity, and the x-coeff
 * equation Pv + Ru = c picks out genuine factorizations.
 */
inline bool is_irreducible(const IntPoly& p, const Budget& budget = {}) {
    const int n = p.degree();
    if (n < 2 || n > 4) throw std::invalid_argument("is_irreducible: degree must be 2, 3, or 4");
    if (!p.is_monic()) throw std::invalid_argument("is_irreducible: expects a monic polynomial");
    if (p.coeff(0) == 0) return false;

    /* When the constant term is too large to factor comfortably, look for a
     * prime where p stays irreducible: that certifies irreducibility over Q
     * outright.  Misses only C2xC2 and A4 quartics (no 4-cycle, so no inert
     * prime exists), which then fall through to the divisor search below.
     */
    if (mpz_sizeinbase(p.coeff(0).get_mpz_t(), 2) >= 40) {
        const std::vector<unsigned> inert{static_cast<unsigned>(n)};
        for (std::size_t i = 0; i < 60; ++i)
            if (factor_degrees(p, mpz_class(small_primes()[i])) == inert) return true;
    }

    if (!rational_roots(p, budget).empty()) return false;
    if (n < 4) return true;

    const mpz_class &a = p.coeff(3), &b = p.coeff(2), &c = p.coeff(1), &d = p.coeff(0);
    for (const mpz_class& du : detail::divisors_of(d, budget)) {
        for (const mpz_class& u : {du, mpz_class(-du)}) {
            const mpz_class v = d / u;
            const mpz_class D = a * a - 4 * (b - u - v);
            if (D < 0 || !is_perfect_square(D)) continue;
            const mpz_class s = isqrt(D);
            if ((a - s) % 2 != 0) continue;
            for (int pick = 0; pick < 2; ++pick) {
                const mpz_class P = (a + (pick ? s : -s)) / 2;
                const mpz_class R = a - P;
                if (P * v + R * u == c) return false;
            }
        }
    }
    return true;
}

struct EisensteinWitness {
    mpz_class prime;
    mpz_class shift;
};

/* Searches shifts c in [lo, hi] (ascending) for a prime making p(x+c)
 * Eisenstein; within one shift, candidate primes are tried ascending.  A hit
 * certifies irreducibility; absence of a hit certifies nothing.  Shifts
 * whose constant term resists factoring only lose their unfactored part.
 */
inline std::optional<EisensteinWitness> eisenstein_witness(const IntPoly& p, const mpz_class& lo,
                                                           const mpz_class& hi,
                                                           const Budget& budget = {}) {
    if (p.degree() < 2) throw std::invalid_argument("eisenstein_witness: degree must be at least 2");
    for (mpz_class c = lo; c <= hi; ++c) {
        const IntPoly s = shift(p, c);
        if (s.coeff(0) == 0) continue;
        for (const auto& [ell, e] : factor(s.coeff(0), budget).prime_powers) {
            if (e >= 2) continue;
            if (mpz_divisible_p(s.leading().get_mpz_t(), ell.get_mpz_t())) continue;
            bool all = true;
            for (int i = 1; i < s.degree() && all; ++i)
                if (!mpz_divisible_p(s.coeff(static_cast<std::size_t>(i)).get_mpz_t(),
                                     ell.get_mpz_t()))
                    all = false;
            if (all) return EisensteinWitness{ell, c};
        }
    }
    return std::nullopt;
}

}  // namespace qmg

#endif  // QMG_QX_IRREDUCIBLE_HPP
