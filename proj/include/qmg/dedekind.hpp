#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qmg/fq_poly.hpp"
#include "qmg/int_arith.hpp"
#include "qmg/int_poly.hpp"
#include "qmg/qx_irreducible.hpp"

namespace qmg {

/* Dedekind's index criterion at a prime q for a monic polynomial T: factor
 * T mod q, lift the radical h1 and the complementary factor h2 back to Z[x],
 * and form F = (h1*h2 - T)/q, which is integral by construction.  Then q
 * divides the index [O_K : Z[theta]] exactly when gcd(h1, h2, F) mod q is
 * nonconstant.
 */
struct DedekindWitness {
    mpz_class prime;
    IntPoly h1;        // lift of the product of the distinct irreducible factors of T mod q
    IntPoly h2;        // lift of (T mod q) / h1
    IntPoly F;         // (h1*h2 - T) / q
    FqPoly gcd_mod_q;  // gcd(h1, h2, F) mod q, monic
    bool divides_index = false;
};

inline DedekindWitness dedekind_at_prime(const IntPoly& T, const mpz_class& q) {
    if (T.degree() < 2 || T.degree() > 4)
        throw std::invalid_argument("dedekind_at_prime: degree must be 2, 3, or 4");
    if (!T.is_monic()) throw std::invalid_argument("dedekind_at_prime: expects a monic polynomial");

    const FqPoly tbar = reduce_mod(T, q);  // rejects composite q
    FqPoly h1bar = FqPoly::constant(q, 1);
    for (const auto& [g, mult] : factor_fq(tbar).factors) h1bar = h1bar * g;
    const auto [h2bar, rem] = fq_divmod(tbar, h1bar);
    if (!rem.is_zero()) throw std::logic_error("dedekind_at_prime: radical does not divide");

    DedekindWitness w;
    w.prime = q;
    w.h1 = monic_lift(h1bar);
    w.h2 = monic_lift(h2bar);
    w.F = div_exact(w.h1 * w.h2 - T, q);
    w.gcd_mod_q = fq_gcd(fq_gcd(h1bar, h2bar), reduce_mod(w.F, q));
    w.divides_index = w.gcd_mod_q.degree() > 0;
    return w;
}

/* Primes whose square divides disc(T): the only primes that can divide the
 * index.  A known prime riding along inside the unsplit cofactor has an
 * uncertain exponent, so it is kept as a candidate even when its visible
 * exponent is 1.
 */
struct IndexPrimeCandidates {
    std::vector<mpz_class> primes;                 // ascending
    std::optional<mpz_class> unfactored_cofactor;  // composite part of disc(T) left unsplit
};

inline IndexPrimeCandidates index_prime_candidates(const IntPoly& T, const Budget& budget = {}) {
    const mpz_class disc = discriminant(T);
    if (disc == 0) throw std::invalid_argument("index_prime_candidates: discriminant is zero");

    const FactoredInt f = factor(disc, budget);
    IndexPrimeCandidates out;
    for (const auto& [p, e] : f.prime_powers)
        if (e >= 2 || (!f.complete && mpz_divisible_p(f.cofactor.get_mpz_t(), p.get_mpz_t())))
            out.primes.push_back(p);
    if (!f.complete) out.unfactored_cofactor = f.cofactor;
    return out;
}

enum class MonogenicStatus { Monogenic, NotMonogenic, Unknown };

struct MonogenicityVerdict {
    MonogenicStatus status = MonogenicStatus::Unknown;
    std::optional<mpz_class> witness_prime;        // first candidate that divides the index
    std::optional<mpz_class> unfactored_cofactor;  // present only when status is Unknown
    std::vector<std::pair<mpz_class, bool>> checked_primes;  // (q, divides_index), ascending
    std::optional<mpz_class> field_disc;           // disc(T), present only when Monogenic
};

/* Z[theta] is the full ring of integers iff no candidate prime divides the
 * index.  One failing prime settles the question negatively no matter what
 * hides in an unsplit cofactor; a clean sweep proves monogenicity only when
 * the discriminant was factored completely.
 */
inline MonogenicityVerdict is_monogenic(const IntPoly& T, const Budget& budget = {}) {
    if (!is_irreducible(T, budget))
        throw std::invalid_argument("is_monogenic: polynomial must be irreducible");

    const IndexPrimeCandidates cand = index_prime_candidates(T, budget);
    MonogenicityVerdict v;
    for (const mpz_class& q : cand.primes) {
        const DedekindWitness w = dedekind_at_prime(T, q);
        v.checked_primes.emplace_back(q, w.divides_index);
        if (w.divides_index) {
            v.status = MonogenicStatus::NotMonogenic;
            v.witness_prime = q;
            return v;
        }
    }
    if (cand.unfactored_cofactor) {
        v.status = MonogenicStatus::Unknown;
        v.unfactored_cofactor = cand.unfactored_cofactor;
        return v;
    }
    v.status = MonogenicStatus::Monogenic;
    v.field_disc = discriminant(T);
    return v;
}

}  // namespace qmg
