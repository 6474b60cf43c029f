#ifndef QMG_GALOIS4_HPP
#define QMG_GALOIS4_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qmg/fq_poly.hpp"
#include "qmg/int_arith.hpp"
#include "qmg/int_poly.hpp"
#include "qmg/qx_irreducible.hpp"

namespace qmg {

// The five transitive subgroups of S4, numbered 4T1..4T5 as usual.
enum class GaloisLabel { C4 = 1, C2xC2 = 2, D4 = 3, A4 = 4, S4 = 5 };

inline const char* label_code(GaloisLabel g) {
    switch (g) {
        case GaloisLabel::C4: return "4T1";
        case GaloisLabel::C2xC2: return "4T2";
        case GaloisLabel::D4: return "4T3";
        case GaloisLabel::A4: return "4T4";
        case GaloisLabel::S4: return "4T5";
    }
    throw std::invalid_argument("label_code: bad label");
}

inline const char* group_name(GaloisLabel g) {
    switch (g) {
        case GaloisLabel::C4: return "C4";
        case GaloisLabel::C2xC2: return "C2xC2";
        case GaloisLabel::D4: return "D4";
        case GaloisLabel::A4: return "A4";
        case GaloisLabel::S4: return "S4";
    }
    throw std::invalid_argument("group_name: bad label");
}

/* Resolvent cubic of x^4+ax^3+bx^2+cx+d, with roots x1x2+x3x4, x1x3+x2x4,
 * x1x4+x2x3:  y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2).
 * Its discriminant equals the quartic's, so an irreducible quartic always
 * yields a squarefree resolvent.
 */
inline IntPoly resolvent_cubic(const IntPoly& f) {
    if (f.degree() != 4 || !f.is_monic())
        throw std::invalid_argument("resolvent_cubic: expects a monic quartic");
    const mpz_class &a = f.coeff(3), &b = f.coeff(2), &c = f.coeff(1), &d = f.coeff(0);
    return IntPoly(std::vector<mpz_class>{-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1});
}

// Whether a monic integer quadratic splits into linear factors over the
// quadratic field Q(sqrt m), m squarefree: yes when its discriminant is
// zero, a perfect square, or has squarefree part m.
inline bool quadratic_splits_over(const IntPoly& g, const mpz_class& m, const Budget& budget = {}) {
    if (g.degree() != 2 || !g.is_monic())
        throw std::invalid_argument("quadratic_splits_over: expects a monic quadratic");
    const mpz_class D = g.coeff(1) * g.coeff(1) - 4 * g.coeff(0);
    if (D == 0 || is_perfect_square(D)) return true;
    const auto core = squarefree_part(D, budget);
    if (!core) throw std::runtime_error("quadratic_splits_over: could not factor the discriminant");
    return *core == m;
}

struct ClassificationEvidence {
    mpz_class disc;
    IntPoly resolvent;
    std::vector<mpz_class> resolvent_roots;  // integer roots, with multiplicity
    bool disc_is_square = false;
    std::optional<mpz_class> chosen_s;             // the lone root, when there is one
    std::optional<mpz_class> splitting_core_m;     // Q(sqrt m) from the residual quadratic
    std::optional<std::pair<IntPoly, IntPoly>> g_factors;  // x^2-sx+d and x^2+ax+(b-s)
};

/* Galois group of an irreducible monic quartic, by the number of rational
 * roots of its resolvent cubic:
 *   3 roots: C2xC2.
 *   0 roots: A4 when disc(f) is a square, S4 otherwise.
 *   1 root s: C4 when x^2-sx+d and x^2+ax+(b-s) both split over Q(sqrt m),
 *     D4 otherwise.  Here m is the squarefree part of the residual
 *     quadratic's discriminant, which generates the same field as sqrt of
 *     disc(f) since disc(f) differs from it by the square of a rational.
 * Exactly two roots cannot occur: the third root of a cubic with two
 * rational roots is rational.
 */
inline std::pair<GaloisLabel, ClassificationEvidence> classify(const IntPoly& f,
                                                               const Budget& budget = {}) {
    if (f.degree() != 4 || !f.is_monic())
        throw std::invalid_argument("classify: expects a monic quartic");
    if (!is_irreducible(f, budget))
        throw std::invalid_argument("classify: polynomial is reducible over Q");

    ClassificationEvidence ev;
    ev.disc = discriminant(f);
    ev.resolvent = resolvent_cubic(f);
    ev.resolvent_roots = rational_roots(ev.resolvent, budget);
    ev.disc_is_square = is_perfect_square(ev.disc);

    switch (ev.resolvent_roots.size()) {
        case 3: return {GaloisLabel::C2xC2, std::move(ev)};
        case 0: return {ev.disc_is_square ? GaloisLabel::A4 : GaloisLabel::S4, std::move(ev)};
        case 1: break;
        default: throw std::logic_error("classify: resolvent root count out of range");
    }

    const mpz_class s = ev.resolvent_roots.front();
    ev.chosen_s = s;
    const IntPoly residual = divide_out_root(ev.resolvent, s).first;
    const mpz_class Dres = residual.coeff(1) * residual.coeff(1) - 4 * residual.coeff(0);
    const auto m = squarefree_part(Dres, budget);
    if (!m) throw std::runtime_error("classify: could not factor the residual discriminant");
    ev.splitting_core_m = *m;

    const IntPoly g1(std::vector<mpz_class>{f.coeff(0), -s, 1});
    const IntPoly g2(std::vector<mpz_class>{f.coeff(2) - s, f.coeff(3), 1});
    ev.g_factors = std::make_pair(g1, g2);
    const bool cyclic =
        quadratic_splits_over(g1, *m, budget) && quadratic_splits_over(g2, *m, budget);
    return {cyclic ? GaloisLabel::C4 : GaloisLabel::D4, std::move(ev)};
}

// Cycle types of permutations of four points.
enum class CycleType { T1111, T112, T22, T13, T4 };

inline const char* cycle_type_name(CycleType t) {
    switch (t) {
        case CycleType::T1111: return "1111";
        case CycleType::T112: return "112";
        case CycleType::T22: return "22";
        case CycleType::T13: return "13";
        case CycleType::T4: return "4";
    }
    throw std::invalid_argument("cycle_type_name: bad type");
}

struct CycleTypeProfile {
    std::set<CycleType> observed;
    std::map<CycleType, int> counts;
    int primes_used = 0;
    std::optional<GaloisLabel> inferred;
};

// Below this many usable primes no inference is attempted.
inline constexpr int frobenius_min_primes = 25;

/* Factorization shapes of f modulo primes up to the bound, skipping primes
 * dividing the discriminant.  For an irreducible quartic the shape at an
 * unramified prime is the cycle type of its Frobenius class, and by
 * Chebotarev every class shows up, so the observed set identifies the
 * group.  Types 1+1+1+1 and 2+2 occur in all five candidate groups; the
 * other three separate them:
 *   none of 112/13/4: C2xC2      4 only: C4        112 and 4: D4
 *   13 only: A4                  112, 13 and 4: S4
 * Any other combination (or too few primes) leaves `inferred` empty.
 */
inline CycleTypeProfile frobenius_cycle_types(const IntPoly& f, unsigned long prime_bound) {
    if (f.degree() != 4 || !f.is_monic())
        throw std::invalid_argument("frobenius_cycle_types: expects a monic quartic");
    if (prime_bound > 1000000)
        throw std::invalid_argument("frobenius_cycle_types: prime bound exceeds the sieve");

    static const std::vector<unsigned> d1111{1, 1, 1, 1}, d112{1, 1, 2}, d22{2, 2}, d13{1, 3},
        d4{4};

    CycleTypeProfile out;
    const mpz_class disc = discriminant(f);
    if (disc == 0) return out;
    for (std::uint32_t p : small_primes()) {
        if (p > prime_bound) break;
        if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
        const auto degs = factor_degrees(f, mpz_class(p));
        CycleType t;
        if (degs == d1111) t = CycleType::T1111;
        else if (degs == d112) t = CycleType::T112;
        else if (degs == d22) t = CycleType::T22;
        else if (degs == d13) t = CycleType::T13;
        else if (degs == d4) t = CycleType::T4;
        else throw std::logic_error("frobenius_cycle_types: non-squarefree shape at a good prime");
        out.observed.insert(t);
        ++out.counts[t];
        ++out.primes_used;
    }

    if (out.primes_used >= frobenius_min_primes) {
        const bool s112 = out.observed.count(CycleType::T112) > 0;
        const bool s13 = out.observed.count(CycleType::T13) > 0;
        const bool s4 = out.observed.count(CycleType::T4) > 0;
        if (!s112 && !s13 && !s4) out.inferred = GaloisLabel::C2xC2;
        else if (!s112 && !s13 && s4) out.inferred = GaloisLabel::C4;
        else if (s112 && !s13 && s4) out.inferred = GaloisLabel::D4;
        else if (!s112 && s13 && !s4) out.inferred = GaloisLabel::A4;
        else if (s112 && s13 && s4) out.inferred = GaloisLabel::S4;
    }
    return out;
}

}  // namespace qmg

#endif  // QMG_GALOIS4_HPP
