#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qmg/galois4.hpp"
#include "qmg/int_arith.hpp"
#include "qmg/int_poly.hpp"

namespace qmg {

/* Single-parameter quartic families X2..X5 with prescribed Galois groups
 * C2xC2, D4, A4, S4, plus the comparison families from earlier literature
 * (Jones's biquadratic and reciprocal families, Spearman's A4 family, the
 * two Smith trinomial families, and the Gras–Spearman–Spearman family).
 */
enum class FamilyId {
    X2,
    X3,
    X4,
    X5,
    JonesC2C2,
    JonesD4Plus,
    JonesD4Minus,
    SpearmanA4,
    SmithB,
    SmithD,
    GSS,
};

inline constexpr int family_arity(FamilyId id) {
    switch (id) {
        case FamilyId::JonesC2C2:
        case FamilyId::JonesD4Plus:
        case FamilyId::JonesD4Minus: return 2;
        default: return 1;
    }
}

inline const char* family_name(FamilyId id) {
    switch (id) {
        case FamilyId::X2: return "X2";
        case FamilyId::X3: return "X3";
        case FamilyId::X4: return "X4";
        case FamilyId::X5: return "X5";
        case FamilyId::JonesC2C2: return "JonesC2C2";
        case FamilyId::JonesD4Plus: return "JonesD4Plus";
        case FamilyId::JonesD4Minus: return "JonesD4Minus";
        case FamilyId::SpearmanA4: return "SpearmanA4";
        case FamilyId::SmithB: return "SmithB";
        case FamilyId::SmithD: return "SmithD";
        case FamilyId::GSS: return "GSS";
    }
    throw std::logic_error("family_name: unhandled id");
}

inline std::optional<FamilyId> parse_family(std::string_view s) {
    using F = FamilyId;
    for (F id : {F::X2, F::X3, F::X4, F::X5, F::JonesC2C2, F::JonesD4Plus, F::JonesD4Minus,
                 F::SpearmanA4, F::SmithB, F::SmithD, F::GSS})
        if (s == family_name(id)) return id;
    return std::nullopt;
}

// The Galois group every condition-satisfying member of the family realizes.
inline GaloisLabel family_group(FamilyId id) {
    switch (id) {
        case FamilyId::X2:
        case FamilyId::JonesC2C2: return GaloisLabel::C2xC2;
        case FamilyId::X3:
        case FamilyId::JonesD4Plus:
        case FamilyId::JonesD4Minus: return GaloisLabel::D4;
        case FamilyId::X4:
        case FamilyId::SpearmanA4: return GaloisLabel::A4;
        default: return GaloisLabel::S4;
    }
}

namespace detail {

inline void check_arity(FamilyId id, std::size_t got) {
    if (static_cast<std::size_t>(family_arity(id)) != got)
        throw std::invalid_argument(std::string("family ") + family_name(id) + " expects " +
                                    std::to_string(family_arity(id)) + " parameter(s)");
}

}  // namespace detail

inline IntPoly gen(FamilyId id, const std::vector<mpz_class>& params) {
    detail::check_arity(id, params.size());
    const mpz_class& t = params[0];
    const mpz_class rp = params.size() == 2 ? mpz_class(params[0] * params[1]) : mpz_class(0);
    switch (id) {
        case FamilyId::X2: return IntPoly::quartic(0, 4 * t, 0, 1);
        case FamilyId::X3: return IntPoly::quartic(24 * t, 12 * t + 4, 4, 1);
        case FamilyId::X4: return IntPoly::quartic(2, 2, 4 * t, 36 * t * t - 16 * t + 2);
        case FamilyId::X5: return IntPoly::quartic(-2, -2, 6, 4 * t - 2);
        case FamilyId::JonesC2C2: return IntPoly::quartic(0, 36 * rp - 1, 0, 1);
        case FamilyId::JonesD4Plus: return IntPoly::quartic(1, 100 * rp + 1, 1, 1);
        case FamilyId::JonesD4Minus: return IntPoly::quartic(-1, 100 * rp + 1, -1, 1);
        case FamilyId::SpearmanA4: return IntPoly::quartic(0, 18, -4 * t, t * t + 81);
        case FamilyId::SmithB: return IntPoly::quartic(0, 0, t, t);
        case FamilyId::SmithD: return IntPoly::quartic(1, 0, 0, t);
        case FamilyId::GSS: return IntPoly::quartic(0, -6, -t, -3);
    }
    throw std::logic_error("gen: unhandled id");
}

inline IntPoly gen(FamilyId id, const mpz_class& t) { return gen(id, std::vector<mpz_class>{t}); }

inline mpz_class closed_form_disc(FamilyId id, const std::vector<mpz_class>& params) {
    detail::check_arity(id, params.size());
    const mpz_class& t = params[0];
    const mpz_class rp = params.size() == 2 ? mpz_class(params[0] * params[1]) : mpz_class(0);
    auto sq = [](const mpz_class& v) { return mpz_class(v * v); };
    switch (id) {
        case FamilyId::X2: return 256 * sq(4 * t * t - 1);
        case FamilyId::X3: {
            const mpz_class a = 6 * t - 1;
            return -512 * a * a * a * sq(6 * t + 1);
        }
        case FamilyId::X4: return 64 * sq(4 * t - 1) * sq(108 * t * t - 54 * t + 7);
        case FamilyId::X5: return 16 * (4 * t + 1) * (4 * t - 7) * (64 * t + 13);
        case FamilyId::JonesC2C2: return 144 * sq(36 * rp + 1) * sq(12 * rp - 1);
        case FamilyId::JonesD4Plus:
        case FamilyId::JonesD4Minus:
            return 125 * (20 * rp + 1) * (100 * rp + 1) * sq(80 * rp - 1);
        case FamilyId::SpearmanA4: return 256 * sq(t) * sq(t * t + 108);
        case FamilyId::SmithB: return (256 - 27 * t) * t * t * t;
        case FamilyId::SmithD: return (256 * t - 27) * t * t;
        case FamilyId::GSS: return -27 * sq(t - 8) * sq(t + 8);
    }
    throw std::logic_error("closed_form_disc: unhandled id");
}

inline mpz_class closed_form_disc(FamilyId id, const mpz_class& t) {
    return closed_form_disc(id, std::vector<mpz_class>{t});
}

/* Monogenicity condition of the four X-families: a conjunction of squarefree
 * requirements.  X5 genuinely needs the three factors tested separately —
 * 4t+1 and 64t+13 can share a factor of 3, so squarefreeness of the product
 * is a strictly different (wrong) condition.
 */
inline Tristate condition_holds(FamilyId id, const std::vector<mpz_class>& params,
                                const Budget& budget = {}) {
    detail::check_arity(id, params.size());
    const mpz_class& t = params[0];
    switch (id) {
        case FamilyId::X2: return is_squarefree(4 * t * t - 1, budget);
        case FamilyId::X3: return is_squarefree(36 * t * t - 1, budget);
        case FamilyId::X4: return is_squarefree((4 * t - 1) * (108 * t * t - 54 * t + 7), budget);
        case FamilyId::X5:
            return tri_and(is_squarefree(4 * t + 1, budget),
                           tri_and(is_squarefree(4 * t - 7, budget),
                                   is_squarefree(64 * t + 13, budget)));
        default:
            throw std::invalid_argument(std::string("condition_holds: no registered condition for ") +
                                        family_name(id));
    }
}

inline Tristate condition_holds(FamilyId id, const mpz_class& t, const Budget& budget = {}) {
    return condition_holds(id, std::vector<mpz_class>{t}, budget);
}

/* Admissibility predicates for the literature families, used to filter
 * overlap scans; the generators themselves stay total.
 */
inline Tristate jones_c2c2_condition(const mpz_class& r, const mpz_class& p,
                                     const Budget& budget = {}) {
    const mpz_class rp = r * p;
    return is_squarefree((12 * rp - 1) * (12 * rp + 1) * (36 * rp - 1) * (36 * rp + 1), budget);
}

inline Tristate jones_d4_condition(const mpz_class& r, const mpz_class& p,
                                   const Budget& budget = {}) {
    const mpz_class rp = r * p;
    return is_squarefree((20 * rp + 1) * (100 * rp + 1) * (80 * rp - 1), budget);
}

inline Tristate spearman_condition(const mpz_class& m, const Budget& budget = {}) {
    if (m == 0) return Tristate::False;
    return is_squarefree(m * (m * m + 108), budget);
}

inline Tristate smith_b_condition(const mpz_class& b, const Budget& budget = {}) {
    if (b == 0 || b == 3 || b == 5) return Tristate::False;
    return tri_and(is_squarefree(b, budget), is_squarefree(256 - 27 * b, budget));
}

inline Tristate smith_d_condition(const mpz_class& d, const Budget& budget = {}) {
    if (d == 0 || d == -2) return Tristate::False;
    return tri_and(is_squarefree(d, budget), is_squarefree(256 * d - 27, budget));
}

// True iff r generates the full unit group modulo m (requires gcd(r, m) = 1).
inline bool is_primitive_root(const mpz_class& r, const mpz_class& m, const Budget& budget = {}) {
    if (m < 2) throw std::invalid_argument("is_primitive_root: modulus must be at least 2");
    mpz_class a;
    mpz_mod(a.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (g != 1) return false;

    const FactoredInt fm = factor(m, budget);
    if (!fm.complete) throw std::runtime_error("is_primitive_root: cannot factor modulus");
    mpz_class phi{1};
    for (const auto& [q, e] : fm.prime_powers) {
        phi *= q - 1;
        for (unsigned i = 1; i < e; ++i) phi *= q;
    }
    const FactoredInt fphi = factor(phi, budget);
    if (!fphi.complete) throw std::runtime_error("is_primitive_root: cannot factor group order");
    mpz_class pw;
    mpz_powm(pw.get_mpz_t(), a.get_mpz_t(), phi.get_mpz_t(), m.get_mpz_t());
    if (pw != 1) return false;  // not a unit-group exponent: no primitive root exists mod m
    for (const auto& [q, e] : fphi.prime_powers) {
        const mpz_class reduced = phi / q;
        mpz_powm(pw.get_mpz_t(), a.get_mpz_t(), reduced.get_mpz_t(), m.get_mpz_t());
        if (pw == 1) return false;
    }
    return true;
}

struct Exemplar {
    std::string name;
    IntPoly poly;
    GaloisLabel expected_group;
    mpz_class expected_disc;
    std::string source;
};

// Eight cyclic (C4) monogenic quartics: the two imaginary fields of Gras,
// two real fields recovered from Olajos's simplest-quartic power bases, and
// four further real examples.
inline const std::vector<Exemplar>& exemplars() {
    static const std::vector<Exemplar> reg = {
        {"f_2", IntPoly::quartic(-10, 25, -20, 5), GaloisLabel::C4, 2000,
         "real cyclic field of the simplest quartic with k=2 (Olajos)"},
        {"f_4", IntPoly::quartic(-8, 16, -8, -2), GaloisLabel::C4, 2048,
         "real cyclic field of the simplest quartic with k=4 (Olajos)"},
        {"g_1", IntPoly::quartic(9, 19, 9, 1), GaloisLabel::C4, 19773,
         "additional real cyclic monogenic quartic"},
        {"g_2", IntPoly::quartic(5, 5, -5, -5), GaloisLabel::C4, 1125,
         "additional real cyclic monogenic quartic"},
        {"g_3", IntPoly::quartic(11, 31, 11, 1), GaloisLabel::C4, 15125,
         "additional real cyclic monogenic quartic"},
        {"g_4", IntPoly::quartic(7, 9, -7, 1), GaloisLabel::C4, 6125,
         "additional real cyclic monogenic quartic"},
        {"Phi5", IntPoly::quartic(1, 1, 1, 1), GaloisLabel::C4, 125,
         "minimal polynomial of a primitive 5th root of unity (Gras)"},
        {"zeta16", IntPoly::quartic(0, 4, 0, 2), GaloisLabel::C4, 2048,
         "minimal polynomial of zeta_16 - 1/zeta_16 (Gras)"},
    };
    return reg;
}

enum class Distinctness { Distinct, SameDiscriminant };

struct DistinctnessResult {
    Distinctness kind;
    bool resolved_by_signature = false;  // meaningful only for SameDiscriminant
    int real_roots1 = -1;
    int real_roots2 = -1;
};

/* Monogenic members with equal discriminants generate equal field
 * discriminants, so distinct real-root signatures prove distinct fields.
 * Callers must pass parameters satisfying the family condition.
 */
inline DistinctnessResult distinctness_check(FamilyId id, const mpz_class& t1, const mpz_class& t2,
                                             const Budget& budget = {}) {
    if (t1 == t2) throw std::invalid_argument("distinctness_check: parameters must differ");
    if (condition_holds(id, t1, budget) != Tristate::True ||
        condition_holds(id, t2, budget) != Tristate::True)
        throw std::invalid_argument("distinctness_check: both parameters must satisfy the condition");
    if (closed_form_disc(id, t1) != closed_form_disc(id, t2)) return {Distinctness::Distinct};
    DistinctnessResult r{Distinctness::SameDiscriminant};
    r.real_roots1 = sturm_real_root_count(gen(id, t1));
    r.real_roots2 = sturm_real_root_count(gen(id, t2));
    r.resolved_by_signature = r.real_roots1 != r.real_roots2;
    return r;
}

}  // namespace qmg
