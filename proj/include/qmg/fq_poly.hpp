#ifndef QMG_FQ_POLY_HPP
#define QMG_FQ_POLY_HPP

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qmg/int_arith.hpp"
#include "qmg/int_poly.hpp"

namespace qmg {

/* Polynomial over the prime field F_q.  Coefficients are ascending, reduced
 * into [0, q), and trailing zeros are stripped, so the zero polynomial is
 * empty.  The modulus travels with the value; mixing moduli throws.
 */
class FqPoly {
public:
    FqPoly() = default;

    FqPoly(mpz_class q, std::vector<mpz_class> coeffs) : q_(std::move(q)), c_(std::move(coeffs)) {
        if (q_ < 2) throw std::invalid_argument("FqPoly: modulus must be at least 2");
        for (auto& a : c_) mpz_mod(a.get_mpz_t(), a.get_mpz_t(), q_.get_mpz_t());
        normalize();
    }

    static FqPoly x(const mpz_class& q) { return FqPoly(q, {0, 1}); }
    static FqPoly constant(const mpz_class& q, const mpz_class& v) { return FqPoly(q, {v}); }

    const mpz_class& modulus() const { return q_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const mpz_class& coeff(std::size_t i) const {
        static const mpz_class zero{0};
        return i < c_.size() ? c_[i] : zero;
    }

    const mpz_class& leading() const {
        if (c_.empty()) throw std::invalid_argument("leading(): zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    bool operator==(const FqPoly& o) const { return q_ == o.q_ && c_ == o.c_; }
    bool operator!=(const FqPoly& o) const { return !(*this == o); }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    mpz_class q_;
    std::vector<mpz_class> c_;
};

namespace detail {

inline const mpz_class& same_modulus(const FqPoly& a, const FqPoly& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("FqPoly: mixed moduli");
    return a.modulus();
}

}  // namespace detail

inline FqPoly operator+(const FqPoly& a, const FqPoly& b) {
    const mpz_class& q = detail::same_modulus(a, b);
    std::vector<mpz_class> r(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return FqPoly(q, std::move(r));
}

inline FqPoly operator-(const FqPoly& a, const FqPoly& b) {
    const mpz_class& q = detail::same_modulus(a, b);
    std::vector<mpz_class> r(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return FqPoly(q, std::move(r));
}

inline FqPoly operator*(const FqPoly& a, const FqPoly& b) {
    const mpz_class& q = detail::same_modulus(a, b);
    if (a.is_zero() || b.is_zero()) return FqPoly(q, {});
    std::vector<mpz_class> r(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) r[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return FqPoly(q, std::move(r));
}

inline FqPoly make_monic(const FqPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("make_monic: zero polynomial");
    if (p.is_monic()) return p;
    const mpz_class& q = p.modulus();
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), p.leading().get_mpz_t(), q.get_mpz_t()) == 0)
        throw std::invalid_argument("make_monic: leading coefficient not invertible");
    std::vector<mpz_class> r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.coeffs()[i] * inv;
    return FqPoly(q, std::move(r));
}

inline std::pair<FqPoly, FqPoly> fq_divmod(const FqPoly& a, const FqPoly& b) {
    const mpz_class& q = detail::same_modulus(a, b);
    if (b.is_zero()) throw std::invalid_argument("fq_divmod: division by zero");
    const int db = b.degree();
    if (a.degree() < db) return {FqPoly(q, {}), a};
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), b.leading().get_mpz_t(), q.get_mpz_t()) == 0)
        throw std::invalid_argument("fq_divmod: leading coefficient not invertible");
    std::vector<mpz_class> r = a.coeffs();
    std::vector<mpz_class> quo(static_cast<std::size_t>(a.degree() - db) + 1);
    for (int i = a.degree(); i >= db; --i) {
        mpz_class coef = r[static_cast<std::size_t>(i)] * inv;
        mpz_mod(coef.get_mpz_t(), coef.get_mpz_t(), q.get_mpz_t());
        quo[static_cast<std::size_t>(i - db)] = coef;
        if (coef == 0) continue;
        for (int j = 0; j <= db; ++j) {
            mpz_class& slot = r[static_cast<std::size_t>(i - db + j)];
            slot -= coef * b.coeffs()[static_cast<std::size_t>(j)];
            mpz_mod(slot.get_mpz_t(), slot.get_mpz_t(), q.get_mpz_t());
        }
    }
    return {FqPoly(q, std::move(quo)), FqPoly(q, std::move(r))};
}

// Monic gcd; gcd with a single zero argument is the monic associate of the
// other, gcd(0, 0) throws.
inline FqPoly fq_gcd(FqPoly a, FqPoly b) {
    detail::same_modulus(a, b);
    while (!b.is_zero()) {
        FqPoly r = fq_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) throw std::invalid_argument("fq_gcd: gcd(0, 0) undefined");
    return make_monic(a);
}

namespace detail {

inline FqPoly fq_mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& mod) {
    return fq_divmod(a * b, mod).second;
}

}  // namespace detail

inline FqPoly fq_powmod(const FqPoly& base, const mpz_class& e, const FqPoly& mod) {
    if (e < 0) throw std::invalid_argument("fq_powmod: negative exponent");
    const mpz_class& q = detail::same_modulus(base, mod);
    FqPoly r = FqPoly::constant(q, 1);
    if (e == 0) return fq_divmod(r, mod).second;
    const FqPoly b = fq_divmod(base, mod).second;
    for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        r = detail::fq_mulmod(r, r, mod);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) r = detail::fq_mulmod(r, b, mod);
    }
    return r;
}

inline mpz_class fq_eval(const FqPoly& p, const mpz_class& v) {
    mpz_class acc{0};
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * v + *it;
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), p.modulus().get_mpz_t());
    }
    return acc;
}

inline FqPoly fq_derivative(const FqPoly& p) {
    const mpz_class& q = p.modulus();
    if (p.degree() <= 0) return FqPoly(q, {});
    std::vector<mpz_class> r(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i)
        r[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
    return FqPoly(q, std::move(r));
}

// Reduction of an integer polynomial; the checked entry point, so the
// modulus is verified prime here and trusted everywhere below.
inline FqPoly reduce_mod(const IntPoly& p, const mpz_class& q) {
    if (!is_probable_prime(q)) throw std::invalid_argument("reduce_mod: modulus must be prime");
    return FqPoly(q, p.coeffs());
}

// Representative with coefficients in [0, q); defined for monic inputs only,
// where the choice of lift is canonical.
inline IntPoly monic_lift(const FqPoly& p) {
    if (!p.is_monic() && !p.is_one())
        throw std::invalid_argument("monic_lift: polynomial must be monic");
    return IntPoly(p.coeffs());
}

namespace detail {

/* q-th root of a polynomial with zero derivative over the prime field F_q:
 * f = g(x)^q where g picks up every q-th coefficient (a^q = a in F_q).
 * With degree capped at 4 this only ever happens for q = 2 or 3.
 */
inline FqPoly fq_qth_root(const FqPoly& f) {
    const mpz_class& q = f.modulus();
    if (!q.fits_ulong_p() || mpz_cmp_ui(q.get_mpz_t(), static_cast<unsigned long>(f.degree())) > 0)
        throw std::logic_error("fq_qth_root: modulus exceeds degree");
    const unsigned long qs = q.get_ui();
    std::vector<mpz_class> g(f.coeffs().size() / qs + 1);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i % qs == 0) g[i / qs] = f.coeffs()[i];
        else if (f.coeffs()[i] != 0) throw std::logic_error("fq_qth_root: derivative was not zero");
    }
    return FqPoly(q, std::move(g));
}

// Monic squarefree pieces with multiplicities; expects a monic input of
// degree >= 1.  Pieces are pairwise coprime, not necessarily irreducible.
inline std::vector<std::pair<FqPoly, unsigned>> fq_squarefree_decompose(const FqPoly& f) {
    std::vector<std::pair<FqPoly, unsigned>> out;
    const unsigned long qs = f.modulus().fits_ulong_p() ? f.modulus().get_ui() : 0;

    const FqPoly fp = fq_derivative(f);
    if (fp.is_zero()) {
        for (auto& [h, m] : fq_squarefree_decompose(fq_qth_root(f)))
            out.emplace_back(std::move(h), m * static_cast<unsigned>(qs));
        return out;
    }

    FqPoly c = fq_gcd(f, fp);
    FqPoly w = fq_divmod(f, c).first;
    for (unsigned i = 1; w.degree() > 0; ++i) {
        FqPoly y = fq_gcd(w, c);
        FqPoly z = fq_divmod(w, y).first;
        if (z.degree() > 0) out.emplace_back(std::move(z), i);
        w = std::move(y);
        c = fq_divmod(c, w).first;
    }
    // Whatever remains in c carries multiplicities divisible by q.
    if (c.degree() > 0)
        for (auto& [h, m] : fq_squarefree_decompose(fq_qth_root(c)))
            out.emplace_back(std::move(h), m * static_cast<unsigned>(qs));
    return out;
}

/* Distinct-degree decomposition of a monic squarefree polynomial of degree
 * 1..4: (product of all irreducible factors of degree d, d).  Needs x^q and
 * x^{q^2} only — after linear and quadratic parts are removed, a cubic or
 * quartic remainder is necessarily a single irreducible factor.
 */
inline std::vector<std::pair<FqPoly, unsigned>> fq_distinct_degree(const FqPoly& f0) {
    std::vector<std::pair<FqPoly, unsigned>> out;
    const mpz_class& q = f0.modulus();
    const FqPoly X = FqPoly::x(q);
    FqPoly f = f0;

    FqPoly h = fq_powmod(X, q, f);
    const FqPoly g1 = fq_gcd(h - X, f);
    if (g1.degree() > 0) {
        out.emplace_back(g1, 1);
        f = fq_divmod(f, g1).first;
        h = fq_divmod(h, f).second;
    }
    if (f.degree() > 0) {
        const FqPoly h2 = fq_powmod(h, q, f);  // x^(q^2) mod f
        const FqPoly g2 = fq_gcd(h2 - X, f);
        if (g2.degree() > 0) {
            out.emplace_back(g2, 2);
            f = fq_divmod(f, g2).first;
        }
        if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
    }
    return out;
}

/* Equal-degree splitting: f is a product of distinct monic irreducibles of
 * degree d.  Linear factors come from a direct root scan when q is small
 * and from Cantor-Zassenhaus splitting otherwise; the only composite case
 * left after that is two irreducible quadratics inside a quartic.
 */
inline void fq_equal_degree(const FqPoly& f, unsigned d, std::vector<FqPoly>& out,
                            gmp_randstate_t st) {
    const mpz_class& q = f.modulus();
    const unsigned deg = static_cast<unsigned>(f.degree());
    if (deg == d) {
        out.push_back(f);
        return;
    }

    if (d == 1) {
        if (mpz_cmp_ui(q.get_mpz_t(), 65536) < 0) {
            const unsigned long qs = q.get_ui();
            for (unsigned long c = 0; c < qs; ++c)
                if (fq_eval(f, c) == 0) out.push_back(FqPoly(q, {q - c, 1}));
            return;
        }
        const mpz_class e = (q - 1) / 2;
        for (int tries = 0; tries < 10000; ++tries) {
            mpz_class a;
            mpz_urandomm(a.get_mpz_t(), st, q.get_mpz_t());
            const FqPoly w = fq_powmod(FqPoly(q, {a, 1}), e, f);
            const FqPoly g = fq_gcd(w - FqPoly::constant(q, 1), f);
            if (g.degree() > 0 && g.degree() < static_cast<int>(deg)) {
                fq_equal_degree(g, d, out, st);
                fq_equal_degree(fq_divmod(f, g).first, d, out, st);
                return;
            }
        }
        throw std::logic_error("fq_equal_degree: splitting did not converge");
    }

    // d == 2, deg == 4.  F_2 has a single irreducible quadratic, so a
    // squarefree product of two of them cannot exist there.
    if (q == 2) throw std::logic_error("fq_equal_degree: impossible quadratic split over F_2");
    const mpz_class e = (q * q - 1) / 2;
    for (int tries = 0; tries < 10000; ++tries) {
        std::vector<mpz_class> rc(4);
        for (auto& v : rc) mpz_urandomm(v.get_mpz_t(), st, q.get_mpz_t());
        const FqPoly a(q, std::move(rc));
        if (a.is_zero()) continue;
        FqPoly g = fq_gcd(a, f);
        if (g.degree() == 2) {
            out.push_back(g);
            out.push_back(fq_divmod(f, g).first);
            return;
        }
        const FqPoly w = fq_powmod(a, e, f);
        g = fq_gcd(w - FqPoly::constant(q, 1), f);
        if (g.degree() == 2) {
            out.push_back(g);
            out.push_back(fq_divmod(f, g).first);
            return;
        }
    }
    throw std::logic_error("fq_equal_degree: splitting did not converge");
}

}  // namespace detail

struct FqFactorization {
    mpz_class q;
    mpz_class unit;  // leading coefficient of the input
    std::vector<std::pair<FqPoly, unsigned>> factors;  // monic irreducible, canonical order
};

// Degree first, then coefficients compared from the top down.
inline bool fq_canonical_less(const FqPoly& a, const FqPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const std::size_t k = static_cast<std::size_t>(i);
        if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
    }
    return false;
}

inline FqFactorization factor_fq(const FqPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("factor_fq: zero polynomial");
    if (p.degree() < 1 || p.degree() > 4)
        throw std::invalid_argument("factor_fq: degree must be between 1 and 4");

    FqFactorization out{p.modulus(), p.leading(), {}};
    gmp_randstate_t st;
    gmp_randinit_mt(st);
    gmp_randseed_ui(st, 0xed5u);
    for (auto& [piece, mult] : detail::fq_squarefree_decompose(make_monic(p)))
        for (auto& [prod, d] : detail::fq_distinct_degree(piece)) {
            std::vector<FqPoly> irr;
            detail::fq_equal_degree(prod, d, irr, st);
            for (auto& g : irr) out.factors.emplace_back(std::move(g), mult);
        }
    gmp_randclear(st);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return fq_canonical_less(a.first, b.first); });
    return out;
}

inline FqFactorization factor_mod(const IntPoly& p, const mpz_class& q) {
    return factor_fq(reduce_mod(p, q));
}

namespace detail::smallfq {

/* Word-sized mirror of the distinct-degree machinery for moduli below 2^31,
 * where coefficients and their products fit comfortably in 64 bits.  Only
 * squarefree inputs are handled — which covers every unramified prime in a
 * cycle-type scan, the one path hot enough to care.
 */
using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // ascending, no trailing zeros

inline void strip(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline u64 inv_mod(u64 a, u64 q) {
    long long t = 0, nt = 1, r = static_cast<long long>(q), nr = static_cast<long long>(a);
    while (nr != 0) {
        const long long k = r / nr;
        t -= k * nt;
        std::swap(t, nt);
        r -= k * nr;
        std::swap(r, nr);
    }
    return t < 0 ? static_cast<u64>(t + static_cast<long long>(q)) : static_cast<u64>(t);
}

inline Poly sub(const Poly& a, const Poly& b, u64 q) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = (x + q - y) % q;
    }
    strip(r);
    return r;
}

inline Poly rem(Poly a, const Poly& b, u64 q) {
    const u64 inv = inv_mod(b.back(), q);
    while (a.size() >= b.size()) {
        const u64 coef = a.back() * inv % q;
        const std::size_t off = a.size() - b.size();
        if (coef != 0)
            for (std::size_t i = 0; i + 1 < b.size(); ++i)
                a[off + i] = (a[off + i] + q - coef * b[i] % q) % q;
        a.pop_back();
    }
    strip(a);
    return a;
}

inline Poly quot(const Poly& a, const Poly& b, u64 q) {
    // exact-division quotient (used to peel off a known factor)
    Poly r = a, out(a.size() - b.size() + 1, 0);
    const u64 inv = inv_mod(b.back(), q);
    while (r.size() >= b.size()) {
        const u64 coef = r.back() * inv % q;
        const std::size_t off = r.size() - b.size();
        out[off] = coef;
        if (coef != 0)
            for (std::size_t i = 0; i + 1 < b.size(); ++i)
                r[off + i] = (r[off + i] + q - coef * b[i] % q) % q;
        r.pop_back();
    }
    return out;
}

inline Poly gcd(Poly a, Poly b, u64 q) {
    while (!b.empty()) {
        Poly r = rem(std::move(a), b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& mod, u64 q) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
    strip(r);
    return rem(std::move(r), mod, q);
}

inline Poly powmod(const Poly& base, u64 e, const Poly& mod, u64 q) {
    Poly r{1};
    if (e == 0) return r;
    const Poly b = rem(base, mod, q);
    for (int i = std::bit_width(e) - 1; i >= 0; --i) {
        r = mulmod(r, r, mod, q);
        if ((e >> i) & 1u) r = mulmod(r, b, mod, q);
    }
    return r;
}

// Factor-degree multiset of a monic squarefree f of degree 1..4; nullopt
// when f is not squarefree (the caller falls back to the general path).
inline std::optional<std::vector<unsigned>> squarefree_degrees(Poly f, u64 q) {
    Poly fp;
    for (std::size_t i = 1; i < f.size(); ++i) fp.push_back(f[i] * (i % q) % q);
    strip(fp);
    if (fp.empty() || gcd(f, fp, q).size() != 1) return std::nullopt;

    std::vector<unsigned> out;
    const Poly X{0, 1};
    Poly h = powmod(X, q, f, q);
    const Poly g1 = gcd(sub(h, X, q), f, q);
    if (g1.size() > 1) {
        out.insert(out.end(), g1.size() - 1, 1);
        f = quot(f, g1, q);
        h = rem(std::move(h), f, q);
    }
    if (f.size() > 1) {
        const Poly h2 = powmod(h, q, f, q);
        const Poly g2 = gcd(sub(h2, X, q), f, q);
        if (g2.size() > 1) {
            out.insert(out.end(), (g2.size() - 1) / 2, 2);
            f = quot(f, g2, q);
        }
        if (f.size() > 1) out.push_back(static_cast<unsigned>(f.size() - 1));
    }
    return out;
}

}  // namespace detail::smallfq

/* Multiset of irreducible-factor degrees of the monic associate, obtained
 * from squarefree + distinct-degree decomposition alone.  Skipping the
 * equal-degree stage avoids the O(q) root scans, and small moduli run in
 * machine words; both matter when this is called for every prime below
 * some bound.
 */
inline std::vector<unsigned> factor_degrees(const IntPoly& p, const mpz_class& q) {
    const FqPoly f = reduce_mod(p, q);
    if (f.degree() < 1 || f.degree() > 4)
        throw std::invalid_argument("factor_degrees: degree must be between 1 and 4");
    if (mpz_cmp_ui(q.get_mpz_t(), 1ul << 31) < 0) {
        const FqPoly fm = make_monic(f);
        detail::smallfq::Poly w(fm.coeffs().size());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = fm.coeffs()[i].get_ui();
        if (auto fast = detail::smallfq::squarefree_degrees(std::move(w), q.get_ui())) return *fast;
    }
    std::vector<unsigned> out;
    for (const auto& [piece, mult] : detail::fq_squarefree_decompose(make_monic(f)))
        for (const auto& [prod, d] : detail::fq_distinct_degree(piece)) {
            const unsigned count = static_cast<unsigned>(prod.degree()) / d;
            for (unsigned i = 0; i < count * mult; ++i) out.push_back(d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const FqPoly& p) {
    if (p.is_zero()) return os << "0 (mod " << p.modulus().get_str() << ")";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const mpz_class& a = p.coeff(static_cast<std::size_t>(i));
        if (a == 0) continue;
        if (!first) os << " + ";
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os << " (mod " << p.modulus().get_str() << ")";
}

}  // namespace qmg

#endif  // QMG_FQ_POLY_HPP
