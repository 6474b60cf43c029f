#ifndef QMG_INT_ARITH_HPP
#define QMG_INT_ARITH_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qmg {

enum class Tristate { False, True, Unknown };

inline Tristate tri_from_bool(bool b) { return b ? Tristate::True : Tristate::False; }

// Three-valued conjunction: False dominates, then Unknown.
inline Tristate tri_and(Tristate a, Tristate b) {
    if (a == Tristate::False || b == Tristate::False) return Tristate::False;
    if (a == Tristate::Unknown || b == Tristate::Unknown) return Tristate::Unknown;
    return Tristate::True;
}

/* Caps the search effort spent on factoring so every answer is reproducible:
 * the same inputs with the same budget always give the same result, and
 * routines report Unknown / incomplete rather than run forever.
 */
struct Budget {
    unsigned long long rho_iterations = 1ull << 26;
    unsigned long seed = 0x9e3779b9ul;
};

// Primes below 10^6, computed once.
inline const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        const std::uint32_t limit = 1000000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t p = 2; p <= limit; ++p) {
            if (composite[p]) continue;
            out.push_back(p);
            for (std::uint64_t q = static_cast<std::uint64_t>(p) * p; q <= limit; q += p)
                composite[static_cast<std::uint32_t>(q)] = true;
        }
        return out;
    }();
    return primes;
}

/* Miller-Rabin with the thirteen smallest prime bases, which is a proven
 * deterministic test for n < 3317044064679887385961981 (Sorenson-Webster).
 * Larger inputs additionally run 64 fixed pseudorandom bases, so a composite
 * slips through with probability at most 4^-64.
 */
inline bool is_probable_prime(const mpz_class& n) {
    if (n < 2) return false;
    if (mpz_cmp_ui(n.get_mpz_t(), 1000000) <= 0) {
        const auto& P = small_primes();
        return std::binary_search(P.begin(), P.end(), static_cast<std::uint32_t>(n.get_ui()));
    }
    static constexpr unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned long b : bases)
        if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;

    const mpz_class nm1 = n - 1;
    const unsigned long r = mpz_scan1(nm1.get_mpz_t(), 0);
    mpz_class d;
    mpz_tdiv_q_2exp(d.get_mpz_t(), nm1.get_mpz_t(), r);

    auto witnesses_composite = [&](const mpz_class& a) {
        mpz_class x;
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1) return false;
        for (unsigned long i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == nm1) return false;
        }
        return true;
    };

    for (unsigned long b : bases)
        if (witnesses_composite(mpz_class(b))) return false;

    static const mpz_class proven_bound("3317044064679887385961981");
    if (n < proven_bound) return true;

    gmp_randstate_t st;
    gmp_randinit_mt(st);
    gmp_randseed_ui(st, 0x51u);
    const mpz_class span = n - 4;
    mpz_class a;
    bool prime = true;
    for (int i = 0; i < 64 && prime; ++i) {
        mpz_urandomm(a.get_mpz_t(), st, span.get_mpz_t());
        a += 2;
        if (witnesses_composite(a)) prime = false;
    }
    gmp_randclear(st);
    return prime;
}

namespace detail {

/* Brent's cycle variant of Pollard rho with batched gcds.  Expects an odd
 * composite with no prime factor below the trial-division sieve.  Decrements
 * `iters` once per squaring; returns 0 if the budget runs out first.
 */
inline mpz_class pollard_rho_brent(const mpz_class& n, unsigned long long& iters, gmp_randstate_t st) {
    const unsigned long batch = 128;
    for (unsigned long c = 1; iters > 0; ++c) {
        mpz_class y, x, ys, q{1}, g{1}, t;
        mpz_urandomm(y.get_mpz_t(), st, n.get_mpz_t());
        for (unsigned long r = 1; g == 1; r *= 2) {
            x = y;
            for (unsigned long j = 0; j < r; ++j) {
                if (iters == 0) return 0;
                --iters;
                y = (y * y + c) % n;
            }
            for (unsigned long k = 0; k < r && g == 1; k += batch) {
                ys = y;
                const unsigned long lim = std::min(batch, r - k);
                for (unsigned long j = 0; j < lim; ++j) {
                    if (iters == 0) return 0;
                    --iters;
                    y = (y * y + c) % n;
                    t = abs(x - y);
                    q = q * t % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
        // The batched gcd jumped past the factor; replay one step at a time.
        g = 1;
        while (g == 1) {
            if (iters == 0) return 0;
            --iters;
            ys = (ys * ys + c) % n;
            t = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        }
        if (g != n) return g;
        // Full-cycle collision under this polynomial; try x^2 + (c+1).
    }
    return 0;
}

}  // namespace detail

struct FactoredInt {
    int sign = 1;
    std::vector<std::pair<mpz_class, unsigned>> prime_powers;  // ascending primes
    mpz_class cofactor{1};  // product of pieces the budget could not split
    bool complete = true;

    mpz_class value() const {
        mpz_class v{sign};
        for (const auto& [p, e] : prime_powers) {
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), e);
            v *= pw;
        }
        return v * cofactor;
    }
};

/* Factor by trial division over the sieve, then repeated perfect-power
 * peeling and Pollard rho on what remains.  Pieces that rho cannot split
 * within the budget end up multiplied into `cofactor` with complete=false.
 */
inline FactoredInt factor(const mpz_class& n, const Budget& budget = {}) {
    if (n == 0) throw std::invalid_argument("factor: 0 has no prime factorization");
    FactoredInt out;
    out.sign = n < 0 ? -1 : 1;
    mpz_class m = abs(n);
    std::map<mpz_class, unsigned> acc;

    const auto& P = small_primes();
    std::size_t i = 0;
    while (!m.fits_ulong_p() && i < P.size()) {
        const unsigned long p = P[i];
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++acc[mpz_class(p)];
        } else {
            ++i;
        }
    }
    if (m.fits_ulong_p()) {
        unsigned long v = m.get_ui();
        for (; i < P.size() && v > 1; ++i) {
            const unsigned long p = P[i];
            if (static_cast<unsigned long long>(p) * p > v) {
                ++acc[mpz_class(v)];  // no smaller prime divides it
                v = 1;
                break;
            }
            while (v % p == 0) {
                v /= p;
                ++acc[mpz_class(p)];
            }
        }
        m = v;
    }

    if (m > 1) {
        unsigned long long iters = budget.rho_iterations;
        gmp_randstate_t st;
        gmp_randinit_mt(st);
        gmp_randseed_ui(st, budget.seed);
        std::vector<std::pair<mpz_class, unsigned>> work{{m, 1u}};
        while (!work.empty()) {
            auto [v, mult] = std::move(work.back());
            work.pop_back();
            if (is_probable_prime(v)) {
                acc[v] += mult;
                continue;
            }
            if (mpz_perfect_power_p(v.get_mpz_t())) {
                const unsigned long maxk = mpz_sizeinbase(v.get_mpz_t(), 2);
                for (unsigned long k = 2; k <= maxk; ++k) {
                    mpz_class root;
                    if (mpz_root(root.get_mpz_t(), v.get_mpz_t(), k) != 0) {
                        work.emplace_back(std::move(root), mult * static_cast<unsigned>(k));
                        break;
                    }
                }
                continue;
            }
            mpz_class d = detail::pollard_rho_brent(v, iters, st);
            if (d == 0) {
                out.complete = false;
                mpz_class pw;
                mpz_pow_ui(pw.get_mpz_t(), v.get_mpz_t(), mult);
                out.cofactor *= pw;
                continue;
            }
            work.emplace_back(v / d, mult);
            work.emplace_back(std::move(d), mult);
        }
        gmp_randclear(st);
    }

    out.prime_powers.assign(acc.begin(), acc.end());
    return out;
}

/* Squarefree test with early exit: the sieve pass bails on the first
 * repeated prime without factoring the rest.  Unknown only when the
 * budget leaves an unsplit cofactor whose known part is clean.
 */
inline Tristate is_squarefree(const mpz_class& n, const Budget& budget = {}) {
    if (n == 0) return Tristate::False;
    mpz_class m = abs(n);
    if (m == 1) return Tristate::True;

    const auto& P = small_primes();
    std::size_t i = 0;
    while (!m.fits_ulong_p() && i < P.size()) {
        const unsigned long p = P[i];
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return Tristate::False;
        }
        ++i;
    }
    if (m.fits_ulong_p()) {
        unsigned long v = m.get_ui();
        for (; i < P.size(); ++i) {
            const unsigned long p = P[i];
            if (static_cast<unsigned long long>(p) * p > v) return Tristate::True;  // v is 1 or prime
            if (v % p == 0) {
                v /= p;
                if (v % p == 0) return Tristate::False;
            }
        }
        if (v == 1) return Tristate::True;
        m = v;
    }

    // No prime factor below the sieve limit remains.
    if (is_probable_prime(m)) return Tristate::True;
    if (mpz_perfect_power_p(m.get_mpz_t())) return Tristate::False;
    const FactoredInt f = factor(m, budget);
    for (const auto& [p, e] : f.prime_powers)
        if (e >= 2) return Tristate::False;
    return f.complete ? Tristate::True : Tristate::Unknown;
}

// n with its largest square divisor removed, sign preserved; nullopt when
// the factorization is incomplete.
inline std::optional<mpz_class> squarefree_part(const mpz_class& n, const Budget& budget = {}) {
    if (n == 0) throw std::invalid_argument("squarefree_part: undefined for 0");
    const FactoredInt f = factor(n, budget);
    if (!f.complete) return std::nullopt;
    mpz_class core{f.sign};
    for (const auto& [p, e] : f.prime_powers)
        if (e % 2 == 1) core *= p;
    return core;
}

inline bool is_perfect_square(const mpz_class& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Floor square root of a nonnegative integer.
inline mpz_class isqrt(const mpz_class& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

}  // namespace qmg

#endif  // QMG_INT_ARITH_HPP
