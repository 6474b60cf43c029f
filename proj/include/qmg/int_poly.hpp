#ifndef QMG_INT_POLY_HPP
#define QMG_INT_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmg {

/* Dense univariate polynomial over Z with arbitrary-precision coefficients.
 * Coefficients are stored in ascending degree order and kept normalized:
 * the zero polynomial is the empty vector, otherwise the last entry is
 * nonzero.  Text I/O (descending order) lives in harness.hpp.
 */
class IntPoly {
public:
    IntPoly() = default;

    explicit IntPoly(std::vector<mpz_class> ascending) : c_(std::move(ascending)) { normalize(); }

    IntPoly(std::initializer_list<long> ascending) {
        c_.reserve(ascending.size());
        for (long v : ascending) c_.emplace_back(v);
        normalize();
    }

    static IntPoly monomial(std::size_t deg, mpz_class coeff = 1) {
        std::vector<mpz_class> c(deg + 1);
        c[deg] = std::move(coeff);
        return IntPoly(std::move(c));
    }

    // x^4 + a x^3 + b x^2 + c x + d
    static IntPoly quartic(mpz_class a, mpz_class b, mpz_class c, mpz_class d) {
        return IntPoly(std::vector<mpz_class>{std::move(d), std::move(c), std::move(b), std::move(a), 1});
    }

    bool is_zero() const { return c_.empty(); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<mpz_class>& coeffs() const { return c_; }

    const mpz_class& coeff(std::size_t i) const {
        static const mpz_class zero{0};
        return i < c_.size() ? c_[i] : zero;
    }

    const mpz_class& leading() const {
        if (c_.empty()) throw std::invalid_argument("leading(): zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly operator-() const {
        std::vector<mpz_class> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return IntPoly(std::move(r));
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return IntPoly(std::move(r));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return IntPoly(std::move(r));
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(r));
    }

    friend IntPoly operator*(const IntPoly& a, const mpz_class& s) {
        std::vector<mpz_class> r(a.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.c_[i] * s;
        return IntPoly(std::move(r));
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<mpz_class> c_;
};

// Exact division by a scalar; throws if any coefficient is not divisible.
inline IntPoly div_exact(const IntPoly& p, const mpz_class& s) {
    if (s == 0) throw std::invalid_argument("div_exact: division by zero");
    std::vector<mpz_class> r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), p.coeffs()[i].get_mpz_t(), s.get_mpz_t());
        if (rem != 0) throw std::invalid_argument("div_exact: coefficient not divisible");
        r[i] = std::move(q);
    }
    return IntPoly(std::move(r));
}

inline mpz_class eval(const IntPoly& p, const mpz_class& x) {
    mpz_class acc{0};
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline IntPoly derivative(const IntPoly& p) {
    if (p.degree() <= 0) return IntPoly();
    std::vector<mpz_class> r(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) r[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(r));
}

// p(x+c) by repeated Ruffini-Horner passes.
inline IntPoly shift(const IntPoly& p, const mpz_class& c) {
    if (p.is_zero() || c == 0) return p;
    std::vector<mpz_class> b = p.coeffs();
    const std::size_t n = b.size() - 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n - 1; j + 1 > i; --j) b[j] += c * b[j + 1];
    return IntPoly(std::move(b));
}

// Divides p by (x - r); returns the quotient or nullopt-like empty result.
// The bool is true iff the division was exact (p(r) == 0).
inline std::pair<IntPoly, bool> divide_out_root(const IntPoly& p, const mpz_class& r) {
    if (p.is_zero()) return {IntPoly(), true};
    std::vector<mpz_class> q(p.coeffs().size() - 1);
    mpz_class carry{0};
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        mpz_class v = p.coeffs()[i] + carry * r;
        if (i == 0) return {IntPoly(std::move(q)), v == 0};
        q[i - 1] = v;
        carry = std::move(v);
    }
    return {IntPoly(), false};  // unreachable
}

/* Resultant via fraction-free Bareiss elimination on the Sylvester matrix.
 * Convention: Res(p,q) = lc(p)^deg(q) * prod over roots a of p of q(a),
 * which is det Syl(p,q) with the q-block below the p-block.
 */
inline mpz_class resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    const int m = p.degree(), n = q.degree();
    mpz_class res;
    if (m == 0) {
        mpz_pow_ui(res.get_mpz_t(), p.leading().get_mpz_t(), static_cast<unsigned long>(n));
        return res;
    }
    if (n == 0) {
        mpz_pow_ui(res.get_mpz_t(), q.leading().get_mpz_t(), static_cast<unsigned long>(m));
        return res;
    }

    const int N = m + n;
    std::vector<std::vector<mpz_class>> M(N, std::vector<mpz_class>(N));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) M[r][r + i] = p.coeffs()[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) M[n + r][r + i] = q.coeffs()[n - i];

    mpz_class prev{1};
    int sign = 1;
    for (int k = 0; k < N - 1; ++k) {
        int piv = -1;
        for (int i = k; i < N; ++i)
            if (M[i][k] != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != k) { std::swap(M[piv], M[k]); sign = -sign; }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                M[i][j] = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(M[i][j].get_mpz_t(), M[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign > 0 ? M[N - 1][N - 1] : mpz_class(-M[N - 1][N - 1]);
}

// (-1)^(n(n-1)/2) Res(p, p') / lc(p).  Zero iff p has a repeated root.
inline mpz_class discriminant(const IntPoly& p) {
    const int n = p.degree();
    if (n < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
    mpz_class r = resultant(p, derivative(p));
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t(), p.leading().get_mpz_t());
    if (rem != 0) throw std::logic_error("discriminant: resultant not divisible by leading coefficient");
    return ((static_cast<long>(n) * (n - 1) / 2) % 2 == 0) ? q : mpz_class(-q);
}

namespace detail {

inline mpz_class poly_content(const std::vector<mpz_class>& c) {
    mpz_class g{0};
    for (const auto& a : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    return g;  // 0 for the zero polynomial, positive otherwise
}

// Sign of a polynomial at +inf (dir=+1) or -inf (dir=-1).
inline int sign_at_infinity(const std::vector<mpz_class>& c, int dir) {
    int s = sgn(c.back());
    if (dir < 0 && (c.size() - 1) % 2 == 1) s = -s;
    return s;
}

}  // namespace detail

/* Number of distinct real roots by Sturm's theorem.  The chain uses integer
 * pseudo-remainders; when the pseudo-division multiplier lc(B)^(delta+1) is
 * negative the remainder is kept un-negated so every chain element stays a
 * positive multiple of the rational Sturm polynomial.  Content is divided
 * out after each step to limit coefficient growth.
 * Requires gcd(p, p') constant (p squarefree over R); throws otherwise.
 */
inline int sturm_real_root_count(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_real_root_count: zero polynomial");
    if (p.degree() == 0) return 0;

    std::vector<std::vector<mpz_class>> chain;
    chain.push_back(p.coeffs());
    chain.push_back(derivative(p).coeffs());

    while (true) {
        const auto& A = chain[chain.size() - 2];
        const auto& B = chain[chain.size() - 1];
        const std::size_t degA = A.size() - 1, degB = B.size() - 1;

        // R = prem(A, B) with uniform multiplier lc(B)^(degA-degB+1).
        std::vector<mpz_class> R = A;
        const mpz_class& lcB = B.back();
        unsigned long e = static_cast<unsigned long>(degA - degB) + 1;
        while (R.size() >= B.size() && !R.empty()) {
            mpz_class lead = R.back();
            std::size_t off = R.size() - B.size();
            for (std::size_t i = 0; i < R.size(); ++i) R[i] *= lcB;
            for (std::size_t i = 0; i < B.size(); ++i) R[off + i] -= lead * B[i];
            while (!R.empty() && R.back() == 0) R.pop_back();
            --e;
        }
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), lcB.get_mpz_t(), e);
        for (auto& a : R) a *= scale;

        if (R.empty()) break;

        const bool mult_positive = (sgn(lcB) > 0) || ((degA - degB + 1) % 2 == 0);
        mpz_class cont = detail::poly_content(R);
        for (auto& a : R) {
            mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), cont.get_mpz_t());
            if (mult_positive) a = -a;
        }
        chain.push_back(std::move(R));
    }

    if (chain.back().size() > 1)
        throw std::invalid_argument("sturm_real_root_count: gcd(p, p') is not constant");

    int v_neg = 0, v_pos = 0;
    int prev_neg = 0, prev_pos = 0;
    for (const auto& s : chain) {
        int sp = detail::sign_at_infinity(s, +1);
        int sn = detail::sign_at_infinity(s, -1);
        if (prev_pos != 0 && sp != prev_pos) ++v_pos;
        if (prev_neg != 0 && sn != prev_neg) ++v_neg;
        prev_pos = sp;
        prev_neg = sn;
    }
    return v_neg - v_pos;
}

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const mpz_class& a = p.coeff(static_cast<std::size_t>(i));
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        mpz_class m = abs(a);
        if (m != 1 || i == 0) os << m.get_str();
        if (i > 0) {
            if (m != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os;
}

}  // namespace qmg

#endif  // QMG_INT_POLY_HPP
