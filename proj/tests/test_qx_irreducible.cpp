#include <catch2/catch_amalgamated.hpp>

#include "qmg/qx_irreducible.hpp"

using qmg::Budget;
using qmg::IntPoly;

namespace {

const mpz_class M89("618970019642690137449562111");
const mpz_class M107("162259276829213363391578010288127");

/* Independent reducibility oracle for a monic quartic with small (long)
 * coefficients.  Linear factors are found by scanning every integer inside
 * the Cauchy root bound; quadratic splits by enumerating the leading two
 * unknowns of (x^2+Px+u)(x^2+Rx+v) over a box comfortably wider than the
 * Mignotte factor-coefficient bound and solving for the rest.
 */
bool brute_quartic_reducible(long a, long b, long c, long d) {
    for (long r = -9; r <= 9; ++r)
        if ((((r + a) * r + b) * r + c) * r + d == 0) return true;
    for (long P = -49; P <= 49; ++P)
        for (long u = -49; u <= 49; ++u) {
            const long R = a - P;
            const long v = b - u - P * R;
            if (P * v + R * u == c && static_cast<long long>(u) * v == d) return true;
        }
    return false;
}

bool brute_cubic_reducible(long a, long b, long c) {
    for (long r = -9; r <= 9; ++r)
        if (((r + a) * r + b) * r + c == 0) return true;
    return false;
}

bool brute_quadratic_reducible(long b, long c) {
    const long D = b * b - 4 * c;
    if (D < 0) return false;
    for (long s = 0; s * s <= D; ++s)
        if (s * s == D) return true;
    return false;
}

}  // namespace

TEST_CASE("rational_roots on known polynomials") {
    using V = std::vector<mpz_class>;
    // x(x-2)(x+3)
    REQUIRE(qmg::rational_roots(IntPoly{0, -6, 1, 1}) == V{-3, 0, 2});
    // (x-1)^2 (x+5)
    REQUIRE(qmg::rational_roots(IntPoly{5, -9, 3, 1}) == V{-5, 1, 1});
    REQUIRE(qmg::rational_roots(IntPoly{1, 0, 1}) == V{});
    // x^3 - 8 = (x-2)(x^2+2x+4)
    REQUIRE(qmg::rational_roots(IntPoly{-8, 0, 0, 1}) == V{2});
    // (x-1)^3
    REQUIRE(qmg::rational_roots(IntPoly{-1, 3, -3, 1}) == V{1, 1, 1});
    REQUIRE(qmg::rational_roots(IntPoly{0, 0, 1}) == V{0, 0});
    REQUIRE(qmg::rational_roots(IntPoly{1}) == V{});

    REQUIRE_THROWS_AS(qmg::rational_roots(IntPoly{}), std::invalid_argument);
    REQUIRE_THROWS_AS(qmg::rational_roots(IntPoly{7}), std::invalid_argument);
    REQUIRE_THROWS_AS(qmg::rational_roots(IntPoly{1, 2}), std::invalid_argument);

    // Constant term out of factoring reach within the budget.
    IntPoly hard = IntPoly{1, 1} * IntPoly(std::vector<mpz_class>{M89 * M107, 1});
    REQUIRE_THROWS_AS(qmg::rational_roots(hard, Budget{100, 1}), std::runtime_error);
}

TEST_CASE("is_irreducible on known polynomials") {
    REQUIRE(qmg::is_irreducible(IntPoly{-5, 0, 1}));
    REQUIRE(qmg::is_irreducible(IntPoly{1, 1, 1}));
    REQUIRE(qmg::is_irreducible(IntPoly{-1, -1, 1}));
    REQUIRE_FALSE(qmg::is_irreducible(IntPoly{-4, 0, 1}));
    REQUIRE_FALSE(qmg::is_irreducible(IntPoly{0, 5, 1}));

    REQUIRE(qmg::is_irreducible(IntPoly{-2, 0, 0, 1}));
    REQUIRE_FALSE(qmg::is_irreducible(IntPoly{-1, 0, 0, 1}));

    REQUIRE(qmg::is_irreducible(IntPoly{1, 0, 0, 0, 1}));       // x^4+1
    REQUIRE_FALSE(qmg::is_irreducible(IntPoly{4, 0, 0, 0, 1}));  // (x^2-2x+2)(x^2+2x+2)
    REQUIRE(qmg::is_irreducible(IntPoly{1, 0, 4, 0, 1}));
    REQUIRE(qmg::is_irreducible(IntPoly{1, 1, 1, 1, 1}));  // 5th cyclotomic
    REQUIRE_FALSE(qmg::is_irreducible(IntPoly{4, 0, -5, 0, 1}));  // (x^2-1)(x^2-4)
    REQUIRE_FALSE(qmg::is_irreducible(IntPoly{0, 0, 1, 2, 1}));   // x^2 (x+1)^2
    REQUIRE(qmg::is_irreducible(IntPoly::quartic(-10, 25, -20, 5)));
    REQUIRE(qmg::is_irreducible(IntPoly::quartic(-8, 16, -8, -2)));

    REQUIRE_THROWS_AS(qmg::is_irreducible(IntPoly{1, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(qmg::is_irreducible(IntPoly{1, 1, 1, 1, 1, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(qmg::is_irreducible(IntPoly{1, 0, 2}), std::invalid_argument);
}

TEST_CASE("is_irreducible agrees with brute force for quadratics") {
    for (long b = -10; b <= 10; ++b)
        for (long c = -10; c <= 10; ++c) {
            if (c == 0) continue;  // handled as trivially reducible
            REQUIRE(qmg::is_irreducible(IntPoly{c, b, 1}) == !brute_quadratic_reducible(b, c));
        }
}

TEST_CASE("is_irreducible agrees with brute force for cubics") {
    for (long a = -8; a <= 8; ++a)
        for (long b = -8; b <= 8; ++b)
            for (long c = -8; c <= 8; ++c) {
                if (c == 0) continue;
                REQUIRE(qmg::is_irreducible(IntPoly{c, b, a, 1}) == !brute_cubic_reducible(a, b, c));
            }
}

TEST_CASE("is_irreducible agrees with brute force for quartics") {
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b)
            for (long c = -4; c <= 4; ++c)
                for (long d = -4; d <= 4; ++d) {
                    if (d == 0) continue;
                    bool got = qmg::is_irreducible(IntPoly{d, c, b, a, 1});
                    bool want = !brute_quartic_reducible(a, b, c, d);
                    if (got != want) {
                        CAPTURE(a, b, c, d);
                        REQUIRE(got == want);
                    }
                }
    SUCCEED("exhaustive box matched");
}

TEST_CASE("eisenstein_witness") {
    // First hit scanning shifts ascending: p(x-1) = x^4-4x^3+10x^2-12x+6.
    auto w = qmg::eisenstein_witness(IntPoly{1, 0, 4, 0, 1}, -2, 2);
    REQUIRE(w.has_value());
    REQUIRE(w->prime == 2);
    REQUIRE(w->shift == -1);

    auto w2 = qmg::eisenstein_witness(IntPoly{-2, 0, 1}, 0, 0);
    REQUIRE(w2.has_value());
    REQUIRE(w2->prime == 2);
    REQUIRE(w2->shift == 0);

    // x^2+x+1 shifted by -2 is x^2-3x+3, Eisenstein at 3.
    auto w3 = qmg::eisenstein_witness(IntPoly{1, 1, 1}, -3, 3);
    REQUIRE(w3.has_value());
    REQUIRE(w3->prime == 3);
    REQUIRE(w3->shift == -2);

    // A reducible polynomial can never acquire a witness.
    REQUIRE_FALSE(qmg::eisenstein_witness(IntPoly{-1, 0, 1}, -5, 5).has_value());
    // Unit constant terms offer no candidate primes.
    REQUIRE_FALSE(qmg::eisenstein_witness(IntPoly{1, 0, 4, 0, 1}, 0, 0).has_value());
    // Empty range.
    REQUIRE_FALSE(qmg::eisenstein_witness(IntPoly{-2, 0, 1}, 3, 2).has_value());

    REQUIRE_THROWS_AS(qmg::eisenstein_witness(IntPoly{1, 1}, 0, 1), std::invalid_argument);
}

TEST_CASE("Irreducibility certified by an inert prime when the constant resists factoring") {
    const mpz_class M = M89 * M107;
    const Budget none{0, 1};  // the divisor route would need to split M and throw

    // Biquadratics around M: irreducible, settled by some inert small prime.
    REQUIRE(qmg::is_irreducible(IntPoly::quartic(0, 1, 0, M), none));
    REQUIRE(qmg::is_irreducible(IntPoly::quartic(0, 3, 0, (9 - M) / 4), none));
    // Degree 2 and 3 analogues.
    REQUIRE(qmg::is_irreducible(IntPoly{std::vector<mpz_class>{-M, 0, 1}}, none));
    REQUIRE(qmg::is_irreducible(IntPoly{std::vector<mpz_class>{-M, 0, 0, 1}}, none));

    // (x^2+1)(x^2+M89^2): no inert prime exists, but the constant is a prime
    // square, so the fallback divisor search still runs to completion.
    const IntPoly split = IntPoly{1, 0, 1} * IntPoly{std::vector<mpz_class>{M89 * M89, 0, 1}};
    REQUIRE_FALSE(qmg::is_irreducible(split, none));
}
