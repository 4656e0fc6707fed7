#include <doctest.h>

#include <cmath>

#include <mlucas/polyfam.hpp>

using namespace mlucas::polyfam;
using mlucas::arith::Dyadic;
using mlucas::arith::GaussianDyadic;
using mlucas::arith::Integer;

namespace
{

Poly P(std::initializer_list<long> ints)
{
    std::vector<GaussianDyadic> c;
    for (long v : ints) {
        c.emplace_back(v);
    }
    return Poly{std::move(c)};
}

Poly cplx(const Poly &re, const Poly &im)
{
    return re + GaussianDyadic::i() * im;
}

Dyadic q(long num, std::int64_t exp)
{
    return Dyadic::normalize(num, exp);
}

// Table 2, m_n(x) for n = 0..5
const std::vector<Poly> table2_m = {
    P({2}),
    P({0, 3}),
    P({-4, 0, 9}),
    P({0, -18, 0, 27}),
    P({8, 0, -72, 0, 81}),
    P({0, 60, 0, -270, 0, 243}),
};

} // namespace

TEST_CASE("ml_poly examples")
{
    CHECK(ml_poly(2).value == table2_m[2]);
    CHECK(ml_poly(4).value == table2_m[4]);
    CHECK(ml_poly(5).value == table2_m[5]);
    CHECK_THROWS_AS(ml_poly(-1), std::invalid_argument);
}

TEST_CASE("gml_poly examples")
{
    const Poly gm0{GaussianDyadic{2}, GaussianDyadic{Dyadic{}, q(3, 1)}};
    CHECK(gml_poly(0).value == gm0);
    CHECK(gml_poly(2).value == cplx(table2_m[2], P({0, 3})));
    CHECK(gml_poly(3).value == cplx(table2_m[3], table2_m[2]));
}

TEST_CASE("gml_poly_from_ml examples")
{
    CHECK(gml_poly_from_ml(1).value == cplx(P({0, 3}), P({2})));
    CHECK(gml_poly_from_ml(4).value == cplx(table2_m[4], table2_m[3]));
    CHECK(gml_poly_from_ml(2).value == cplx(table2_m[2], P({0, 3})));
    CHECK_THROWS_AS(gml_poly_from_ml(0), std::invalid_argument);
}

TEST_CASE("explicit formulas")
{
    CHECK(ml_poly_explicit(3).value == table2_m[3]);
    CHECK(ml_poly_explicit(0).value == P({2}));
    CHECK(ml_poly_explicit(5).value == table2_m[5]);

    CHECK(gml_poly_explicit(1).value == cplx(P({0, 3}), P({2})));
    CHECK(gml_poly_explicit(3).value == cplx(table2_m[3], table2_m[2]));
    CHECK(gml_poly_explicit(5).value == cplx(table2_m[5], table2_m[4]));
    CHECK_THROWS_AS(gml_poly_explicit(0), std::invalid_argument);
}

TEST_CASE("negative extensions")
{
    const Poly m_1 = Poly{GaussianDyadic{}, GaussianDyadic{q(3, 1)}};
    const Poly m_2 = Poly{GaussianDyadic{-1}, GaussianDyadic{}, GaussianDyadic{q(9, 2)}};
    const Poly m_3 = Poly{GaussianDyadic{}, GaussianDyadic{q(-9, 2)}, GaussianDyadic{}, GaussianDyadic{q(27, 3)}};
    CHECK(ml_poly_negative(1).value == m_1);
    CHECK(ml_poly_negative(2).value == m_2);
    CHECK(ml_poly_negative(3).value == m_3);
    CHECK(ml_poly_negative(3).index == -3);
    CHECK_THROWS_AS(ml_poly_negative(0), std::invalid_argument);

    CHECK(gml_poly_negative(1).value == cplx(m_1, m_2));
    CHECK(gml_poly_negative(2).value == cplx(m_2, m_3));
    // m_3(x)/8 + (i/16) m_4(x)
    CHECK(gml_poly_negative(3).value == cplx(table2_m[3].scaled_pow2(-3), table2_m[4].scaled_pow2(-4)));
    CHECK_THROWS_AS(gml_poly_negative(-1), std::invalid_argument);
}

TEST_CASE("backward recurrence through negative polynomial indices")
{
    const Poly three_x = Poly::monomial(GaussianDyadic{3}, 1);
    const GaussianDyadic two{2};
    const auto m = ml_poly_range(40);
    const auto gm = gml_poly_range(40);
    auto mk = [&](std::int64_t k) { return k >= 0 ? m[k] : ml_poly_negative(-k).value; };
    auto gk = [&](std::int64_t k) { return k >= 0 ? gm[k] : gml_poly_negative(-k).value; };
    for (std::int64_t k = -20; k <= 40; ++k) {
        CHECK(mk(k) == three_x * mk(k - 1) - two * mk(k - 2));
        CHECK(gk(k) == three_x * gk(k - 1) - two * gk(k - 2));
    }
}

TEST_CASE("route agreement and structural laws up to 50")
{
    const auto m = ml_poly_range(50);
    const auto gm = gml_poly_range(50);
    for (std::int64_t n = 0; n <= 50; ++n) {
        CHECK(ml_poly_explicit(n).value == m[n]);
        if (n >= 1) {
            CHECK(gml_poly_explicit(n).value == gm[n]);
            CHECK(gml_poly_from_ml(n).value == gm[n]);
            CHECK(gm[n].imag_part() == m[n - 1]);
            CHECK(m[n].degree() == n);
            CHECK(m[n].coeffs().back() == GaussianDyadic{mlucas::arith::ipow(Integer{3}, n)});
            CHECK(ml_poly_negative(n).value.scaled_pow2(n) == m[n]);
        }
        for (std::int64_t k = 0; k <= n; ++k) {
            if ((n - k) % 2 != 0) {
                CHECK(m[n].coeff(k).is_zero());
            }
        }
    }
}

TEST_CASE("specialization at x = 1 gives the number families")
{
    const auto m = ml_poly_range(200);
    const auto gm = gml_poly_range(200);
    for (std::int64_t n = 0; n <= 200; ++n) {
        CHECK(m[n].eval(GaussianDyadic{1}) == mlucas::seq::ml_binet(n).value);
        CHECK(gm[n].eval(GaussianDyadic{1}) == mlucas::seq::gml_binet(n).value);
    }
}

TEST_CASE("char_roots")
{
    for (double x : {1.0, 2.0, 3.0, 2.5, 0.5, -0.3}) {
        const CharRoots r = char_roots(x);
        CHECK(std::abs(r.lambda1 + r.lambda2 - 3.0 * x) < 1e-12);
        CHECK(std::abs(r.lambda1 * r.lambda2 - 2.0) < 1e-12);
    }
    const CharRoots one = char_roots(1.0);
    CHECK(one.lambda1 == std::complex<double>{2.0, 0.0});
    CHECK(one.lambda2 == std::complex<double>{1.0, 0.0});
}

TEST_CASE("binet_numeric examples")
{
    CHECK(binet_numeric(2, 1.0) == std::complex<double>{5.0, 3.0});
    for (double x : {0.7, 2.0, -1.5}) {
        const auto v = binet_numeric(0, x);
        CHECK(v.real() == doctest::Approx(2.0));
        CHECK(v.imag() == doctest::Approx(1.5 * x));
    }
    // 27*8 - 18*2 and 9*4 - 4
    const auto v = binet_numeric(3, 2.0);
    CHECK(std::abs(v - std::complex<double>{180.0, 32.0}) <= 1e-9 * (1.0 + 180.0));
    CHECK(to_complex(gml_poly(3).value.eval(GaussianDyadic{2})) == std::complex<double>{180.0, 32.0});
}

TEST_CASE("numeric Binet spot-check against exact evaluation")
{
    const auto gm = gml_poly_range(30);
    const std::vector<std::pair<double, GaussianDyadic>> points = {
        {1.0, GaussianDyadic{1}},
        {2.0, GaussianDyadic{2}},
        {3.0, GaussianDyadic{3}},
        {2.5, GaussianDyadic{q(5, 1)}},
    };
    for (const auto &[xd, xq] : points) {
        for (std::int64_t n = 0; n <= 30; ++n) {
            const auto exact = to_complex(gm[n].eval(xq));
            const auto approx = binet_numeric(n, xd);
            CHECK(std::abs(approx - exact) <= 1e-9 * (1.0 + std::abs(exact)));
            if (xd == 1.0) {
                CHECK(approx == exact);
            }
        }
    }
}
