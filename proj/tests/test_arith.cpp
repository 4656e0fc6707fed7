#include <doctest.h>

#include <random>

#include <mlucas/arith.hpp>

using namespace mlucas::arith;

namespace
{

struct Gen {
    std::mt19937_64 rng;

    explicit Gen(std::uint64_t seed) : rng(seed) {}

    long small(long lo, long hi)
    {
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Dyadic dyadic()
    {
        return Dyadic::normalize(small(-60, 60), small(0, 6));
    }
    GaussianDyadic gaussian()
    {
        return {dyadic(), dyadic()};
    }
    Poly poly(long max_deg)
    {
        std::vector<GaussianDyadic> c;
        const long deg = small(0, max_deg);
        for (long k = 0; k <= deg; ++k) {
            c.push_back(gaussian());
        }
        return Poly{std::move(c)};
    }
};

bool is_normalized(const Dyadic &d)
{
    if (d.num() == 0) {
        return d.exp() == 0;
    }
    return d.exp() == 0 || (d.num() & 1) != 0;
}

Dyadic half_of(long n, std::int64_t k)
{
    return Dyadic::normalize(n, k);
}

} // namespace

TEST_CASE("dyadic_normalize examples")
{
    const Dyadic a = Dyadic::normalize(6, 1);
    CHECK(a.num() == 3);
    CHECK(a.exp() == 0);

    const Dyadic z = Dyadic::normalize(0, 5);
    CHECK(z.num() == 0);
    CHECK(z.exp() == 0);

    const Dyadic b = Dyadic::normalize(9, 3);
    CHECK(b.num() == 9);
    CHECK(b.exp() == 3);

    const Dyadic neg = Dyadic::normalize(-12, 3);
    CHECK(neg.num() == -3);
    CHECK(neg.exp() == 1);

    CHECK_THROWS_AS(Dyadic::normalize(1, -1), std::invalid_argument);
}

TEST_CASE("dyadic arithmetic")
{
    CHECK(half_of(1, 1) + half_of(1, 1) == Dyadic{1});
    CHECK(half_of(3, 2) - half_of(1, 2) == half_of(1, 1));
    CHECK(half_of(3, 1) * half_of(2, 0) == Dyadic{3});
    CHECK(Dyadic{4}.is_unit());
    CHECK(half_of(-1, 3).is_unit());
    CHECK_FALSE(Dyadic{3}.is_unit());
    CHECK_FALSE(Dyadic{0}.is_unit());
    CHECK(Dyadic{4}.inverse() == half_of(1, 2));
    CHECK(half_of(-1, 3).inverse() == Dyadic{-8});
    CHECK_THROWS_AS(Dyadic{6}.inverse(), not_invertible);
    CHECK(Dyadic{3}.scaled_pow2(-2) == half_of(3, 2));
    CHECK(half_of(3, 2).scaled_pow2(5) == Dyadic{24});
    CHECK(half_of(-5, 3).to_double() == doctest::Approx(-0.625));
}

TEST_CASE("dyadic ring laws on random triples")
{
    Gen g(0xD1AD1C);
    for (int t = 0; t < 500; ++t) {
        const Dyadic a = g.dyadic(), b = g.dyadic(), c = g.dyadic();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == Dyadic{});
        CHECK(is_normalized(a * b));
        CHECK(is_normalized(a + b));
        const Dyadic again = Dyadic::normalize(a.num(), a.exp());
        CHECK(again == a);
        CHECK(again.num() == a.num());
        CHECK(again.exp() == a.exp());
    }
}

TEST_CASE("gaussian_mul examples")
{
    const GaussianDyadic i = GaussianDyadic::i();
    CHECK(i * i == GaussianDyadic{-1});

    const GaussianDyadic gm0{Dyadic{2}, half_of(3, 1)};
    CHECK(gm0 * GaussianDyadic{1} == gm0);

    // (3 + 2i)(1 + i) = 3 + 3i + 2i + 2i^2
    const GaussianDyadic expected{Dyadic{3 - 2}, Dyadic{3 + 2}};
    CHECK(GaussianDyadic{Dyadic{3}, Dyadic{2}} * GaussianDyadic{Dyadic{1}, Dyadic{1}} == expected);
}

TEST_CASE("gaussian ring laws and conjugation on random values")
{
    Gen g(42);
    for (int t = 0; t < 300; ++t) {
        const GaussianDyadic a = g.gaussian(), b = g.gaussian(), c = g.gaussian();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a * a.conj() == GaussianDyadic{a.norm()});
    }
}

TEST_CASE("gaussian units")
{
    const GaussianDyadic one_plus_i{Dyadic{1}, Dyadic{1}};
    CHECK(one_plus_i.is_unit());
    CHECK(one_plus_i * one_plus_i.inverse() == GaussianDyadic{1});
    CHECK(GaussianDyadic{2}.inverse() == GaussianDyadic{half_of(1, 1)});
    CHECK_FALSE(GaussianDyadic{Dyadic{2}, Dyadic{1}}.is_unit());
    CHECK_THROWS_AS(GaussianDyadic{3}.inverse(), not_invertible);
    CHECK_THROWS_AS(GaussianDyadic{}.inverse(), not_invertible);
}

TEST_CASE("poly_eval examples")
{
    const Poly m2{GaussianDyadic{-4}, GaussianDyadic{0}, GaussianDyadic{9}};
    CHECK(poly_eval(m2, GaussianDyadic{1}) == GaussianDyadic{5});
    CHECK(poly_eval(Poly{}, GaussianDyadic{Dyadic{7}, half_of(1, 3)}) == GaussianDyadic{});

    // m_3(x) = 27x^3 - 18x at x = 2: 27*8 - 36
    const Poly m3{GaussianDyadic{0}, GaussianDyadic{-18}, GaussianDyadic{0}, GaussianDyadic{27}};
    CHECK(poly_eval(m3, GaussianDyadic{2}) == GaussianDyadic{27 * 8 - 18 * 2});
}

TEST_CASE("poly invariants")
{
    const Poly p{GaussianDyadic{1}, GaussianDyadic{0}, GaussianDyadic{0}};
    CHECK(p.degree() == 0);
    CHECK(p.coeffs().size() == 1);
    CHECK(Poly{GaussianDyadic{0}}.is_zero());
    CHECK(Poly{}.degree() == -1);
    CHECK((Poly::x() - Poly::x()).is_zero());

    Gen g(7);
    for (int t = 0; t < 200; ++t) {
        const Poly a = g.poly(6), b = g.poly(6);
        if (a.is_zero() || b.is_zero()) {
            continue;
        }
        CHECK((a * b).degree() == a.degree() + b.degree());
        const GaussianDyadic at = g.gaussian();
        CHECK((a * b).eval(at) == a.eval(at) * b.eval(at));
        CHECK((a + b).eval(at) == a.eval(at) + b.eval(at));
        if (!a.coeffs().empty()) {
            CHECK_FALSE(a.coeffs().back().is_zero());
        }
    }
}

TEST_CASE("poly real/imag split and units")
{
    const Poly p{GaussianDyadic{Dyadic{1}, Dyadic{2}}, GaussianDyadic{Dyadic{3}, Dyadic{0}}};
    CHECK(p.real_part() == Poly{GaussianDyadic{1}, GaussianDyadic{3}});
    CHECK(p.imag_part() == Poly{GaussianDyadic{2}});
    CHECK(Poly{GaussianDyadic{2}}.is_unit());
    CHECK_FALSE(Poly::x().is_unit());
    CHECK_THROWS_AS(Poly::x().inverse(), not_invertible);
}

TEST_CASE("binomial examples")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(7, 7) == 1);
    CHECK(binomial(7, 8) == 0);
    CHECK(binomial(7, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
    // Pascal's rule against the multiplicative formula
    for (int n = 1; n < 60; ++n) {
        for (int k = 1; k < n; ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

TEST_CASE("ipow")
{
    CHECK(ipow(Integer{2}, 64) == Integer{"18446744073709551616"});
    CHECK(ipow(Integer{3}, 0) == 1);
    CHECK(ipow(Integer{-3}, 3) == -27);
    CHECK(power(GaussianDyadic::i(), 4) == GaussianDyadic{1});
    CHECK(power(Poly::x(), 3) == Poly::monomial(GaussianDyadic{1}, 3));
}

TEST_CASE("canonical text rendering")
{
    CHECK(to_string(Dyadic{3}) == "3");
    CHECK(to_string(half_of(3, 1)) == "3/2^1");
    CHECK(to_string(half_of(-9, 3)) == "-9/2^3");
    CHECK(to_string(GaussianDyadic{Dyadic{3}, Dyadic{2}}) == "3+2i");
    CHECK(to_string(GaussianDyadic{Dyadic{2}, half_of(3, 1)}) == "2+3/2^1i");
    CHECK(to_string(GaussianDyadic{Dyadic{2}, Dyadic{-5}}) == "2-5i");
    CHECK(to_string(GaussianDyadic{Dyadic{0}, Dyadic{-1}}) == "-i");
    CHECK(to_string(GaussianDyadic::i()) == "i");
    CHECK(to_string(GaussianDyadic{}) == "0");

    const Poly gm2{GaussianDyadic{-4}, GaussianDyadic{Dyadic{0}, Dyadic{3}}, GaussianDyadic{9}};
    CHECK(to_string(gm2) == "-4 + 3ix + 9x^2");
    const Poly m4{GaussianDyadic{8}, GaussianDyadic{0}, GaussianDyadic{-72}, GaussianDyadic{0}, GaussianDyadic{81}};
    CHECK(to_string(m4) == "8 - 72x^2 + 81x^4");
    const Poly gm0{GaussianDyadic{2}, GaussianDyadic{Dyadic{0}, half_of(3, 1)}};
    CHECK(to_string(gm0) == "2 + 3/2^1i*x");
    CHECK(to_string(Poly{GaussianDyadic{0}, GaussianDyadic{Dyadic{1}, Dyadic{-1}}}) == "(1-i)x");
    CHECK(to_string(Poly{GaussianDyadic{0}, GaussianDyadic{-1}}) == "-x");
    CHECK(to_string(Poly{}) == "0");
}

TEST_CASE("parsing inverts rendering")
{
    CHECK(parse_gaussian("3+2i") == GaussianDyadic{Dyadic{3}, Dyadic{2}});
    CHECK(parse_gaussian("-2") == GaussianDyadic{-2});
    CHECK(parse_gaussian("-i") == GaussianDyadic{Dyadic{}, Dyadic{-1}});
    CHECK(parse_dyadic("6/2^1") == Dyadic{3});
    CHECK_THROWS_AS(parse_dyadic("3/4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dyadic(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_gaussian("2+xi"), std::invalid_argument);

    Gen g(99);
    for (int t = 0; t < 300; ++t) {
        const GaussianDyadic v = g.gaussian();
        CHECK(parse_gaussian(to_string(v)) == v);
    }
}
