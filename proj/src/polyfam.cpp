#include <mlucas/polyfam.hpp>

#include <stdexcept>

namespace mlucas::polyfam
{

using arith::Dyadic;
using arith::Integer;

namespace
{

void require(bool ok, const char *what)
{
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

const GaussianDyadic three{3};
const GaussianDyadic two{2};

Poly three_x()
{
    return Poly::monomial(three, 1);
}

Poly gm0()
{
    return Poly{two, GaussianDyadic{Dyadic{}, Dyadic::normalize(3, 1)}};
}

Poly gm1()
{
    return Poly{GaussianDyadic::i() * two, three};
}

// sum_j c_j (3x)^{n-2j}
Poly explicit_poly(std::int64_t n)
{
    const auto coeffs = seq::lucas_explicit_coefficients(n);
    std::vector<GaussianDyadic> out(static_cast<std::size_t>(n + 1));
    Integer pow3 = arith::ipow(Integer{3}, static_cast<std::uint64_t>(n));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        out[static_cast<std::size_t>(n) - 2 * j] = GaussianDyadic{Integer{coeffs[j] * pow3}};
        pow3 /= 9;
    }
    return Poly{std::move(out)};
}

std::vector<Poly> run_recurrence(Poly first, Poly second, std::int64_t max_n)
{
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(max_n + 1));
    out.push_back(std::move(first));
    if (max_n >= 1) {
        out.push_back(std::move(second));
    }
    const Poly step = three_x();
    for (std::int64_t k = 2; k <= max_n; ++k) {
        out.push_back(step * out[k - 1] - two * out[k - 2]);
    }
    return out;
}

std::complex<double> cpow(std::complex<double> base, std::int64_t e)
{
    // square-and-multiply keeps powers of 2 and 1 exact
    if (e < 0) {
        return 1.0 / cpow(base, -e);
    }
    std::complex<double> result{1.0, 0.0};
    while (e != 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

} // namespace

PolyTerm ml_poly(std::int64_t n)
{
    require(n >= 0, "ml_poly requires n >= 0");
    return {n, ml_poly_range(n).back(), Method::Recurrence};
}

PolyTerm gml_poly(std::int64_t n)
{
    require(n >= 0, "gml_poly requires n >= 0");
    return {n, gml_poly_range(n).back(), Method::Recurrence};
}

PolyTerm gml_poly_from_ml(std::int64_t n)
{
    require(n >= 1, "gml_poly_from_ml requires n >= 1");
    const auto m = ml_poly_range(n);
    return {n, m[n] + GaussianDyadic::i() * m[n - 1], Method::Relation};
}

PolyTerm ml_poly_explicit(std::int64_t n)
{
    require(n >= 0, "ml_poly_explicit requires n >= 0");
    return {n, explicit_poly(n), Method::Explicit};
}

PolyTerm gml_poly_explicit(std::int64_t n)
{
    require(n >= 1, "gml_poly_explicit requires n >= 1");
    return {n, explicit_poly(n) + GaussianDyadic::i() * explicit_poly(n - 1), Method::Explicit};
}

PolyTerm ml_poly_negative(std::int64_t n)
{
    require(n >= 1, "ml_poly_negative requires n >= 1");
    return {-n, ml_poly_range(n).back().scaled_pow2(-n), Method::Binet};
}

PolyTerm gml_poly_negative(std::int64_t n)
{
    require(n >= 1, "gml_poly_negative requires n >= 1");
    const auto m = ml_poly_range(n + 1);
    const GaussianDyadic half_i{Dyadic{}, Dyadic::normalize(1, 1)};
    return {-n, (m[n] + half_i * m[n + 1]).scaled_pow2(-n), Method::Binet};
}

std::vector<Poly> ml_poly_range(std::int64_t max_n)
{
    require(max_n >= 0, "ml_poly_range requires max_n >= 0");
    return run_recurrence(Poly{two}, three_x(), max_n);
}

std::vector<Poly> gml_poly_range(std::int64_t max_n)
{
    require(max_n >= 0, "gml_poly_range requires max_n >= 0");
    return run_recurrence(gm0(), gm1(), max_n);
}

CharRoots char_roots(double x)
{
    const std::complex<double> disc = std::sqrt(std::complex<double>{9.0 * x * x - 8.0, 0.0});
    return {x, (3.0 * x + disc) / 2.0, (3.0 * x - disc) / 2.0};
}

std::complex<double> binet_numeric(std::int64_t n, double x)
{
    const CharRoots r = char_roots(x);
    const std::complex<double> p_n = cpow(r.lambda1, n) + cpow(r.lambda2, n);
    const std::complex<double> p_prev = cpow(r.lambda1, n - 1) + cpow(r.lambda2, n - 1);
    return p_n + std::complex<double>{0.0, 1.0} * p_prev;
}

std::complex<double> to_complex(const GaussianDyadic &v)
{
    return {v.re().to_double(), v.im().to_double()};
}

} // namespace mlucas::polyfam
