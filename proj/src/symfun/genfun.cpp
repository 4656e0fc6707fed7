#include <mlucas/symfun/genfun.hpp>

#include <stdexcept>

namespace mlucas::symfun
{

using arith::Dyadic;

namespace
{

GaussianDyadic gd(long re, long im = 0)
{
    return {Dyadic{re}, Dyadic{im}};
}

GaussianDyadic half(long re, long im)
{
    return {Dyadic::normalize(re, 1), Dyadic::normalize(im, 1)};
}

// Coefficient pair (S_n, S_{n-1}) of a kernel, with S_{-1} = 0.
template <Ring T>
std::pair<T, T> kernel_pair(const SymKernel<T> &k, std::int64_t n)
{
    if (n < 0) {
        throw std::invalid_argument("symmetric decomposition requires n >= 0");
    }
    auto s = kernel_terms(k, n);
    T prev = n >= 1 ? s[n - 1] : T{0};
    return {std::move(s[n]), std::move(prev)};
}

} // namespace

SymKernel<GaussianDyadic> number_kernel()
{
    return {gd(3), gd(-2)};
}

SymKernel<Poly> poly_kernel()
{
    return {Poly::monomial(gd(3), 1), Poly{gd(-2)}};
}

PowerSeries<GaussianDyadic> gf_ml(std::size_t order)
{
    return series_div<GaussianDyadic>({gd(2), gd(-3)}, {gd(1), gd(-3), gd(2)}, order);
}

PowerSeries<GaussianDyadic> gf_gml(std::size_t order)
{
    return series_div<GaussianDyadic>({gd(4, 3), gd(-6, -5)}, {gd(2), gd(-6), gd(4)}, order);
}

PowerSeries<GaussianDyadic> gf_gml_even(std::size_t order)
{
    return series_div<GaussianDyadic>({gd(4, 3), gd(-10, -9)}, {gd(2), gd(-10), gd(8)}, order);
}

PowerSeries<GaussianDyadic> gf_gml_odd(std::size_t order)
{
    return series_div<GaussianDyadic>({gd(6, 4), gd(-12, -10)}, {gd(2), gd(-10), gd(8)}, order);
}

PowerSeries<Poly> gf_ml_poly(std::size_t order)
{
    const Poly minus_3x = Poly::monomial(gd(-3), 1);
    return series_div<Poly>({Poly{gd(2)}, minus_3x}, {Poly{gd(1)}, minus_3x, Poly{gd(2)}}, order);
}

PowerSeries<Poly> gf_gml_poly(std::size_t order)
{
    // 4 + 3ix
    const Poly c0{gd(4), gd(0, 3)};
    // i(4 - 9x^2) - 6x
    const Poly c1{gd(0, 4), gd(-6), gd(0, -9)};
    return series_div<Poly>({c0, c1}, {Poly{gd(2)}, Poly::monomial(gd(-6), 1), Poly{gd(4)}}, order);
}

GaussianDyadic sym_decompose_ml(std::int64_t n)
{
    const auto [s, s_prev] = kernel_pair(number_kernel(), n);
    return gd(2) * s - gd(3) * s_prev;
}

GaussianDyadic sym_decompose_gml(std::int64_t n)
{
    const auto [s, s_prev] = kernel_pair(number_kernel(), n);
    return half(4, 3) * s - half(6, 5) * s_prev;
}

Poly sym_decompose_ml_poly(std::int64_t n)
{
    const auto [s, s_prev] = kernel_pair(poly_kernel(), n);
    return gd(2) * s - Poly::monomial(gd(3), 1) * s_prev;
}

Poly sym_decompose_gml_poly(std::int64_t n)
{
    const auto [s, s_prev] = kernel_pair(poly_kernel(), n);
    // 2 + (3i/2) x
    const Poly a{gd(2), half(0, 3)};
    // 2i - 3x - (9i/2) x^2
    const Poly b{gd(0, 2), gd(-3), half(0, -9)};
    return a * s + b * s_prev;
}

} // namespace mlucas::symfun
