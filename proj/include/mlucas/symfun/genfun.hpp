#pragma once

#include <cstddef>
#include <cstdint>

#include <mlucas/arith.hpp>
#include <mlucas/symfun/kernel.hpp>
#include <mlucas/symfun/power_series.hpp>

// Generating functions and symmetric-function decompositions of the
// Mersenne Lucas families.
namespace mlucas::symfun
{

using arith::GaussianDyadic;
using arith::Poly;

// d = 3, p = -2: S_n = 2^{n+1} - 1.
SymKernel<GaussianDyadic> number_kernel();
// d = 3x, p = -2.
SymKernel<Poly> poly_kernel();

// (2 - 3z) / (1 - 3z + 2z^2)
PowerSeries<GaussianDyadic> gf_ml(std::size_t order);
// (4 + 3i - (6 + 5i) z) / (2 - 6z + 4z^2)
PowerSeries<GaussianDyadic> gf_gml(std::size_t order);
// (4 + 3i - (10 + 9i) z) / (2 - 10z + 8z^2), coefficients Gm_{2n}
PowerSeries<GaussianDyadic> gf_gml_even(std::size_t order);
// (6 + 4i - (12 + 10i) z) / (2 - 10z + 8z^2), coefficients Gm_{2n+1}
PowerSeries<GaussianDyadic> gf_gml_odd(std::size_t order);

// (2 - 3xz) / (1 - 3xz + 2z^2)
PowerSeries<Poly> gf_ml_poly(std::size_t order);
// (4 + 3ix + (i(4 - 9x^2) - 6x) z) / (2 - 6xz + 4z^2)
PowerSeries<Poly> gf_gml_poly(std::size_t order);

// 2 S_n - 3 S_{n-1} over the number kernel (m_n).
GaussianDyadic sym_decompose_ml(std::int64_t n);
// (2 + 3i/2) S_n - (3 + 5i/2) S_{n-1} over the number kernel (Gm_n).
GaussianDyadic sym_decompose_gml(std::int64_t n);
// 2 S_n - 3x S_{n-1} over the polynomial kernel (m_n(x)).
Poly sym_decompose_ml_poly(std::int64_t n);
// (2 + 3ix/2) S_n + (i(2 - 9x^2/2) - 3x) S_{n-1} over the polynomial kernel.
Poly sym_decompose_gml_poly(std::int64_t n);

} // namespace mlucas::symfun
