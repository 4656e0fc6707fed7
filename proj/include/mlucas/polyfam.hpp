#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <mlucas/arith.hpp>
#include <mlucas/sequences.hpp>

// Mersenne Lucas polynomials m_n(x) and Gaussian Mersenne Lucas
// polynomials Gm_n(x). At x = 1 they collapse onto the number families.
namespace mlucas::polyfam
{

using arith::GaussianDyadic;
using arith::Poly;
using seq::Method;

struct PolyTerm {
    std::int64_t index;
    Poly value;
    Method method;
};

// m_0 = 2, m_1 = 3x, m_n = 3x m_{n-1} - 2 m_{n-2}. n >= 0.
PolyTerm ml_poly(std::int64_t n);
// Gm_0 = 2 + (3i/2)x, Gm_1 = 3x + 2i, same recurrence. n >= 0.
PolyTerm gml_poly(std::int64_t n);
// m_n(x) + i m_{n-1}(x). n >= 1.
PolyTerm gml_poly_from_ml(std::int64_t n);
PolyTerm ml_poly_explicit(std::int64_t n);
// n >= 1.
PolyTerm gml_poly_explicit(std::int64_t n);
// m_n(x) / 2^n. n >= 1.
PolyTerm ml_poly_negative(std::int64_t n);
// (m_n(x) + (i/2) m_{n+1}(x)) / 2^n. n >= 1.
PolyTerm gml_poly_negative(std::int64_t n);

std::vector<Poly> ml_poly_range(std::int64_t max_n);
std::vector<Poly> gml_poly_range(std::int64_t max_n);

/// Roots of l^2 - 3x l + 2 = 0, principal square root branch:
/// lambda1 = (3x + sqrt(9x^2 - 8)) / 2, lambda2 = (3x - sqrt(9x^2 - 8)) / 2.
struct CharRoots {
    double x;
    std::complex<double> lambda1;
    std::complex<double> lambda2;
};

CharRoots char_roots(double x);

// lambda1^n + lambda2^n + i(lambda1^{n-1} + lambda2^{n-1}), in doubles.
// Meant only as a spot-check against the exact Gm_n(x).
std::complex<double> binet_numeric(std::int64_t n, double x);

std::complex<double> to_complex(const GaussianDyadic &v);

} // namespace mlucas::polyfam
