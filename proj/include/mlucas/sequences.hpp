#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <mlucas/arith.hpp>

// Mersenne Lucas numbers m_n = 2^n + 1 and their Gaussian companions
// Gm_n = m_n + i*m_{n-1}, each computed by several independent routes.
namespace mlucas::seq
{

using arith::Dyadic;
using arith::GaussianDyadic;
using arith::Integer;

enum class Method { Recurrence, Binet, Explicit, Symmetric, GenFun, Relation };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

struct SeqTerm {
    std::int64_t index;
    GaussianDyadic value;
    Method method;
};

// Initial values of the two recurrences. Only the recurrence routes read
// these; every other route is closed-form, which is what lets a corrupted
// seed be detected.
struct Seeds {
    Integer m0{2};
    Integer m1{3};
    GaussianDyadic gm0{Dyadic{2}, Dyadic::normalize(3, 1)};
    GaussianDyadic gm1{Dyadic{3}, Dyadic{2}};
};

// m_0, m_1 from seeds, then m_n = 3 m_{n-1} - 2 m_{n-2}. n >= 0.
SeqTerm ml_recurrence(std::int64_t n, const Seeds &seeds = {});
// 2^n + 1. n >= 0.
SeqTerm ml_binet(std::int64_t n);
// Binomial sum; ml_explicit(0) is 2 by the Lucas convention. n >= 0.
SeqTerm ml_explicit(std::int64_t n);
// m_{-n} = m_n / 2^n. n >= 1.
SeqTerm ml_negative(std::int64_t n);

SeqTerm gml_recurrence(std::int64_t n, const Seeds &seeds = {});
// (2^n + 1) + i(2^{n-1} + 1); at n = 0 the 2^{-1} is the dyadic 1/2.
SeqTerm gml_binet(std::int64_t n);
// m_n + i m_{n-1}. n >= 1.
SeqTerm gml_from_ml(std::int64_t n);
// Binomial sums for both parts. n >= 1: at n = 0 the imaginary sum is empty.
SeqTerm gml_explicit(std::int64_t n);
// (m_n + (i/2) m_{n+1}) / 2^n. n >= 1.
SeqTerm gml_negative(std::int64_t n);

// Terms 0..max_n of each recurrence, computed in one pass.
std::vector<GaussianDyadic> ml_recurrence_range(std::int64_t max_n, const Seeds &seeds = {});
std::vector<GaussianDyadic> gml_recurrence_range(std::int64_t max_n, const Seeds &seeds = {});

/// Coefficients c_j = (-1)^j * n/(n-j) * C(n-j, j) * 2^j for 0 <= j <= n/2,
/// so that m_n = sum_j c_j 3^{n-2j} and m_n(x) = sum_j c_j (3x)^{n-2j}.
/// n/(n-j) * C(n-j, j) is always an integer. For n = 0 the single
/// coefficient is 2 (the 0/0 summand read by the Lucas convention).
std::vector<Integer> lucas_explicit_coefficients(std::int64_t n);

} // namespace mlucas::seq
