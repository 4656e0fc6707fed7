#pragma once

#include <cstdint>
#include <vector>

#include <mlucas/arith/integer.hpp>
#include <mlucas/symfun/power_series.hpp>

namespace mlucas::symfun
{

/// The sequence S_n with generating function 1 / (1 - d z - p z^2):
/// S_0 = 1, S_n = 0 for n < 0, S_n = d S_{n-1} + p S_{n-2}.
///
/// For the two-letter alphabet {l1, -l2} this is S_n(l1 + [-l2]) with
/// d = l1 - l2 and p = l1 l2. The kernel is parameterized by (d, p) directly.
template <Ring T>
struct SymKernel {
    T d;
    T p;
};

// S_0..S_max_n.
template <Ring T>
std::vector<T> kernel_terms(const SymKernel<T> &k, std::int64_t max_n)
{
    std::vector<T> s;
    if (max_n < 0) {
        return s;
    }
    s.reserve(static_cast<std::size_t>(max_n + 1));
    s.push_back(T{1});
    if (max_n >= 1) {
        s.push_back(k.d);
    }
    for (std::int64_t n = 2; n <= max_n; ++n) {
        s.push_back(k.d * s[n - 1] + k.p * s[n - 2]);
    }
    return s;
}

template <Ring T>
T kernel_term(const SymKernel<T> &k, std::int64_t n)
{
    if (n < 0) {
        return T{0};
    }
    return kernel_terms(k, n).back();
}

/// sum_{j=0}^{n/2} C(n-j, j) d^{n-2j} p^j; zero for n < 0.
template <Ring T>
T kernel_term_explicit(const SymKernel<T> &k, std::int64_t n)
{
    if (n < 0) {
        return T{0};
    }
    // d^0..d^n, then walk j upward with a running p^j
    std::vector<T> dpow{T{1}};
    for (std::int64_t e = 1; e <= n; ++e) {
        dpow.push_back(dpow.back() * k.d);
    }
    T sum{0};
    T ppow{1};
    for (std::int64_t j = 0; 2 * j <= n; ++j) {
        const T binom{arith::binomial(n - j, j)};
        sum = sum + binom * dpow[static_cast<std::size_t>(n - 2 * j)] * ppow;
        ppow = ppow * k.p;
    }
    return sum;
}

template <Ring T>
PowerSeries<T> kernel_series(const SymKernel<T> &k, std::size_t order)
{
    return series_div(std::vector<T>{T{1}}, {T{1}, -k.d, -k.p}, order);
}

// Bisections of the kernel series, all over D = 1 - (d^2 + 2p) z + p^2 z^2.
template <Ring T>
struct EvenOddSeries {
    PowerSeries<T> odd_shifted; // sum S_{2n-1} z^n = d z / D
    PowerSeries<T> even;        // sum S_{2n}   z^n = (1 - p z) / D
    PowerSeries<T> odd;         // sum S_{2n+1} z^n = d / D
};

template <Ring T>
EvenOddSeries<T> kernel_even_odd_series(const SymKernel<T> &k, std::size_t order)
{
    const std::vector<T> den{T{1}, -(k.d * k.d + T{2} * k.p), k.p * k.p};
    return {
        series_div({T{0}, k.d}, den, order),
        series_div({T{1}, -k.p}, den, order),
        series_div({k.d}, den, order),
    };
}

} // namespace mlucas::symfun
