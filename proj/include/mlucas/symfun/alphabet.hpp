#pragma once

#include <cstdint>
#include <vector>

#include <mlucas/symfun/power_series.hpp>

namespace mlucas::symfun
{

// A finite list of letters; the empty alphabet is allowed.
template <Ring T>
struct Alphabet {
    std::vector<T> letters;
};

// prod_i (1 - letter_i z) as an ascending coefficient list.
template <Ring T>
std::vector<T> factor_product(const Alphabet<T> &a)
{
    std::vector<T> p{T{1}};
    for (const T &letter : a.letters) {
        std::vector<T> next(p.size() + 1, T{0});
        for (std::size_t k = 0; k < p.size(); ++k) {
            next[k] = next[k] + p[k];
            next[k + 1] = next[k + 1] - letter * p[k];
        }
        p = std::move(next);
    }
    return p;
}

/// S_n(-mu): the coefficients of prod (1 - mu_i z), zero past |mu|.
template <Ring T>
PowerSeries<T> s_neg_alphabet(const Alphabet<T> &mu, std::size_t order)
{
    return PowerSeries<T>(factor_product(mu), order);
}

/// S_n(lambda - mu): coefficients of prod(1 - mu_i z) / prod(1 - lambda_i z).
template <Ring T>
PowerSeries<T> s_diff_series(const Alphabet<T> &lam, const Alphabet<T> &mu, std::size_t order)
{
    return series_div(factor_product(mu), factor_product(lam), order);
}

/// S_n(lambda - mu) as the convolution sum_j S_{n-j}(-mu) S_j(lambda).
template <Ring T>
T s_diff_convolution(const Alphabet<T> &lam, const Alphabet<T> &mu, std::size_t n)
{
    const PowerSeries<T> neg = s_neg_alphabet(mu, n);
    const PowerSeries<T> pos = s_diff_series(lam, Alphabet<T>{}, n);
    T sum{0};
    for (std::size_t j = 0; j <= n; ++j) {
        sum = sum + neg[n - j] * pos[j];
    }
    return sum;
}

/// S_n(lambda1 + lambda2) = sum_{j=0}^{n} lambda1^j lambda2^{n-j}. This is the
/// division-free form of (l1^{n+1} - l2^{n+1}) / (l1 - l2), so it needs no
/// special case when l1 == l2.
template <Ring T>
T two_letter_sn(const T &lam1, const T &lam2, std::size_t n)
{
    // Horner in lam1: (((l1 + l2) l1 + l2^2) ...)
    T acc{1};
    T pow2{1};
    for (std::size_t k = 1; k <= n; ++k) {
        pow2 = pow2 * lam2;
        acc = acc * lam1 + pow2;
    }
    return acc;
}

} // namespace mlucas::symfun
