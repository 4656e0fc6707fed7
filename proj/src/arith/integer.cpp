#include <mlucas/arith/integer.hpp>

namespace mlucas::arith
{

Integer ipow(Integer base, std::uint64_t exponent)
{
    Integer result{1};
    while (exponent != 0) {
        if (exponent & 1u) {
            result *= base;
        }
        exponent >>= 1;
        if (exponent != 0) {
            base *= base;
        }
    }
    return result;
}

Integer binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0) {
        throw std::invalid_argument("binomial: n must be non-negative");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    Integer result{1};
    // Each prefix product is itself a binomial coefficient, so the division
    // is exact.
    for (std::int64_t j = 1; j <= k; ++j) {
        result *= n - k + j;
        result /= j;
    }
    return result;
}

} // namespace mlucas::arith
