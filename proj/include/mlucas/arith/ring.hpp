#pragma once

#include <concepts>
#include <cstdint>

#include <mlucas/arith/gaussian.hpp>
#include <mlucas/arith/poly.hpp>

namespace mlucas::arith
{

// Commutative ring with exact equality and a partial inverse. Both scalar
// types of the library model it.
template <typename T>
concept Ring = std::regular<T> && requires(const T &a, const T &b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_unit() } -> std::convertible_to<bool>;
    { a.inverse() } -> std::convertible_to<T>;
    { T{0} };
    { T{1} };
};

static_assert(Ring<GaussianDyadic>);
static_assert(Ring<Poly>);

template <Ring T>
T power(T base, std::uint64_t exponent)
{
    T result{1};
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

} // namespace mlucas::arith
