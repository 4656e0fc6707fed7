#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mlucas::arith
{

using Integer = boost::multiprecision::cpp_int;

// Raised when a value has no inverse in the ring it lives in.
class not_invertible : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// base^exponent by square-and-multiply.
Integer ipow(Integer base, std::uint64_t exponent);

// 2^exponent.
inline Integer pow2(std::uint64_t exponent)
{
    return ipow(Integer{2}, exponent);
}

// C(n, k); zero outside 0 <= k <= n. Requires n >= 0.
Integer binomial(std::int64_t n, std::int64_t k);

inline std::string to_decimal(const Integer &v)
{
    return v.str();
}

} // namespace mlucas::arith
