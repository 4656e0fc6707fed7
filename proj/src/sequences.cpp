#include <mlucas/sequences.hpp>

#include <array>
#include <stdexcept>
#include <string>

namespace mlucas::seq
{

namespace
{

constexpr std::array<std::pair<Method, std::string_view>, 6> method_names{{
    {Method::Recurrence, "recurrence"},
    {Method::Binet, "binet"},
    {Method::Explicit, "explicit"},
    {Method::Symmetric, "symmetric"},
    {Method::GenFun, "genfun"},
    {Method::Relation, "relation"},
}};

void require(bool ok, const char *what)
{
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

Integer explicit_sum(std::int64_t n)
{
    const auto coeffs = lucas_explicit_coefficients(n);
    Integer pow3 = arith::ipow(Integer{3}, static_cast<std::uint64_t>(n));
    Integer sum{0};
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        sum += coeffs[j] * pow3;
        pow3 /= 9;
    }
    return sum;
}

Integer mersenne_lucas(std::int64_t n)
{
    return arith::ipow(Integer{2}, static_cast<std::uint64_t>(n)) + 1;
}

} // namespace

std::string_view to_string(Method m)
{
    for (const auto &[method, name] : method_names) {
        if (method == m) {
            return name;
        }
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name)
{
    for (const auto &[method, n] : method_names) {
        if (n == name) {
            return method;
        }
    }
    return std::nullopt;
}

std::vector<Integer> lucas_explicit_coefficients(std::int64_t n)
{
    require(n >= 0, "explicit formula requires n >= 0");
    if (n == 0) {
        return {Integer{2}};
    }
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(n / 2 + 1));
    // binom = C(n-j, j), updated by the ratio C(n-j, j) / C(n-j+1, j-1)
    Integer binom{1};
    Integer pow2{1};
    for (std::int64_t j = 0; 2 * j <= n; ++j) {
        if (j > 0) {
            binom *= (n - 2 * j + 2) * (n - 2 * j + 1);
            binom /= j * (n - j + 1);
            pow2 <<= 1;
        }
        Integer c = binom * n;
        c /= n - j;
        c *= pow2;
        out.push_back(j % 2 == 0 ? c : Integer{-c});
    }
    return out;
}

SeqTerm ml_recurrence(std::int64_t n, const Seeds &seeds)
{
    require(n >= 0, "ml_recurrence requires n >= 0");
    Integer prev = seeds.m0;
    Integer cur = seeds.m1;
    if (n == 0) {
        return {n, GaussianDyadic{prev}, Method::Recurrence};
    }
    for (std::int64_t k = 2; k <= n; ++k) {
        Integer next = 3 * cur - 2 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {n, GaussianDyadic{cur}, Method::Recurrence};
}

SeqTerm ml_binet(std::int64_t n)
{
    require(n >= 0, "ml_binet requires n >= 0");
    return {n, GaussianDyadic{mersenne_lucas(n)}, Method::Binet};
}

SeqTerm ml_explicit(std::int64_t n)
{
    require(n >= 0, "ml_explicit requires n >= 0");
    return {n, GaussianDyadic{explicit_sum(n)}, Method::Explicit};
}

SeqTerm ml_negative(std::int64_t n)
{
    require(n >= 1, "ml_negative requires n >= 1");
    return {-n, GaussianDyadic{Dyadic::normalize(mersenne_lucas(n), n)}, Method::Binet};
}

SeqTerm gml_recurrence(std::int64_t n, const Seeds &seeds)
{
    require(n >= 0, "gml_recurrence requires n >= 0");
    GaussianDyadic prev = seeds.gm0;
    GaussianDyadic cur = seeds.gm1;
    if (n == 0) {
        return {n, prev, Method::Recurrence};
    }
    for (std::int64_t k = 2; k <= n; ++k) {
        GaussianDyadic next = GaussianDyadic{3} * cur - GaussianDyadic{2} * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {n, cur, Method::Recurrence};
}

SeqTerm gml_binet(std::int64_t n)
{
    require(n >= 0, "gml_binet requires n >= 0");
    const Dyadic half_power = Dyadic{1}.scaled_pow2(n - 1);
    return {n, GaussianDyadic{Dyadic{mersenne_lucas(n)}, half_power + Dyadic{1}}, Method::Binet};
}

SeqTerm gml_from_ml(std::int64_t n)
{
    require(n >= 1, "gml_from_ml requires n >= 1");
    return {n, GaussianDyadic{Dyadic{mersenne_lucas(n)}, Dyadic{mersenne_lucas(n - 1)}}, Method::Relation};
}

SeqTerm gml_explicit(std::int64_t n)
{
    require(n >= 1, "gml_explicit requires n >= 1");
    return {n, GaussianDyadic{Dyadic{explicit_sum(n)}, Dyadic{explicit_sum(n - 1)}}, Method::Explicit};
}

SeqTerm gml_negative(std::int64_t n)
{
    require(n >= 1, "gml_negative requires n >= 1");
    return {-n,
            GaussianDyadic{Dyadic::normalize(mersenne_lucas(n), n), Dyadic::normalize(mersenne_lucas(n + 1), n + 1)},
            Method::Binet};
}

std::vector<GaussianDyadic> ml_recurrence_range(std::int64_t max_n, const Seeds &seeds)
{
    require(max_n >= 0, "ml_recurrence_range requires max_n >= 0");
    std::vector<GaussianDyadic> out;
    out.reserve(static_cast<std::size_t>(max_n + 1));
    out.emplace_back(seeds.m0);
    if (max_n >= 1) {
        out.emplace_back(seeds.m1);
    }
    for (std::int64_t k = 2; k <= max_n; ++k) {
        out.push_back(GaussianDyadic{3} * out[k - 1] - GaussianDyadic{2} * out[k - 2]);
    }
    return out;
}

std::vector<GaussianDyadic> gml_recurrence_range(std::int64_t max_n, const Seeds &seeds)
{
    require(max_n >= 0, "gml_recurrence_range requires max_n >= 0");
    std::vector<GaussianDyadic> out;
    out.reserve(static_cast<std::size_t>(max_n + 1));
    out.push_back(seeds.gm0);
    if (max_n >= 1) {
        out.push_back(seeds.gm1);
    }
    for (std::int64_t k = 2; k <= max_n; ++k) {
        out.push_back(GaussianDyadic{3} * out[k - 1] - GaussianDyadic{2} * out[k - 2]);
    }
    return out;
}

} // namespace mlucas::seq
