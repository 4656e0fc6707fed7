#include <mlucas/arith/poly.hpp>

#include <algorithm>

namespace mlucas::arith
{

Poly::Poly(std::vector<GaussianDyadic> coeffs) : m_coeffs(std::move(coeffs))
{
    trim();
}

Poly::Poly(std::initializer_list<GaussianDyadic> coeffs) : m_coeffs(coeffs)
{
    trim();
}

Poly::Poly(GaussianDyadic constant)
{
    if (!constant.is_zero()) {
        m_coeffs.push_back(std::move(constant));
    }
}

Poly Poly::monomial(GaussianDyadic c, std::size_t k)
{
    if (c.is_zero()) {
        return {};
    }
    std::vector<GaussianDyadic> v(k + 1);
    v[k] = std::move(c);
    Poly p;
    p.m_coeffs = std::move(v);
    return p;
}

void Poly::trim()
{
    while (!m_coeffs.empty() && m_coeffs.back().is_zero()) {
        m_coeffs.pop_back();
    }
}

GaussianDyadic Poly::coeff(std::size_t k) const
{
    return k < m_coeffs.size() ? m_coeffs[k] : GaussianDyadic{};
}

Poly Poly::real_part() const
{
    std::vector<GaussianDyadic> v;
    v.reserve(m_coeffs.size());
    for (const auto &c : m_coeffs) {
        v.emplace_back(c.re());
    }
    return Poly{std::move(v)};
}

Poly Poly::imag_part() const
{
    std::vector<GaussianDyadic> v;
    v.reserve(m_coeffs.size());
    for (const auto &c : m_coeffs) {
        v.emplace_back(c.im());
    }
    return Poly{std::move(v)};
}

bool Poly::is_unit() const
{
    return m_coeffs.size() == 1 && m_coeffs[0].is_unit();
}

Poly Poly::inverse() const
{
    if (!is_unit()) {
        throw not_invertible("Poly::inverse: not a constant unit");
    }
    return Poly{m_coeffs[0].inverse()};
}

Poly Poly::scaled_pow2(std::int64_t k) const
{
    Poly r = *this;
    for (auto &c : r.m_coeffs) {
        c = c.scaled_pow2(k);
    }
    return r;
}

GaussianDyadic Poly::eval(const GaussianDyadic &at) const
{
    GaussianDyadic acc;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto &c : r.m_coeffs) {
        c = -c;
    }
    return r;
}

Poly operator+(const Poly &a, const Poly &b)
{
    std::vector<GaussianDyadic> v(std::max(a.m_coeffs.size(), b.m_coeffs.size()));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k < a.m_coeffs.size()) {
            v[k] += a.m_coeffs[k];
        }
        if (k < b.m_coeffs.size()) {
            v[k] += b.m_coeffs[k];
        }
    }
    return Poly{std::move(v)};
}

Poly operator-(const Poly &a, const Poly &b)
{
    return a + (-b);
}

Poly operator*(const Poly &a, const Poly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<GaussianDyadic> v(a.m_coeffs.size() + b.m_coeffs.size() - 1);
    for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
        if (a.m_coeffs[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
            if (!b.m_coeffs[j].is_zero()) {
                v[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
            }
        }
    }
    return Poly{std::move(v)};
}

Poly operator*(const GaussianDyadic &c, const Poly &p)
{
    if (c.is_zero()) {
        return {};
    }
    Poly r = p;
    for (auto &x : r.m_coeffs) {
        x = c * x;
    }
    r.trim();
    return r;
}

GaussianDyadic poly_eval(const Poly &p, const GaussianDyadic &at)
{
    return p.eval(at);
}

} // namespace mlucas::arith
