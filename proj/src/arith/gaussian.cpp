#include <mlucas/arith/gaussian.hpp>

namespace mlucas::arith
{

Dyadic GaussianDyadic::norm() const
{
    return m_re * m_re + m_im * m_im;
}

bool GaussianDyadic::is_unit() const
{
    return !is_zero() && norm().is_unit();
}

GaussianDyadic GaussianDyadic::inverse() const
{
    if (!is_unit()) {
        throw not_invertible("GaussianDyadic::inverse: norm is not a power of two");
    }
    const Dyadic inv_norm = norm().inverse();
    return {m_re * inv_norm, -m_im * inv_norm};
}

GaussianDyadic operator*(const GaussianDyadic &a, const GaussianDyadic &b)
{
    return {a.m_re * b.m_re - a.m_im * b.m_im, a.m_re * b.m_im + a.m_im * b.m_re};
}

} // namespace mlucas::arith
