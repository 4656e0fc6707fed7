#include <mlucas/cli/verify.hpp>

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>

#include <mlucas/arith.hpp>
#include <mlucas/polyfam.hpp>
#include <mlucas/symfun.hpp>

namespace mlucas::cli
{

using arith::Dyadic;
using arith::GaussianDyadic;
using arith::Poly;
using arith::to_string;

namespace
{

using G = GaussianDyadic;

std::string span(std::int64_t lo, std::int64_t hi, std::string_view var = "n")
{
    return std::string(var) + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

// Records the first failure only; later mismatches are ignored so the
// report names the smallest counterexample.
class Checker
{
public:
    Checker(std::string_view name, std::string range) : m_result{std::string(name), std::move(range), true, {}} {}

    template <typename A, typename B>
    void same(std::int64_t n, std::string_view la, const A &a, std::string_view lb, const B &b, std::string_view var = "n")
    {
        if (!m_result.passed || a == b) {
            return;
        }
        fail(std::string(var) + "=" + std::to_string(n) + ": " + std::string(la) + "=" + to_string(a) + " "
             + std::string(lb) + "=" + to_string(b));
    }

    void expect(bool ok, const std::string &detail)
    {
        if (m_result.passed && !ok) {
            fail(detail);
        }
    }

    bool failed() const
    {
        return !m_result.passed;
    }

    CheckResult result() &&
    {
        return std::move(m_result);
    }

private:
    void fail(std::string detail)
    {
        m_result.passed = false;
        m_result.detail = std::move(detail);
    }

    CheckResult m_result;
};

G half(long re, long im)
{
    return {Dyadic::normalize(re, 1), Dyadic::normalize(im, 1)};
}

std::vector<Poly> table2_m()
{
    auto p = [](std::initializer_list<long> v) {
        std::vector<G> c;
        for (long x : v) {
            c.emplace_back(x);
        }
        return Poly{std::move(c)};
    };
    return {p({2}), p({0, 3}), p({-4, 0, 9}), p({0, -18, 0, 27}), p({8, 0, -72, 0, 81}), p({0, 60, 0, -270, 0, 243})};
}

CheckResult check_reference_tables(const VerifyOptions &o)
{
    Checker c("reference-tables", span(0, 5));
    const std::vector<G> table1 = {half(4, 3), G{Dyadic{3}, Dyadic{2}}, G{Dyadic{5}, Dyadic{3}},
                                   G{Dyadic{9}, Dyadic{5}}, G{Dyadic{17}, Dyadic{9}}, G{Dyadic{33}, Dyadic{17}}};
    const auto gm = seq::gml_recurrence_range(5, o.seeds);
    const auto m = seq::ml_recurrence_range(5, o.seeds);
    for (std::int64_t n = 0; n <= 5; ++n) {
        c.same(n, "table1", table1[n], "recurrence", gm[n]);
        c.same(n, "table1.re", G{table1[n].re()}, "m_recurrence", m[n]);
    }
    const auto tm = table2_m();
    const auto pm = polyfam::ml_poly_range(5);
    const auto pg = polyfam::gml_poly_range(5);
    const Poly gm0{G{2}, G{Dyadic{}, Dyadic::normalize(3, 1)}};
    for (std::int64_t n = 0; n <= 5; ++n) {
        c.same(n, "table2.m", tm[n], "recurrence", pm[n]);
        const Poly row = n == 0 ? gm0 : tm[n] + G::i() * tm[n - 1];
        c.same(n, "table2.gm", row, "recurrence", pg[n]);
    }
    return std::move(c).result();
}

CheckResult check_route_agreement_m(const VerifyOptions &o)
{
    Checker c("route-agreement-m", span(0, o.max_n));
    const auto rec = seq::ml_recurrence_range(o.max_n, o.seeds);
    for (std::int64_t n = 0; n <= o.max_n && !c.failed(); ++n) {
        const G binet = seq::ml_binet(n).value;
        c.same(n, "recurrence", rec[n], "binet", binet);
        c.same(n, "explicit", seq::ml_explicit(n).value, "binet", binet);
        c.same(n, "symmetric", symfun::sym_decompose_ml(n), "binet", binet);
    }
    return std::move(c).result();
}

CheckResult check_route_agreement_gm(const VerifyOptions &o)
{
    Checker c("route-agreement-gm", span(0, o.max_n));
    const auto rec = seq::gml_recurrence_range(o.max_n, o.seeds);
    for (std::int64_t n = 0; n <= o.max_n && !c.failed(); ++n) {
        const G binet = seq::gml_binet(n).value;
        c.same(n, "recurrence", rec[n], "binet", binet);
        c.same(n, "symmetric", symfun::sym_decompose_gml(n), "binet", binet);
        if (n >= 1) {
            c.same(n, "explicit", seq::gml_explicit(n).value, "binet", binet);
            c.same(n, "relation", seq::gml_from_ml(n).value, "binet", binet);
        }
    }
    return std::move(c).result();
}

CheckResult check_route_agreement_mpoly(const VerifyOptions &o)
{
    Checker c("route-agreement-mpoly", span(0, o.max_poly_n));
    const auto rec = polyfam::ml_poly_range(o.max_poly_n);
    for (std::int64_t n = 0; n <= o.max_poly_n && !c.failed(); ++n) {
        c.same(n, "explicit", polyfam::ml_poly_explicit(n).value, "recurrence", rec[n]);
        c.same(n, "symmetric", symfun::sym_decompose_ml_poly(n), "recurrence", rec[n]);
    }
    return std::move(c).result();
}

CheckResult check_route_agreement_gmpoly(const VerifyOptions &o)
{
    Checker c("route-agreement-gmpoly", span(0, o.max_poly_n));
    const auto rec = polyfam::gml_poly_range(o.max_poly_n);
    const auto m = polyfam::ml_poly_range(o.max_poly_n);
    for (std::int64_t n = 0; n <= o.max_poly_n && !c.failed(); ++n) {
        c.same(n, "symmetric", symfun::sym_decompose_gml_poly(n), "recurrence", rec[n]);
        if (n >= 1) {
            c.same(n, "explicit", polyfam::gml_poly_explicit(n).value, "recurrence", rec[n]);
            c.same(n, "relation", polyfam::gml_poly_from_ml(n).value, "recurrence", rec[n]);
            c.same(n, "imag_part", rec[n].imag_part(), "m_{n-1}", m[n - 1]);
        }
    }
    return std::move(c).result();
}

CheckResult check_genfun_gm(const VerifyOptions &o)
{
    Checker c("genfun-gm", span(0, o.max_n));
    const auto s = symfun::gf_gml(static_cast<std::size_t>(o.max_n));
    const auto ms = symfun::gf_ml(static_cast<std::size_t>(o.max_n));
    const auto rec = seq::gml_recurrence_range(o.max_n, o.seeds);
    const auto mrec = seq::ml_recurrence_range(o.max_n, o.seeds);
    for (std::int64_t n = 0; n <= o.max_n; ++n) {
        c.same(n, "series", s[n], "recurrence", rec[n]);
        c.same(n, "m_series", ms[n], "m_recurrence", mrec[n]);
    }
    return std::move(c).result();
}

CheckResult check_genfun_gm_even_odd(const VerifyOptions &o)
{
    const std::int64_t half_n = o.max_n / 2;
    Checker c("genfun-gm-even-odd", span(0, half_n));
    const auto even = symfun::gf_gml_even(static_cast<std::size_t>(half_n));
    const auto odd = symfun::gf_gml_odd(static_cast<std::size_t>(half_n));
    const auto rec = seq::gml_recurrence_range(2 * half_n + 1, o.seeds);
    for (std::int64_t n = 0; n <= half_n; ++n) {
        c.same(n, "even_series", even[n], "Gm_2n", rec[2 * n]);
        c.same(n, "odd_series", odd[n], "Gm_2n+1", rec[2 * n + 1]);
    }
    return std::move(c).result();
}

CheckResult check_genfun_poly(const VerifyOptions &o)
{
    Checker c("genfun-poly", span(0, o.max_poly_n));
    const auto ms = symfun::gf_ml_poly(static_cast<std::size_t>(o.max_poly_n));
    const auto gs = symfun::gf_gml_poly(static_cast<std::size_t>(o.max_poly_n));
    const auto m = polyfam::ml_poly_range(o.max_poly_n);
    const auto gm = polyfam::gml_poly_range(o.max_poly_n);
    for (std::int64_t n = 0; n <= o.max_poly_n; ++n) {
        c.same(n, "m_series", ms[n], "recurrence", m[n]);
        c.same(n, "gm_series", gs[n], "recurrence", gm[n]);
    }
    return std::move(c).result();
}

CheckResult check_negative_extension(const VerifyOptions &o)
{
    Checker c("negative-extension", span(1, o.max_n));
    const G half_i{Dyadic{}, Dyadic::normalize(1, 1)};
    for (std::int64_t n = 1; n <= o.max_n && !c.failed(); ++n) {
        const G m_n = seq::ml_binet(n).value;
        const G m_next = seq::ml_binet(n + 1).value;
        const G m_neg = seq::ml_negative(n).value;
        const G gm_neg = seq::gml_negative(n).value;
        c.same(n, "2^n*m_-n", m_neg.scaled_pow2(n), "m_n", m_n);
        c.same(n, "2^n*Gm_-n", gm_neg.scaled_pow2(n), "m_n+(i/2)m_n+1", m_n + half_i * m_next);
        // Gm = m + i m_{-1} carried to negative indices
        c.same(n, "Gm_-n", gm_neg, "m_-n+i*m_-n-1", m_neg + G::i() * seq::ml_negative(n + 1).value);
    }
    return std::move(c).result();
}

CheckResult check_negative_extension_poly(const VerifyOptions &o)
{
    Checker c("negative-extension-poly", span(1, o.max_poly_n));
    const G half_i{Dyadic{}, Dyadic::normalize(1, 1)};
    const auto m = polyfam::ml_poly_range(o.max_poly_n + 1);
    for (std::int64_t n = 1; n <= o.max_poly_n && !c.failed(); ++n) {
        c.same(n, "2^n*m_-n(x)", polyfam::ml_poly_negative(n).value.scaled_pow2(n), "m_n(x)", m[n]);
        c.same(n, "2^n*Gm_-n(x)", polyfam::gml_poly_negative(n).value.scaled_pow2(n), "m_n+(i/2)m_n+1",
               m[n] + half_i * m[n + 1]);
    }
    return std::move(c).result();
}

CheckResult check_backward_closure(const VerifyOptions &o)
{
    const std::int64_t lo = 2 - o.max_n;
    Checker c("backward-closure", span(lo, o.max_n, "k"));
    auto gm = [](std::int64_t k) { return k >= 0 ? seq::gml_binet(k).value : seq::gml_negative(-k).value; };
    auto m = [](std::int64_t k) { return k >= 0 ? seq::ml_binet(k).value : seq::ml_negative(-k).value; };
    for (std::int64_t k = lo; k <= o.max_n && !c.failed(); ++k) {
        c.same(k, "Gm_k", gm(k), "3Gm_k-1-2Gm_k-2", G{3} * gm(k - 1) - G{2} * gm(k - 2), "k");
        c.same(k, "m_k", m(k), "3m_k-1-2m_k-2", G{3} * m(k - 1) - G{2} * m(k - 2), "k");
    }
    return std::move(c).result();
}

CheckResult check_backward_closure_poly(const VerifyOptions &o)
{
    const std::int64_t lo = 2 - o.max_poly_n;
    Checker c("backward-closure-poly", span(lo, o.max_poly_n, "k"));
    const auto m = polyfam::ml_poly_range(o.max_poly_n);
    const auto gm = polyfam::gml_poly_range(o.max_poly_n);
    auto mk = [&](std::int64_t k) { return k >= 0 ? m[k] : polyfam::ml_poly_negative(-k).value; };
    auto gk = [&](std::int64_t k) { return k >= 0 ? gm[k] : polyfam::gml_poly_negative(-k).value; };
    const Poly three_x = Poly::monomial(G{3}, 1);
    for (std::int64_t k = lo; k <= o.max_poly_n && !c.failed(); ++k) {
        c.same(k, "m_k(x)", mk(k), "3x*m_k-1-2m_k-2", three_x * mk(k - 1) - G{2} * mk(k - 2), "k");
        c.same(k, "Gm_k(x)", gk(k), "3x*Gm_k-1-2Gm_k-2", three_x * gk(k - 1) - G{2} * gk(k - 2), "k");
    }
    return std::move(c).result();
}

CheckResult check_specialization(const VerifyOptions &o)
{
    Checker c("specialization", span(0, o.max_n));
    const auto m = polyfam::ml_poly_range(o.max_n);
    const auto gm = polyfam::gml_poly_range(o.max_n);
    const G one{1};
    for (std::int64_t n = 0; n <= o.max_n && !c.failed(); ++n) {
        c.same(n, "m_n(1)", m[n].eval(one), "m_n", seq::ml_binet(n).value);
        c.same(n, "Gm_n(1)", gm[n].eval(one), "Gm_n", seq::gml_binet(n).value);
    }
    return std::move(c).result();
}

CheckResult check_kernel_equivalence(const VerifyOptions &)
{
    constexpr std::int64_t top = 60;
    Checker c("kernel-equivalence", span(0, top));
    const auto nk = symfun::number_kernel();
    const auto pk = symfun::poly_kernel();
    const auto nt = symfun::kernel_terms(nk, top);
    const auto pt = symfun::kernel_terms(pk, top);
    const auto ns = symfun::kernel_series(nk, top);
    const auto ps = symfun::kernel_series(pk, top);
    for (std::int64_t n = 0; n <= top; ++n) {
        c.same(n, "recurrence", nt[n], "explicit", symfun::kernel_term_explicit(nk, n));
        c.same(n, "recurrence", nt[n], "series", ns[n]);
        c.same(n, "poly_recurrence", pt[n], "poly_explicit", symfun::kernel_term_explicit(pk, n));
        c.same(n, "poly_recurrence", pt[n], "poly_series", ps[n]);
    }
    return std::move(c).result();
}

CheckResult check_two_letter_bridge(const VerifyOptions &)
{
    constexpr std::int64_t top = 60;
    Checker c("two-letter-bridge", span(0, top));
    const auto nt = symfun::kernel_terms(symfun::number_kernel(), top);
    for (std::int64_t n = 0; n <= top; ++n) {
        c.same(n, "S_n(2+1)", symfun::two_letter_sn(G{2}, G{1}, static_cast<std::size_t>(n)), "kernel", nt[n]);
    }
    return std::move(c).result();
}

CheckResult check_decimation(const VerifyOptions &)
{
    constexpr std::size_t top = 30;
    Checker c("decimation", span(0, top));
    const auto run = [&](const auto &kern, std::string_view tag) {
        const auto parts = symfun::kernel_even_odd_series(kern, top);
        const auto s = symfun::kernel_terms(kern, 2 * top + 1);
        using T = std::decay_t<decltype(s[0])>;
        const std::string t(tag);
        for (std::size_t n = 0; n <= top; ++n) {
            const auto idx = static_cast<std::int64_t>(n);
            c.same(idx, t + ".even", parts.even[n], "S_2n", s[2 * n]);
            c.same(idx, t + ".odd", parts.odd[n], "S_2n+1", s[2 * n + 1]);
            c.same(idx, t + ".odd_shifted", parts.odd_shifted[n], "S_2n-1", n == 0 ? T{0} : s[2 * n - 1]);
        }
    };
    run(symfun::number_kernel(), "scalar");
    run(symfun::poly_kernel(), "poly");
    return std::move(c).result();
}

struct LetterGen {
    std::mt19937_64 rng;

    long pick(long lo, long hi)
    {
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    G letter()
    {
        return {Dyadic::normalize(pick(-4, 4), pick(0, 2)), Dyadic::normalize(pick(-3, 3), pick(0, 1))};
    }
    symfun::Alphabet<G> alphabet()
    {
        symfun::Alphabet<G> a;
        const long size = pick(0, 3);
        for (long k = 0; k < size; ++k) {
            a.letters.push_back(letter());
        }
        return a;
    }
};

CheckResult check_convolution(const VerifyOptions &o)
{
    constexpr int trials = 200;
    constexpr std::size_t top = 12;
    Checker c("convolution", "alphabets=" + std::to_string(trials) + " n=0.." + std::to_string(top));
    LetterGen gen{std::mt19937_64{o.seed}};
    for (int t = 0; t < trials && !c.failed(); ++t) {
        const auto lam = gen.alphabet();
        const auto mu = gen.alphabet();
        const auto series = symfun::s_diff_series(lam, mu, top);
        for (std::size_t n = 0; n <= top; ++n) {
            const G conv = symfun::s_diff_convolution(lam, mu, n);
            if (!(series[n] == conv)) {
                c.expect(false, "trial=" + std::to_string(t) + " n=" + std::to_string(n) + ": series="
                                    + to_string(series[n]) + " convolution=" + to_string(conv));
                break;
            }
        }
    }
    return std::move(c).result();
}

CheckResult check_series_roundtrip(const VerifyOptions &o)
{
    constexpr int trials = 100;
    constexpr std::size_t order = 12;
    Checker c("series-roundtrip", "trials=" + std::to_string(trials) + " order=" + std::to_string(order));
    LetterGen gen{std::mt19937_64{o.seed ^ 0x5eed5eedULL}};
    for (int t = 0; t < trials && !c.failed(); ++t) {
        std::vector<G> num, den;
        for (int k = 0; k < 4; ++k) {
            num.push_back(gen.letter());
            den.push_back(gen.letter());
        }
        den[0] = G{Dyadic{gen.pick(0, 1) ? 1 : -1}}.scaled_pow2(gen.pick(-2, 2));
        const auto back = symfun::truncated_product(den, symfun::series_div(num, den, order));
        for (std::size_t k = 0; k <= order; ++k) {
            c.same(static_cast<std::int64_t>(k), "den*series", back[k], "num", k < num.size() ? num[k] : G{0}, "k");
        }
    }
    return std::move(c).result();
}

CheckResult check_binet_numeric(const VerifyOptions &o)
{
    const std::int64_t top = std::min<std::int64_t>(o.max_poly_n, 30);
    Checker c("binet-numeric", span(0, top) + " x=1,2,3,5/2");
    const auto gm = polyfam::gml_poly_range(top);
    const std::vector<std::pair<double, G>> points = {
        {1.0, G{1}}, {2.0, G{2}}, {3.0, G{3}}, {2.5, G{Dyadic::normalize(5, 1)}}};
    for (const auto &[xd, xq] : points) {
        for (std::int64_t n = 0; n <= top; ++n) {
            const auto exact = polyfam::to_complex(gm[n].eval(xq));
            const auto approx = polyfam::binet_numeric(n, xd);
            const double err = std::abs(approx - exact);
            const bool ok = xd == 1.0 ? err == 0.0 : err <= 1e-9 * (1.0 + std::abs(exact));
            c.expect(ok, "n=" + std::to_string(n) + " x=" + std::to_string(xd) + ": error=" + std::to_string(err));
        }
    }
    return std::move(c).result();
}

} // namespace

const std::vector<NamedCheck> &all_checks()
{
    static const std::vector<NamedCheck> checks = [] {
        std::vector<NamedCheck> v = {
            {"backward-closure", check_backward_closure},
            {"backward-closure-poly", check_backward_closure_poly},
            {"binet-numeric", check_binet_numeric},
            {"convolution", check_convolution},
            {"decimation", check_decimation},
            {"genfun-gm", check_genfun_gm},
            {"genfun-gm-even-odd", check_genfun_gm_even_odd},
            {"genfun-poly", check_genfun_poly},
            {"kernel-equivalence", check_kernel_equivalence},
            {"negative-extension", check_negative_extension},
            {"negative-extension-poly", check_negative_extension_poly},
            {"reference-tables", check_reference_tables},
            {"route-agreement-gm", check_route_agreement_gm},
            {"route-agreement-gmpoly", check_route_agreement_gmpoly},
            {"route-agreement-m", check_route_agreement_m},
            {"route-agreement-mpoly", check_route_agreement_mpoly},
            {"series-roundtrip", check_series_roundtrip},
            {"specialization", check_specialization},
            {"two-letter-bridge", check_two_letter_bridge},
        };
        std::sort(v.begin(), v.end(), [](const NamedCheck &a, const NamedCheck &b) { return a.name < b.name; });
        return v;
    }();
    return checks;
}

CheckResult run_check(std::string_view name, const VerifyOptions &opts)
{
    for (const auto &check : all_checks()) {
        if (check.name == name) {
            return check.run(opts);
        }
    }
    throw std::invalid_argument("unknown check: " + std::string(name));
}

VerifyReport run_verify(const VerifyOptions &opts)
{
    if (opts.max_n < 6) {
        throw std::invalid_argument("verify requires max_n >= 6 (the tables cover n = 0..5)");
    }
    if (opts.max_poly_n < 1) {
        throw std::invalid_argument("verify requires max_poly_n >= 1");
    }
    std::vector<std::future<CheckResult>> pending;
    for (const auto &check : all_checks()) {
        pending.push_back(std::async(std::launch::async, check.run, std::cref(opts)));
    }
    VerifyReport report;
    for (auto &f : pending) {
        report.checks.push_back(f.get());
        report.overall = report.overall && report.checks.back().passed;
    }
    return report;
}

seq::Seeds perturbed_seeds(std::string_view which)
{
    seq::Seeds s;
    if (which == "m1") {
        s.m1 += 1;
    } else if (which == "gm0") {
        s.gm0 += G{1};
    } else if (which == "gm1") {
        s.gm1 += G{1};
    } else {
        throw std::invalid_argument("perturb must be one of m1, gm0, gm1");
    }
    return s;
}

} // namespace mlucas::cli
