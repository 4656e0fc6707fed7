#include <mlucas/arith/render.hpp>

#include <cctype>
#include <stdexcept>

namespace mlucas::arith
{

namespace
{

std::string imag_to_string(const Dyadic &v)
{
    if (v == Dyadic{1}) {
        return "i";
    }
    if (v == Dyadic{-1}) {
        return "-i";
    }
    return to_string(v) + "i";
}

std::string monomial_to_string(const GaussianDyadic &c, std::size_t k)
{
    if (k == 0) {
        return to_string(c);
    }
    const std::string xpart = k == 1 ? "x" : "x^" + std::to_string(k);
    if (!c.re().is_zero() && !c.im().is_zero()) {
        return "(" + to_string(c) + ")" + xpart;
    }
    if (c == GaussianDyadic{1}) {
        return xpart;
    }
    if (c == GaussianDyadic{-1}) {
        return "-" + xpart;
    }
    const std::string s = to_string(c);
    // keep "3/2^1x" from reading as a power of 2x
    return s.find('/') != std::string::npos ? s + "*" + xpart : s + xpart;
}

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

[[noreturn]] void bad(std::string_view what, std::string_view text)
{
    throw std::invalid_argument(std::string(what) + ": cannot parse '" + std::string(text) + "'");
}

} // namespace

std::string to_string(const Dyadic &v)
{
    std::string s = v.num().str();
    if (v.exp() != 0) {
        s += "/2^" + std::to_string(v.exp());
    }
    return s;
}

std::string to_string(const GaussianDyadic &v)
{
    if (v.im().is_zero()) {
        return to_string(v.re());
    }
    if (v.re().is_zero()) {
        return imag_to_string(v.im());
    }
    if (v.im().num() < 0) {
        return to_string(v.re()) + "-" + imag_to_string(-v.im());
    }
    return to_string(v.re()) + "+" + imag_to_string(v.im());
}

std::string to_string(const Poly &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    const auto &cs = p.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k].is_zero()) {
            continue;
        }
        std::string term = monomial_to_string(cs[k], k);
        if (out.empty()) {
            out = std::move(term);
        } else if (term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

Dyadic parse_dyadic(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view exp = "0";
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        const std::string_view rest = body.substr(slash + 1);
        if (rest.substr(0, 2) != "2^") {
            bad("parse_dyadic", text);
        }
        exp = rest.substr(2);
    }
    if (!all_digits(num) || !all_digits(exp) || exp.size() > 9) {
        bad("parse_dyadic", text);
    }
    Integer n{std::string(num)};
    if (negative) {
        n = -n;
    }
    return Dyadic::normalize(std::move(n), std::stoll(std::string(exp)));
}

GaussianDyadic parse_gaussian(std::string_view text)
{
    if (text.empty()) {
        bad("parse_gaussian", text);
    }
    if (text.back() != 'i') {
        return GaussianDyadic{parse_dyadic(text)};
    }
    const std::string_view no_i = text.substr(0, text.size() - 1);
    const auto split = no_i.find_last_of("+-");
    const bool has_real = split != std::string_view::npos && split > 0;
    const std::string_view re_text = has_real ? no_i.substr(0, split) : std::string_view{};
    const std::string_view im_text = has_real ? no_i.substr(split) : no_i;

    Dyadic im;
    if (im_text.empty() || im_text == "+") {
        im = Dyadic{1};
    } else if (im_text == "-") {
        im = Dyadic{-1};
    } else {
        im = parse_dyadic(im_text);
    }
    return {has_real ? parse_dyadic(re_text) : Dyadic{}, im};
}

} // namespace mlucas::arith
