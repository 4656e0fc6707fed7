#include <mlucas/cli/output.hpp>

namespace mlucas::cli
{

std::optional<Format> parse_format(std::string_view name)
{
    if (name == "text") {
        return Format::Text;
    }
    if (name == "json") {
        return Format::Json;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    return std::nullopt;
}

Json to_json(const arith::Dyadic &v)
{
    return Json{{"num", v.num().str()}, {"exp2", v.exp()}};
}

Json to_json(const arith::GaussianDyadic &v)
{
    return Json{{"re", to_json(v.re())}, {"im", to_json(v.im())}};
}

Json to_json(const arith::Poly &p)
{
    Json coeffs = Json::array();
    for (const auto &c : p.coeffs()) {
        coeffs.push_back(to_json(c));
    }
    return Json{{"coeffs", std::move(coeffs)}};
}

std::string csv_fields(const arith::GaussianDyadic &v)
{
    return v.re().num().str() + "," + std::to_string(v.re().exp()) + "," + v.im().num().str() + ","
           + std::to_string(v.im().exp());
}

std::string csv_escape(std::string_view cell)
{
    if (cell.find_first_of(",\"\n") == std::string_view::npos) {
        return std::string(cell);
    }
    std::string out = "\"";
    for (char ch : cell) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    out += '"';
    return out;
}

} // namespace mlucas::cli
