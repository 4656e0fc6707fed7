#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include <mlucas/arith.hpp>
#include <mlucas/symfun/power_series.hpp>

namespace mlucas::cli
{

enum class Format { Text, Json, Csv };

std::optional<Format> parse_format(std::string_view name);

using Json = nlohmann::ordered_json;

// {"num": "<decimal>", "exp2": k}. Big integers are always strings.
Json to_json(const arith::Dyadic &v);
// {"re": Dyadic, "im": Dyadic}
Json to_json(const arith::GaussianDyadic &v);
// {"coeffs": [GaussianDyadic...]} ascending
Json to_json(const arith::Poly &p);

template <typename T>
Json series_to_json(const symfun::PowerSeries<T> &s)
{
    Json coeffs = Json::array();
    for (const auto &c : s.coeffs()) {
        coeffs.push_back(to_json(c));
    }
    return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

// "re_num,re_exp2,im_num,im_exp2"
std::string csv_fields(const arith::GaussianDyadic &v);
inline constexpr std::string_view csv_value_header = "re_num,re_exp2,im_num,im_exp2";

// Quote a CSV cell if it contains a comma, quote or newline.
std::string csv_escape(std::string_view cell);

} // namespace mlucas::cli
