#include "symdom/report.hpp"

#include <cmath>

namespace symdom {

nlohmann::json json_number(double x)
{
    if (std::isfinite(x))
        return x;
    if (std::isnan(x))
        return "nan";
    return x > 0 ? "inf" : "-inf";
}

void to_json(nlohmann::json& j, const CheckRecord& r)
{
    j = {{"name", r.name},
         {"anchor", r.anchor},
         {"max_error", json_number(r.max_error)},
         {"tol", r.tol},
         {"pass", r.pass}};
    if (!r.details.empty())
        j["details"] = r.details;
}

bool all_pass(const std::vector<CheckRecord>& records)
{
    for (const auto& r : records)
        if (!r.pass)
            return false;
    return true;
}

}  // namespace symdom
