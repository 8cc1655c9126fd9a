#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace symdom {

/// Outcome of one verification. `anchor` is a short label for the identity
/// being checked.
struct CheckRecord {
    std::string name;
    std::string anchor;
    double max_error = 0.0;
    double tol = 0.0;
    bool pass = false;
    nlohmann::json details = nlohmann::json::object();
};

void to_json(nlohmann::json& j, const CheckRecord& r);

/// Finite doubles pass through; NaN and infinities become strings so the
/// report stays valid JSON.
nlohmann::json json_number(double x);

bool all_pass(const std::vector<CheckRecord>& records);

}  // namespace symdom
