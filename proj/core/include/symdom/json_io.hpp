#pragma once

#include "symdom/special.hpp"

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace symdom {

/// {"re": x, "im": y}
nlohmann::json complex_json(Complex c);
Complex complex_from_json(const nlohmann::json& j);

/// Arrays of {re, im}; matrices are arrays of rows.
nlohmann::json vector_json(const Eigen::VectorXcd& v);
nlohmann::json matrix_json(const Eigen::MatrixXcd& m);
Eigen::VectorXcd vector_from_json(const nlohmann::json& j);
Eigen::MatrixXcd matrix_from_json(const nlohmann::json& j);

}  // namespace symdom
