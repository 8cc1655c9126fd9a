#include "symdom/json_io.hpp"

namespace symdom {

nlohmann::json complex_json(Complex c)
{
    return {{"re", c.real()}, {"im", c.imag()}};
}

Complex complex_from_json(const nlohmann::json& j)
{
    if (j.is_number())
        return {j.get<double>(), 0.0};
    return {j.value("re", 0.0), j.value("im", 0.0)};
}

nlohmann::json vector_json(const Eigen::VectorXcd& v)
{
    nlohmann::json a = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        a.push_back(complex_json(v(i)));
    return a;
}

nlohmann::json matrix_json(const Eigen::MatrixXcd& m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        rows.push_back(vector_json(m.row(r).transpose()));
    return rows;
}

Eigen::VectorXcd vector_from_json(const nlohmann::json& j)
{
    Eigen::VectorXcd v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
    return v;
}

Eigen::MatrixXcd matrix_from_json(const nlohmann::json& j)
{
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        if (static_cast<Eigen::Index>(j[static_cast<std::size_t>(r)].size()) != cols)
            throw std::invalid_argument("matrix json: ragged rows");
        for (Eigen::Index c = 0; c < cols; ++c)
            m(r, c) = complex_from_json(j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }
    return m;
}

}  // namespace symdom
