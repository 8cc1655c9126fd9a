#pragma once

#include "symdom/report.hpp"

#include <nlohmann/json.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symdom::cli {

/// Thrown for bad flags or values; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;  ///< e.g. "check covariance"
    int d = 2;
    double nu = 4.0;
    int n = 2;
    int lambda = 1;
    std::string c;  ///< comma list, defaults to all ones
    std::string b = "0.5,1,2,4";
    int samples = 10;
    std::optional<std::uint64_t> seed;
    double radius = 0.8;
    double tol = 1e-8;
    double tol_psd = 1e-9;
    int cap = 4;
    int N = 60;
    std::string variant = "proof";
    std::string out;
    std::string format = "json";
    std::string space = "little";
    std::string z, w, zeta, omega;
    double nu_min = -3.0;
    double nu_max = 3.0;
    double step = 0.25;
    double nu_star = 3.0;
    std::string family = "full";
    std::string beta = "fock";
    bool unconstrained = false;
    bool expect_irreducible = false;
    bool quick = false;

    void validate() const;
    nlohmann::json to_json() const;
    std::uint64_t require_seed() const;
    std::vector<double> weights() const;  ///< c_0..c_n
};

struct Report {
    nlohmann::json config;
    std::vector<CheckRecord> checks;
    nlohmann::json values = nlohmann::json::object();
    /// Rows for CSV output (scans); first row is the header.
    std::vector<std::vector<std::string>> csv;
};

Report cmd_eval(const RunConfig& cfg, const std::string& what);
Report cmd_check(const RunConfig& cfg, const std::string& what);
Report cmd_scan(const RunConfig& cfg, const std::string& what);
Report cmd_probe(const RunConfig& cfg, const std::string& what);

std::vector<double> parse_real_list(const std::string& s);
/// Entries like 0.1, -0.2i, 0.3+0.4i separated by commas.
std::vector<std::complex<double>> parse_complex_list(const std::string& s);

}  // namespace symdom::cli
