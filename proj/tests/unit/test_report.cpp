#include "symdom/json_io.hpp"
#include "symdom/parallel.hpp"
#include "symdom/report.hpp"

#include <doctest.h>

#include <atomic>
#include <cmath>
#include <stdexcept>

using namespace symdom;

TEST_CASE("check records serialize")
{
    CheckRecord r{"x", "anchor", 1e-12, 1e-9, true, {{"k", 1}}};
    nlohmann::json j = r;
    CHECK(j["name"] == "x");
    CHECK(j["anchor"] == "anchor");
    CHECK(j["pass"] == true);
    CHECK(j["details"]["k"] == 1);
    CHECK(all_pass({r}));
    r.pass = false;
    CHECK_FALSE(all_pass({r}));
    CHECK(json_number(NAN).is_string());
    CHECK(json_number(INFINITY).is_string());
    CHECK(json_number(1.5) == 1.5);
}

TEST_CASE("complex JSON helpers round trip")
{
    Complex c(1.25, -3.5);
    CHECK(complex_from_json(complex_json(c)) == c);
    CHECK(complex_from_json(nlohmann::json(2.0)) == Complex(2.0, 0.0));
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Random(3, 2);
    CHECK(matrix_from_json(matrix_json(m)) == m);
    Eigen::VectorXcd v = Eigen::VectorXcd::Random(4);
    CHECK(vector_from_json(vector_json(v)) == v);
}

TEST_CASE("parallel_for visits every index once and rethrows")
{
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits)
        CHECK(h == 1);
    std::atomic<int> ran{0};
    CHECK_THROWS_AS(parallel_for(50,
                                 [&](std::size_t i) {
                                     ++ran;
                                     if (i == 17)
                                         throw std::runtime_error("boom");
                                 }),
                    std::runtime_error);
    CHECK(ran.load() >= 18);
    CHECK(thread_count() >= 1);
}
