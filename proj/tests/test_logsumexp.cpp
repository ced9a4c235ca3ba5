#include <doctest.h>

#include <cmath>
#include <vector>

#include "dagmcmc/logsumexp.hpp"

using namespace dagmcmc;

TEST_CASE("log_sum_exp matches direct evaluation and survives large shifts") {
  std::vector<double> v{0.0, std::log(2.0), std::log(3.0)};
  CHECK(log_sum_exp(v) == doctest::Approx(std::log(6.0)).epsilon(1e-12));

  std::vector<double> shifted{-1000.0, -1001.0};
  CHECK(log_sum_exp(shifted) ==
        doctest::Approx(-1000.0 + std::log1p(std::exp(-1.0))).epsilon(1e-12));

  CHECK(log_sum_exp(std::vector<double>{}) == kNegInf);
  CHECK(log_sum_exp(std::vector<double>{kNegInf, kNegInf}) == kNegInf);
}

TEST_CASE("log_add_exp and log_sub_exp are inverse on well-posed inputs") {
  const double a = -3.2, b = -7.9;
  const double sum = log_add_exp(a, b);
  CHECK(log_sub_exp(sum, b) == doctest::Approx(a).epsilon(1e-12));
  CHECK(log_add_exp(kNegInf, a) == a);
  CHECK(log_sub_exp(a, a) == kNegInf);
  CHECK_THROWS(log_sub_exp(b, a));
}
