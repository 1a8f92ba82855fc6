#include <limits>

#include "doctest.h"
#include "phaseid/measurements.hpp"

using namespace phaseid;

namespace {

MeasurementMatrix sample_matrix() {
  Eigen::MatrixXd v(5, 4);
  v << 10, 11, 12, 13,
       20, 21, 22, 23,
       30, 31, 32, 33,
        1,  2,  3,  4,
        5,  6,  7,  8;
  return MeasurementMatrix(std::move(v));
}

}  // namespace

TEST_SUITE_BEGIN("measurements");

TEST_CASE("a matrix needs the three phase rows") {
  Eigen::MatrixXd two(2, 4);
  two.setOnes();
  CHECK_THROWS_AS(MeasurementMatrix{two}, MalformedMatrix);
  Eigen::MatrixXd three(3, 4);
  three.setOnes();
  const MeasurementMatrix z(three);
  CHECK(z.meter_count() == 3);
  CHECK(z.consumer_count() == 0);
}

TEST_CASE("block accessors split dependent and independent rows") {
  const MeasurementMatrix z = sample_matrix();
  CHECK(z.meter_count() == 5);
  CHECK(z.consumer_count() == 2);
  CHECK(z.sample_count() == 4);
  CHECK(z.dependent_block().rows() == 3);
  CHECK(z.dependent_block()(0, 0) == 10);
  CHECK(z.independent_block().rows() == 2);
  CHECK(z.independent_block()(0, 0) == 1);
  CHECK(z.independent_block()(1, 3) == 8);

  const auto [dep, indep] = split(z);
  CHECK(dep(2, 3) == 33);
  CHECK(indep(1, 2) == 7);
}

TEST_CASE("validate passes clean data") {
  const ValidationReport r = validate(sample_matrix());
  CHECK(r.ok());
  CHECK(r.meter_count == 5);
  CHECK(r.consumer_count == 2);
  CHECK(r.sample_count == 4);
  CHECK(r.consumer_rank == 2);
}

TEST_CASE("validate flags negative and non-finite entries") {
  MeasurementMatrix z = sample_matrix();
  z.values(3, 1) = -2.0;
  ValidationReport r = validate(z);
  CHECK_FALSE(r.ok());
  bool mentions_negative = false;
  for (const auto& f : r.findings)
    mentions_negative = mentions_negative || f.find("negative") != std::string::npos;
  CHECK(mentions_negative);

  z = sample_matrix();
  z.values(0, 0) = std::numeric_limits<double>::quiet_NaN();
  r = validate(z);
  CHECK_FALSE(r.ok());
  CHECK(r.consumer_rank == 0);
}

TEST_CASE("validate notices a rank-deficient consumer block") {
  MeasurementMatrix z = sample_matrix();
  z.values.row(4) = z.values.row(3);  // duplicate consumer
  const ValidationReport r = validate(z);
  CHECK(r.consumer_rank == 1);
  CHECK_FALSE(r.ok());
}

TEST_CASE("validate notices too few intervals") {
  Eigen::MatrixXd v(6, 2);  // 3 consumers, 2 samples
  v.setRandom();
  v = v.array().abs() + 1.0;
  const ValidationReport r = validate(MeasurementMatrix(v));
  bool mentions_intervals = false;
  for (const auto& f : r.findings)
    mentions_intervals = mentions_intervals || f.find("intervals") != std::string::npos;
  CHECK(mentions_intervals);
}

TEST_SUITE_END();
