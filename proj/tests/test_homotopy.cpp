#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sysent/bounds.hpp"
#include "sysent/homotopy.hpp"

using namespace sysent;

namespace {
const Lattice2 kSquare{{1.0, 0.0}, {0.0, 1.0}};
const Lattice2 kHex{{1.0, 0.0}, {0.5, kSqrt3 / 2.0}};
}  // namespace

TEST_CASE("homotopy count bound on flat tori") {
  std::vector<double> ts;
  for (int t = 1; t <= 20; ++t) ts.push_back(t);
  const AdmissiblePair pair(0.1, 0.09);

  const HomotopyCheckReport sq = homotopy_count_check(kSquare, pair, kPi, ts);
  REQUIRE(sq.rows.size() == 20);
  CHECK(sq.sys == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sq.sigma == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sq.rows[4].count == 81);    // T = 5, lattice-count oracle
  CHECK(sq.rows[9].count == 317);   // T = 10
  for (const HomotopyCheckRow& row : sq.rows) {
    CHECK(row.log_margin >= 0.0);
    CHECK(row.log_bound >= std::log(static_cast<double>(row.count)));
  }
  // T = 5 margin by direct arithmetic: bound = (pi/100)^(-5/0.09)
  const double expect_log_bound = -5.0 / 0.09 * std::log(kPi * 0.01);
  CHECK(sq.rows[4].log_bound == doctest::Approx(expect_log_bound).epsilon(1e-12));

  const HomotopyCheckReport hx = homotopy_count_check(kHex, pair, kPi, ts);
  CHECK(hx.sigma == doctest::Approx(2.0 / kSqrt3).epsilon(1e-12));
  CHECK(hx.rows[0].count == 7);
  for (const HomotopyCheckRow& row : hx.rows) CHECK(row.log_margin >= 0.0);
}

TEST_CASE("only the trivial class below the systole") {
  const AdmissiblePair pair(0.1, 0.09);
  const std::vector<double> ts{0.25, 0.5, 0.99};
  const HomotopyCheckReport rep = homotopy_count_check(kSquare, pair, kPi, ts);
  for (const HomotopyCheckRow& row : rep.rows) CHECK(row.count == 1);
}

TEST_CASE("homotopy count bound on the bolza surface") {
  const AdmissiblePair pair(0.05, 0.29);
  const std::vector<double> ts{2.0, 4.0, 6.0};
  const HomotopyCheckReport rep = homotopy_count_check(bolza_surface(), pair, kPi, ts);
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.sys == doctest::Approx(3.057141838961996).epsilon(1e-9));
  CHECK(rep.sigma == doctest::Approx(0.7437402978432325).epsilon(1e-9));
  CHECK(rep.rows[0].count == 1);   // enumeration oracle pins
  CHECK(rep.rows[1].count == 9);
  CHECK(rep.rows[2].count == 97);
  CHECK(rep.rows[0].log_margin == doctest::Approx(11.6015).epsilon(1e-3));
  CHECK(rep.rows[1].log_margin == doctest::Approx(21.0059).epsilon(1e-3));
  CHECK(rep.rows[2].log_margin == doctest::Approx(30.2299).epsilon(1e-3));
}

TEST_CASE("vacuous-bound precondition") {
  const AdmissiblePair pair(0.1, 0.05);
  const std::vector<double> ts{1.0};
  // c alpha^2 sigma = 200 * 0.01 * 1 = 2 >= 1
  CHECK_THROWS_WITH_AS(homotopy_count_check(kSquare, pair, 200.0, ts),
                       doctest::Contains("vacuous"), std::domain_error);
}
