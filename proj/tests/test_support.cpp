#include <doctest.h>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "epcont/csv.hpp"
#include "epcont/parallel.hpp"
#include "epcont/potential.hpp"
#include "epcont/tables.hpp"
#include "epcont/verify.hpp"

using namespace epcont;

TEST_CASE("shortest round-trip formatting") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 4.32, 0.0}) {
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(4.32) == "4.32");
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
}

TEST_CASE("CSV layout") {
  CsvTable t;
  t.comments = {"a note"};
  t.columns = {"x", "label"};
  t.rows = {{1.5, std::string("generic")}, {-0.25, std::string("series")}};
  std::ostringstream os;
  write_csv(os, t);
  CHECK(os.str() == "# a note\nx,label\n1.5,generic\n-0.25,series\n");
  const std::vector<std::string> head = provenance({1.0, 3.0, 1.0}, "potential");
  REQUIRE(head.size() == 3);
  CHECK(head[1] == "alpha=1 beta=3 q=1");
}

TEST_CASE("parallel_for visits every index once") {
  std::vector<std::atomic<int>> seen(1000);
  parallel_for(seen.size(), [&](std::size_t i) { seen[i]++; });
  for (const auto& s : seen) CHECK(s.load() == 1);
  CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                    if (i == 7) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
  CHECK(worker_count() >= 1);
  setenv("EPCONT_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  unsetenv("EPCONT_THREADS");
}

TEST_CASE("tables") {
  const Model m({1.0, 3.0, 1.0});
  const CsvTable pot = potential_table(m, 30.0, 31);
  CHECK(pot.columns == std::vector<std::string>{"r", "V4", "W1"});
  CHECK(pot.rows.size() == 31);
  CHECK(std::get<double>(pot.rows.back()[0]) == 30.0);
  CHECK(std::get<double>(pot.rows[0][2]) == doctest::Approx(4.32));

  const CsvTable bs = boundstates_table(m, 10.0, 11);
  CHECK(bs.columns == std::vector<std::string>{"r", "psi_B", "chi_B"});

  const CsvTable at_q = scattering_r_table(m, 1.0, 5.0, 6);
  CHECK(std::isnan(std::get<double>(at_q.rows[2][3])));
  CHECK(std::get<double>(at_q.rows[2][1]) == 0.0);

  const CsvTable sweep = scattering_k_table(m, 0.0, 4.0, 41);
  CHECK(sweep.columns ==
        std::vector<std::string>{"k", "Re(S)", "Im(S)", "Delta", "branch", "abs_S_minus_1"});
  CHECK(std::get<std::string>(sweep.rows[10][4]) == "series");
  for (const auto& row : sweep.rows) CHECK(std::abs(std::get<double>(row[5])) <= 1e-12);
}

TEST_CASE("evolve table") {
  const Model m({1.0, 3.0, 1.0});
  EvolveOptions o;
  o.t_max = 0.5;
  o.n_t = 3;
  o.r_max = 30.0;
  o.packet_r_max = 40.0;
  const CsvTable t = evolve_table(m, o);
  CHECK(t.columns ==
        std::vector<std::string>{"t", "norm_regular", "norm_chi", "overlap_psiB", "norm_chi_cn", "overlap_psiB_cn"});
  REQUIRE(t.rows.size() == 3);
  // at t = 0 the oracle columns equal the closed form
  CHECK(std::get<double>(t.rows[0][4]) == doctest::Approx(std::get<double>(t.rows[0][2])));
  CHECK(std::get<double>(t.rows[2][3]) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("parameter draws are deterministic and valid") {
  const auto a = draw_valid_params(7, 15);
  const auto b = draw_valid_params(7, 15);
  REQUIRE(a.size() == 15);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].alpha == b[i].alpha);
    CHECK(std::abs(a[i].beta) >= 0.05);
    CHECK(a[i].q >= 0.3);
    CHECK(a[i].q <= 2.0);
    CHECK(validate_no_singularity(a[i]).ok);
  }
  CHECK(draw_valid_params(8, 1)[0].alpha != a[0].alpha);
}

TEST_CASE("log-log slope") {
  std::vector<double> x, y;
  for (double e : {1e-3, 1e-2, 1e-1}) {
    x.push_back(e);
    y.push_back(5.0 * std::pow(e, 3));
  }
  CHECK(log_log_slope(x, y) == doctest::Approx(3.0));
}
