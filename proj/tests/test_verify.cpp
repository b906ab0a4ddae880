#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>

#include "qcs/verify/limits.hpp"
#include "qcs/verify/parallel.hpp"
#include "qcs/verify/prng.hpp"
#include "qcs/verify/suites.hpp"
#include "qcs/verify/tables.hpp"
#include "support.hpp"

using namespace qcs::verify;

TEST_CASE("SplitMix64 reference stream") {
  SplitMix64 r(0);
  CHECK(r.next() == 0xE220A8397B1DCDAFULL);
  CHECK(r.next() == 0x6E789E6AA1B965F4ULL);
  SplitMix64 a = job_rng(7, "tag", 3), b = job_rng(7, "tag", 3), c = job_rng(7, "tag", 4);
  const auto va = a.next();
  CHECK(va == b.next());
  CHECK(va != c.next());
  for (int i = 0; i < 100; ++i) {
    const double u = a.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("cases") {
  CHECK(make_case({}, 1e-12, 1e-10).pass);
  CHECK_FALSE(make_case({}, 1e-9, 1e-10).pass);
  CHECK_FALSE(make_case({}, std::numeric_limits<double>::quiet_NaN(), 1e-10).pass);
  CHECK_FALSE(make_case({}, std::numeric_limits<double>::infinity(), 1e-10).pass);
}

TEST_CASE("render ends with a newline") {
  const std::string s = render(Json{{"a", 1}});
  REQUIRE_FALSE(s.empty());
  CHECK(s.back() == '\n');
}

TEST_CASE("parallel loops are index stable") {
  std::atomic<int> count{0};
  parallel_for(1000, [&](std::size_t) { ++count; });
  CHECK(count == 1000);
  const auto v = parallel_map<std::size_t>(50, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == i * i);
}

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 11);
  CHECK(is_suite("qidentities"));
  CHECK_FALSE(is_suite("nope"));
  CHECK_THROWS_AS(run_suite("nope", RunSettings{}), std::invalid_argument);
}

TEST_CASE("a suite is deterministic and passes") {
  RunSettings s;
  s.q_list = {0.5};
  s.m_max = 2;
  s.j_max = 4;
  const SuiteReport a = run_suite("wall-orthogonality", s);
  const SuiteReport b = run_suite("wall-orthogonality", s);
  CHECK(a.failed() == 0);
  CHECK(a.passed() > 0);
  CHECK(render(to_json(a, false)) == render(to_json(b, false)));
  CHECK(to_json(a, false)["summary"]["wall_time_ms"] == 0);
}

TEST_CASE("decrease ratio") {
  LimitSeries s;
  s.error = {1e-2, 1e-3, 1e-4};
  CHECK(decrease_ratio(s) == doctest::Approx(0.1));
  s.error = {1e-2, 2e-2, 1e-4};
  CHECK(decrease_ratio(s) == doctest::Approx(2.0));
  s.error = {1e-13, 5e-13, 1e-13};
  CHECK(decrease_ratio(s) <= 1.0);
}

TEST_CASE("tables") {
  const std::string k = table_csv("energies", TableSpec{0.5, 0, 3});
  std::istringstream in(k);
  std::string line;
  std::getline(in, line);
  CHECK(line == "j,energy,classical");
  std::getline(in, line);
  CHECK(line.rfind("0,0.5,0.5", 0) == 0);
  CHECK(k.find('\r') == std::string::npos);
  CHECK_THROWS(table_csv("nope", TableSpec{}));
}
