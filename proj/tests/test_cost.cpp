#include <random>

#include "doctest.h"
#include "idisc/cost.hpp"
#include "idisc/error.hpp"
#include "oracle.hpp"

using namespace idisc;

namespace {

DataSeries from_y(std::vector<double> ys) {
  std::vector<Point> raw;
  for (std::size_t i = 0; i < ys.size(); ++i) raw.push_back({static_cast<double>(i + 1), ys[i]});
  return DataSeries::canonicalize(raw);
}

CostTableOptions streaming() {
  CostTableOptions o;
  o.dense_budget_bytes = 0;
  return o;
}

}  // namespace

TEST_CASE("interval_mean") {
  const auto s = from_y({1, 2, 3, 4});
  CHECK(interval_mean(s, 0, 4) == doctest::Approx(2.5));
  CHECK(interval_mean(s, 1, 3) == doctest::Approx(2.5));
  CHECK(interval_mean(from_y({7, 7}), 0, 1) == 7.0);
}

TEST_CASE("interval costs on fixed examples") {
  CHECK(interval_cost_sq(from_y({1, 3}), 0, 2) == doctest::Approx(2.0));
  CHECK(interval_cost_sq(from_y({5, 9}), 0, 1) == 0.0);
  CHECK(interval_cost_sq(from_y({2, 6, 7, 3, 4}), 0, 5) == doctest::Approx(17.2).epsilon(1e-12));

  CHECK(interval_cost_abs(from_y({1, 3}), 0, 2) == doctest::Approx(2.0));
  CHECK(interval_cost_abs(from_y({0, 0, 6}), 0, 3) == doctest::Approx(8.0));
  CHECK(interval_cost_abs(from_y({6, 7, 3, 4}), 0, 4) == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("bad intervals are rejected") {
  const auto s = from_y({1, 2, 3});
  CHECK_THROWS_AS(interval_mean(s, 2, 2), Error);
  CHECK_THROWS_AS(interval_cost_sq(s, 2, 1), Error);
  CHECK_THROWS_AS(interval_cost_abs(s, 0, 4), Error);
  const CostTable t(s, Objective::lsqm);
  try {
    t.query(1, 1);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::bad_interval);
  }
}

TEST_CASE("cost table fixed examples") {
  const auto s = from_y({0, 0, 10, 10});
  const CostTable lsqm(s, Objective::lsqm);
  CHECK(lsqm.query(0, 2) == 0.0);
  CHECK(lsqm.query(0, 4) == doctest::Approx(100.0));
  const CostTable ladm(s, Objective::ladm);
  CHECK(ladm.query(0, 4) == doctest::Approx(20.0));
  for (const CostTable* t : {&lsqm, &ladm}) {
    for (std::size_t i = 1; i <= 4; ++i) CHECK(t->query(i - 1, i) == 0.0);
  }
}

TEST_CASE("cost table matches the two-pass oracle on every interval") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 29;
    const double lo = trial % 3 == 0 ? -1e3 : 0.0;
    const auto s = oracle::random_series(rng, n, lo, lo + 100.0);
    const auto y = oracle::ys(s);
    for (Objective obj : {Objective::lsqm, Objective::ladm}) {
      const CostTable dense(s, obj);
      const CostTable stream(s, obj, streaming());
      CHECK(dense.dense() == (obj == Objective::ladm));
      CHECK_FALSE(stream.dense());
      CostTable::Scratch scratch;
      for (std::size_t a = 0; a < n; ++a) {
        const std::vector<double> streamed(stream.row(a, scratch).begin(), stream.row(a, scratch).end());
        const auto row = dense.row(a, scratch);
        for (std::size_t b = a + 1; b <= n; ++b) {
          const double want = oracle::cost(y, a, b, obj == Objective::lsqm);
          CHECK(oracle::close(dense.query(a, b), want));
          CHECK(oracle::close(stream.query(a, b), want));
          CHECK(oracle::close(row[b - a - 1], want));
          CHECK(oracle::close(streamed[b - a - 1], want));
          CHECK(oracle::close(dense.mean(a, b), static_cast<double>(oracle::mean(y, a, b)), 1e-12, 1e-12));
          CHECK(oracle::close(interval_cost(s, a, b, obj), want));
        }
      }
    }
  }
}

TEST_CASE("L2 identity against prefix sums of squares") {
  std::mt19937_64 rng(5);
  const auto s = oracle::random_series(rng, 25);
  const auto y = oracle::ys(s);
  const CostTable t(s, Objective::lsqm);
  for (std::size_t a = 0; a < 25; ++a) {
    for (std::size_t b = a + 1; b <= 25; ++b) {
      long double s2 = 0;
      for (std::size_t i = a; i < b; ++i) s2 += static_cast<long double>(y[i]) * y[i];
      const long double mu = oracle::mean(y, a, b);
      const double identity = static_cast<double>(s2 - (b - a) * mu * mu);
      CHECK(oracle::close(t.query(a, b), identity, 1e-8, 1e-9));
    }
  }
}

TEST_CASE("constant intervals cost exactly zero") {
  const auto s = from_y({0.1, 0.1, 0.1, 0.7, 0.7, 1e4, 1e4, 1e4});
  for (Objective obj : {Objective::lsqm, Objective::ladm}) {
    for (const auto& t : {CostTable(s, obj), CostTable(s, obj, streaming())}) {
      CHECK(t.query(0, 3) == 0.0);
      CHECK(t.query(3, 5) == 0.0);
      CHECK(t.query(5, 8) == 0.0);
      CHECK(t.mean(0, 3) == 0.1);
      CHECK(t.query(2, 4) > 0.0);
    }
  }
}

TEST_CASE("translation and scaling") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + rng() % 20;
    const auto s = oracle::random_series(rng, n);
    const double c = std::uniform_real_distribution<double>(-500, 500)(rng);
    const double k = std::uniform_real_distribution<double>(0.01, 50)(rng);
    std::vector<Point> shifted, scaled;
    for (const auto& p : s.points()) {
      shifted.push_back({p.x, p.y + c});
      scaled.push_back({p.x, p.y * k});
    }
    const auto ss = DataSeries::canonicalize(shifted);
    const auto sk = DataSeries::canonicalize(scaled);
    for (Objective obj : {Objective::lsqm, Objective::ladm}) {
      const CostTable base(s, obj), shift(ss, obj), scale(sk, obj);
      const double factor = obj == Objective::lsqm ? k * k : k;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b <= n; ++b) {
          CHECK(oracle::close(shift.query(a, b), base.query(a, b), 1e-9, 1e-9));
          CHECK(oracle::close(scale.query(a, b), factor * base.query(a, b), 1e-9, 1e-12));
        }
      }
    }
  }
}

TEST_CASE("costs are non-negative") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    // Heavy ties stress the Fenwick rank boundaries.
    std::vector<double> ys(2 + rng() % 40);
    for (auto& v : ys) v = static_cast<double>(rng() % 4);
    const auto s = from_y(ys);
    for (Objective obj : {Objective::lsqm, Objective::ladm}) {
      const CostTable t(s, obj);
      for (std::size_t a = 0; a < ys.size(); ++a) {
        for (std::size_t b = a + 1; b <= ys.size(); ++b) {
          CHECK(t.query(a, b) >= 0.0);
          CHECK(oracle::close(t.query(a, b), oracle::cost(ys, a, b, obj == Objective::lsqm), 1e-9, 1e-9));
        }
      }
    }
  }
}

TEST_CASE("triangle budget") {
  CHECK(CostTable::triangle_bytes(4) == 10 * sizeof(double));
  CostTableOptions tight;
  tight.dense_budget_bytes = CostTable::triangle_bytes(10) - 1;
  std::mt19937_64 rng(1);
  CHECK_FALSE(CostTable(oracle::random_series(rng, 10), Objective::ladm, tight).dense());
  tight.dense_budget_bytes += 1;
  CHECK(CostTable(oracle::random_series(rng, 10), Objective::ladm, tight).dense());
}

TEST_CASE("serial and parallel triangle builds are identical") {
  std::mt19937_64 rng(8);
  const auto s = oracle::random_series(rng, 300);
  CostTableOptions serial;
  serial.parallel = false;
  const CostTable a(s, Objective::ladm, serial), b(s, Objective::ladm);
  CostTable::Scratch sa, sb;
  for (std::size_t m = 0; m < 300; m += 7) {
    const auto ra = a.row(m, sa);
    const auto rb = b.row(m, sb);
    CHECK(std::equal(ra.begin(), ra.end(), rb.begin()));
  }
}
