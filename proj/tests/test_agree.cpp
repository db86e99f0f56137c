#include <algorithm>
#include <functional>
#include <random>

#include "doctest.h"
#include "idisc/agree.hpp"
#include "idisc/error.hpp"

using namespace idisc;

namespace {

// Exhaustive search over all partial matchings: (max pairs, min distance).
std::pair<std::size_t, double> best_matching(const std::vector<double>& a, const std::vector<double>& b,
                                             double tol) {
  std::pair<std::size_t, double> best{0, 0.0};
  std::vector<bool> used(b.size(), false);
  std::function<void(std::size_t, std::size_t, double)> rec = [&](std::size_t i, std::size_t count,
                                                                   double dist) {
    if (i == a.size()) {
      if (count > best.first || (count == best.first && dist < best.second)) best = {count, dist};
      return;
    }
    rec(i + 1, count, dist);
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double d = std::abs(a[i] - b[j]);
      if (!used[j] && d <= tol) {
        used[j] = true;
        rec(i + 1, count + 1, dist + d);
        used[j] = false;
      }
    }
  };
  rec(0, 0, 0.0);
  return best;
}

}  // namespace

TEST_CASE("agreement examples") {
  CHECK(agreement_score({{50}}, {{50}}, 2).score == 1.0);

  const auto r = agreement_score({{20, 50}}, {{48, 60}}, 2);
  CHECK(r.score == 0.5);
  REQUIRE(r.matched.size() == 1);
  CHECK(r.matched[0].a == 50);
  CHECK(r.matched[0].b == 48);
  CHECK(r.matched[0].distance == 2);
  CHECK(r.unmatched_a == std::vector<double>{20});
  CHECK(r.unmatched_b == std::vector<double>{60});

  CHECK(agreement_score({}, {}, 2).score == 1.0);
  CHECK(agreement_score({{50}}, {}, 2).score == 0.0);
  CHECK_THROWS_AS(agreement_score({{1}}, {{1}}, -1), Error);
}

TEST_CASE("matching prefers the closer partner among maximum matchings") {
  const auto r = agreement_score({{1, 2}}, {{2.5}}, 2);
  REQUIRE(r.matched.size() == 1);
  CHECK(r.matched[0].a == 2);
  CHECK(r.unmatched_a == std::vector<double>{1});
}

TEST_CASE("matching agrees with exhaustive search") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> value(0, 30);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> a(rng() % 6), b(rng() % 6);
    for (auto& v : a) v = value(rng);
    for (auto& v : b) v = value(rng);
    const double tol = static_cast<double>(rng() % 6);
    const auto r = agreement_score({a}, {b}, tol);
    const auto [count, dist] = best_matching(a, b, tol);
    CHECK(r.matched.size() == count);
    double total = 0;
    for (const auto& m : r.matched) {
      CHECK(m.distance <= tol);
      total += m.distance;
    }
    CHECK(total == doctest::Approx(dist));
    CHECK(r.matched.size() + r.unmatched_a.size() == a.size());
    CHECK(r.matched.size() + r.unmatched_b.size() == b.size());
  }
}

TEST_CASE("agreement invariants") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> value(0, 100);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> a(1 + rng() % 6), b(rng() % 6);
    for (auto& v : a) v = value(rng);
    for (auto& v : b) v = value(rng);
    const double tol = value(rng) / 10;
    CHECK(agreement_score({a}, {b}, tol).score == agreement_score({b}, {a}, tol).score);
    CHECK(agreement_score({a}, {a}, 0).score == 1.0);
    CHECK(agreement_score({a}, {b}, tol).score <= agreement_score({a}, {b}, tol * 1.5 + 0.1).score);
    const double s = agreement_score({a}, {b}, tol).score;
    CHECK(s >= 0.0);
    CHECK(s <= 1.0);
  }
}

TEST_CASE("band classification") {
  CHECK(classify_match(0.913) == MatchBand::very_high);
  CHECK(classify_match(0.62) == MatchBand::high);
  CHECK(classify_match(0.0) == MatchBand::no_match);
  CHECK(classify_match(1.0) == MatchBand::very_high);
  CHECK(classify_match(0.005) == MatchBand::low);
  CHECK(classify_match(0.4) == MatchBand::medium);
  CHECK(classify_match(0.6) == MatchBand::high);
  CHECK(classify_match(0.8) == MatchBand::very_high);
  CHECK(to_string(MatchBand::very_high) == "Very High");
  try {
    classify_match(1.01);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::out_of_range);
  }
  CHECK_THROWS_AS(classify_match(-0.1), Error);
}
