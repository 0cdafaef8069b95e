#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "latcut/lp.hpp"
#include "oracle_lp.hpp"

using namespace latcut;

namespace {
std::vector<Rational> row(std::initializer_list<Rational> l) { return {l}; }
}  // namespace

TEST_CASE("worked split LPs") {
  // three-split LP at f = (2/3, 2/3): value 1/2, point (1/6, 1/6, 1/6)
  Rational f1(2, 3), f2(2, 3);
  LPProblem p(3, {row({(f1 + f2) / (f1 + f2 - 1), 1, 1}),
                  row({1, (2 - f1) / (1 - f1), 1}),
                  row({1, 1, (2 - f2) / (1 - f2)})});
  LPSolution sol = solve_min_sum(p);
  CHECK(sol.value == Rational(1, 2));
  CHECK(sol.point == std::vector<Rational>{Rational(1, 6), Rational(1, 6), Rational(1, 6)});
  CHECK(sol.tight_rows == std::vector<size_t>{0, 1, 2});
  CHECK(testing::brute_force_min_sum(p) == Rational(1, 2));

  // two-split LP at f = (1/4, 1/4): value 3/5, point (0, 3/10, 3/10)
  Rational g1(1, 4), g2(1, 4);
  LPProblem q(3, {row({1, (2 - g1) / (1 - g1), 1}), row({1, 1, (2 - g2) / (1 - g2)})});
  LPSolution qs = solve_min_sum(q);
  CHECK(qs.value == Rational(3, 5));
  CHECK(testing::brute_force_min_sum(q) == Rational(3, 5));
  std::vector<Rational> stated{Rational(0), Rational(3, 10), Rational(3, 10)};
  Rational total(0);
  for (size_t i = 0; i < q.rows.size(); ++i) {
    Rational lhs(0);
    for (size_t j = 0; j < 3; ++j) lhs += q.rows[i][j] * stated[j];
    CHECK(lhs >= 1);
  }
  for (const auto& s : stated) total += s;
  CHECK(total == qs.value);

  // a single all-ones row has optimum 1
  CHECK(solve_min_sum(LPProblem(4, {row({1, 1, 1, 1})})).value == 1);
}

TEST_CASE("construction rejects hopeless rows") {
  CHECK_THROWS_AS(LPProblem(2, {row({Rational(0), Rational(0)})}), InfeasibleProblem);
  CHECK_THROWS_AS(LPProblem(2, {row({Rational(-1), Rational(1)})}), ParamOutOfRange);
  CHECK_THROWS_AS(LPProblem(2, std::vector<std::vector<Rational>>{}), ParamOutOfRange);
}

TEST_CASE("simplex agrees with the vertex-enumeration oracle") {
  std::mt19937_64 rng(23);
  auto rnd = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < 300; ++trial) {
    size_t n = rnd(1, 4), m = rnd(1, 6);
    std::vector<std::vector<Rational>> rows;
    for (size_t i = 0; i < m; ++i) {
      std::vector<Rational> r;
      bool pos = false;
      for (size_t j = 0; j < n; ++j) {
        int num = rnd(0, 12) <= 3 ? 0 : rnd(1, 9);
        r.push_back(Rational(num, rnd(1, 4)));
        pos |= num > 0;
      }
      if (!pos) r[rnd(0, static_cast<int>(n) - 1)] = Rational(rnd(1, 5));
      rows.push_back(std::move(r));
    }
    LPProblem p(n, rows);
    std::vector<Rational> c;
    for (size_t j = 0; j < n; ++j) c.push_back(Rational(rnd(0, 6), rnd(1, 3)));
    LPSolution sol = solve_min(p, c);  // certifies optimality internally
    CHECK(sol.value == testing::brute_force_min(p, c));
  }
}

TEST_CASE("duality certificate is exact") {
  LPProblem p(3, {row({Rational(2), Rational(1), Rational(0)}),
                  row({Rational(0), Rational(1), Rational(3)})});
  LPSolution sol = solve_min_sum(p);
  Rational dual_total(0);
  for (const auto& y : sol.dual) {
    CHECK(y >= 0);
    dual_total += y;
  }
  CHECK(dual_total == sol.value);
}

TEST_CASE("column scaling consistency") {
  // Scaling column j by kappa and the optimal coordinate by 1/kappa keeps
  // feasibility and the same tight rows.
  LPProblem p(3, {row({Rational(4), Rational(1), Rational(1)}),
                  row({Rational(1), Rational(4), Rational(1)}),
                  row({Rational(1), Rational(1), Rational(4)})});
  LPSolution sol = solve_min_sum(p);
  Rational kappa(3, 2);
  std::vector<std::vector<Rational>> scaled_rows = p.rows;
  for (auto& r : scaled_rows) r[1] *= kappa;
  LPProblem scaled(3, scaled_rows);
  std::vector<Rational> x = sol.point;
  x[1] /= kappa;
  for (size_t i = 0; i < scaled.rows.size(); ++i) {
    Rational lhs(0);
    for (size_t j = 0; j < 3; ++j) lhs += scaled.rows[i][j] * x[j];
    bool was_tight =
        std::find(sol.tight_rows.begin(), sol.tight_rows.end(), i) != sol.tight_rows.end();
    CHECK(lhs >= 1);
    CHECK((lhs == 1) == was_tight);
  }
}

TEST_CASE("corner-ray reduction") {
  std::vector<Ray2> rays{Ray2{Rational(-1), Rational(0)}, Ray2{Rational(1), Rational(0)},
                         Ray2{Rational(0), Rational(1)}, Ray2{Rational(0), Rational(1)}};
  LPProblem p(4, {row({Rational(1), Rational(2), Rational(1), Rational(1)}),
                  row({Rational(2), Rational(1), Rational(1), Rational(1)})});
  // duplicated fourth ray drops out
  LPProblem r1 = corner_ray_reduce(p, rays, {0, 1, 2});
  CHECK(r1.num_vars == 3);
  CHECK(solve_min_sum(r1).value == solve_min_sum(p).value);

  // identity reduction
  LPProblem r2 = corner_ray_reduce(p, rays, {0, 1, 2, 3});
  CHECK(r2.num_vars == 4);
  CHECK(r2.rows == p.rows);

  // a mid-edge ray is a strict convex combination of the two corners
  std::vector<Ray2> rays2{Ray2{Rational(-2), Rational(-1)}, Ray2{Rational(2), Rational(-1)},
                          Ray2{Rational(0), Rational(-1)}};
  LPProblem p2(3, {row({Rational(1), Rational(1), Rational(1)}),
                   row({Rational(3), Rational(1), Rational(2)})});
  LPProblem r3 = corner_ray_reduce(p2, rays2, {0, 1});
  CHECK(solve_min_sum(r3).value == solve_min_sum(p2).value);

  // rejects rays outside every corner segment
  std::vector<Ray2> rays3{Ray2{Rational(-1), Rational(0)}, Ray2{Rational(1), Rational(0)},
                          Ray2{Rational(0), Rational(1)}};
  CHECK_THROWS_AS(corner_ray_reduce(p2, rays3, {0, 1}), NotConvexCombination);
}
