#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "intershift/lp.hpp"
#include "intershift/oracle.hpp"
#include "support.hpp"

using namespace intershift;
using intershift::testing::centers;
using intershift::testing::Gen;

namespace {

constexpr double kEps = 1e-6;

LinearProgram abs_program() {
  LinearProgram p(1);
  p.objective = {1.0};
  p.absolute = {true};
  return p;
}

}  // namespace

TEST_CASE("absolute-value split") {
  auto p = abs_program();
  p.add_constraint({1.0}, Relation::kGreaterEqual, 3.0);
  const auto split = abs_value_transform(p);
  CHECK(split.program.num_vars == 2);
  CHECK(split.program.objective == std::vector<double>{1.0, 1.0});
  CHECK(split.program.constraints[0].coefficients == std::vector<double>{1.0, -1.0});
  const auto r = solve_lp(split.program);
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.objective == doctest::Approx(3.0));
  CHECK(split.recover(r.x) == std::vector<double>{3.0});

  const auto empty = solve_lp(abs_value_transform(abs_program()).program);
  CHECK(empty.status == LpStatus::kOptimal);
  CHECK(empty.objective == 0.0);

  // Any x maps to (max(x,0), max(-x,0)) with the same objective.
  for (double x : {-2.5, 0.0, 4.0}) {
    const std::vector<double> parts{std::max(x, 0.0), std::max(-x, 0.0)};
    CHECK(split.program.evaluate(parts) == p.evaluate(std::vector<double>{x}));
    CHECK(split.recover(parts)[0] == x);
  }
}

TEST_CASE("simplex statuses") {
  LinearProgram infeasible(1);
  infeasible.nonneg = {true};
  infeasible.objective = {1.0};
  infeasible.add_constraint({1.0}, Relation::kLessEqual, -1.0);
  CHECK(solve_lp(infeasible).status == LpStatus::kInfeasible);

  LinearProgram unbounded(1);
  unbounded.nonneg = {true};
  unbounded.objective = {-1.0};
  unbounded.add_constraint({1.0}, Relation::kGreaterEqual, 1.0);
  CHECK(solve_lp(unbounded).status == LpStatus::kUnbounded);

  // min x + 2y, x + y = 4, x <= 3.
  LinearProgram eq(2);
  eq.nonneg = {true, true};
  eq.objective = {1.0, 2.0};
  eq.add_constraint({1.0, 1.0}, Relation::kEqual, 4.0);
  eq.add_constraint({1.0, 0.0}, Relation::kLessEqual, 3.0);
  const auto r = solve_lp(eq);
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.objective == doctest::Approx(5.0));
  CHECK(eq.max_violation(r.x) <= 1e-9);
}

TEST_CASE("simplex terminates on a degenerate program") {
  // Beale's cycling example; Bland's rule must terminate at -1/20.
  LinearProgram p(4);
  p.nonneg = {true, true, true, true};
  p.objective = {-0.75, 150.0, -0.02, 6.0};
  p.add_constraint({0.25, -60.0, -0.04, 9.0}, Relation::kLessEqual, 0.0);
  p.add_constraint({0.5, -90.0, -0.02, 3.0}, Relation::kLessEqual, 0.0);
  p.add_constraint({0.0, 0.0, 1.0, 0.0}, Relation::kLessEqual, 1.0);
  const auto r = solve_lp(p);
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.objective == doctest::Approx(-0.05));
}

TEST_CASE("builder row counts and errors") {
  const auto five = centers({0, 1, 2, 3, 4});
  CHECK(build_edgeless_lp(five, kEps).constraints.size() == 4);
  CHECK(build_acyclic_lp(five, kEps).constraints.size() == 3);
  CHECK(build_no_kclique_lp(five, 3, kEps).constraints.size() == 3);
  CHECK(build_no_kclique_lp(five, 6, kEps).constraints.empty());
  // Pair rows plus n - 1 order rows.
  CHECK(build_kconnected_lp(five, 2, KConnectedOffset::kValidated).constraints.size() == 7);
  CHECK(build_kconnected_lp(five, 2, KConnectedOffset::kPaperLiteral).constraints.size() == 6);
  CHECK(build_acyclic_lp(centers({0, 0}), kEps).constraints.empty());
  CHECK(build_edgeless_lp(centers({0}), kEps).constraints.empty());

  CHECK_THROWS_AS(build_edgeless_lp(Collection{}, kEps), std::invalid_argument);
  CHECK_THROWS_AS(build_edgeless_lp(centers({2, 0}), kEps), std::invalid_argument);
  CHECK_THROWS_AS(build_no_kclique_lp(five, 1, kEps), std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_kconnected_lp(centers({0, 1}), 2, KConnectedOffset::kValidated),
                       "k-connectivity needs more than k vertices", std::invalid_argument);

  const auto row = build_edgeless_lp(centers({0, 0.5}), kEps).constraints[0];
  CHECK(row.coefficients == std::vector<double>{-1.0, 1.0});
  CHECK(row.relation == Relation::kGreaterEqual);
  CHECK(row.rhs == doctest::Approx(1.0 + kEps - 0.5));
}

TEST_CASE("property solutions on the worked examples") {
  auto s = solve_property(centers({0, 0, 0}), {Property::kEdgeless, 2, kEps});
  CHECK(s.cost == doctest::Approx(2.0 + 2 * kEps).epsilon(1e-12));
  CHECK(s.cost_without_eps == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s.active_strict == 2);

  s = solve_property(centers({0, 0.5, 1}), {Property::kAcyclic, 2, kEps});
  CHECK(s.cost == doctest::Approx(kEps).epsilon(1e-9));

  s = solve_property(centers({0, 0}), {Property::kNoKClique, 2, kEps});
  CHECK(s.cost == doctest::Approx(1.0 + kEps).epsilon(1e-12));
  CHECK(solve_property(centers({0, 0}), {Property::kNoKClique, 3, kEps}).cost == 0.0);

  PropertySpec kconn{Property::kKConnected, 1, kEps, KConnectedOffset::kValidated};
  CHECK(solve_property(centers({0, 1, 4}), kconn).cost == doctest::Approx(2.0));
  kconn.offset = KConnectedOffset::kPaperLiteral;
  CHECK(solve_property(centers({0, 1, 4}), kconn).cost == doctest::Approx(3.0));

  CHECK(solve_property(centers({0, 3, 6}), {Property::kEdgeless, 2, kEps}).cost == 0.0);

  // Tied centers: overtaking would satisfy the pair row (1,4) for 2.5, but the
  // resulting graph is not 3-connected. Both left intervals must move.
  kconn = {Property::kKConnected, 3, kEps, KConnectedOffset::kValidated};
  CHECK(solve_property(centers({-3.5, 0, -3.5, 0}), kconn).cost == doctest::Approx(5.0));
}

TEST_CASE("solve_property keeps input order") {
  const auto c = centers({0, 10, 0, 0});
  const auto s = solve_property(c, {Property::kEdgeless, 2, kEps});
  CHECK(s.shifts.displacements[1] == doctest::Approx(0.0));
  const auto g = oracle::check_property(apply_shifts(c, s.shifts), oracle::GraphProperty::kEdgeless, 0,
                                        kEps / 2);
  CHECK(g.holds);
}

TEST_CASE("property solutions are feasible, valid and locally optimal") {
  Gen gen(515);
  const Property props[] = {Property::kEdgeless, Property::kAcyclic, Property::kNoKClique,
                            Property::kKConnected};
  for (auto prop : props) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto n = gen.size(2, 12);
      const auto c = gen.unit_collection(n, 4);
      PropertySpec spec{prop, 2, kEps};
      if (prop == Property::kNoKClique) spec.k = gen.size(2, n);
      if (prop == Property::kKConnected) spec.k = gen.size(1, std::min<std::size_t>(n - 1, 3));
      const auto s = solve_property(c, spec);

      const auto sorted = sort_by_center(c);
      const auto lp = build_property_lp(sorted, spec);
      std::vector<double> x(n);
      const auto order = sort_order(c);
      for (std::size_t i = 0; i < n; ++i) x[i] = s.shifts.displacements[order[i]];
      CHECK(lp.max_violation(x) <= 1e-7);

      const auto report = oracle::check_property(apply_shifts(c, s.shifts),
                                                 oracle::graph_property_for(prop), spec.k, kEps / 2);
      CHECK_MESSAGE(report.holds, to_string(prop));

      const double base = lp.evaluate(x);
      for (std::size_t i = 0; i < n; ++i) {
        for (double delta : {-1e-3, 1e-3}) {
          auto y = x;
          y[i] += delta;
          if (lp.max_violation(y) > 1e-9) continue;
          CHECK(lp.evaluate(y) >= base - 1e-9);
        }
      }
    }
  }
}

TEST_CASE("order-preserving reassignment never costs more") {
  Gen gen(616);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = gen.size(2, 8);
    const auto c = sort_by_center(gen.unit_collection(n, 5));
    std::vector<double> targets(n);
    for (auto& t : targets) t = gen.half_grid(6);
    std::vector<double> shifts(n);
    for (std::size_t i = 0; i < n; ++i) shifts[i] = targets[i] - c[i].center;
    std::sort(targets.begin(), targets.end());
    std::vector<double> sorted_shifts(n);
    for (std::size_t i = 0; i < n; ++i) sorted_shifts[i] = targets[i] - c[i].center;
    const auto a = make_shift_solution(c, shifts);
    const auto b = make_shift_solution(c, sorted_shifts);
    CHECK(apply_shifts(c, a) == apply_shifts(c, b));
    CHECK(b.total_cost <= a.total_cost);
  }
}

TEST_CASE("LP text dump") {
  std::ostringstream os;
  const auto lp = build_edgeless_lp(centers({0, 0.5}), kEps);
  CHECK_THROWS_AS(write_lp_format(os, lp), std::invalid_argument);
  write_lp_format(os, abs_value_transform(lp).program, "edgeless");
  const auto text = os.str();
  CHECK(text.find("Minimize") != std::string::npos);
  CHECK(text.find("Subject To") != std::string::npos);
  CHECK(text.find("0.500001") != std::string::npos);
  CHECK(text.find("x1p") != std::string::npos);
  CHECK(text.find("End") != std::string::npos);
}
