#include "intershift/lp.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace intershift {
namespace {

void require_unit_sorted(const Collection& c) {
  if (c.empty()) throw std::invalid_argument("empty instance");
  if (!c.sorted_by_center()) throw std::invalid_argument("collection must be sorted by center");
  for (const auto& it : c.items()) {
    if (it.length != 1.0) throw std::invalid_argument("requires unit intervals");
  }
}

LinearProgram shift_program(const Collection& c) {
  LinearProgram p(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    p.objective[i] = c[i].weight;
    p.absolute[i] = true;
    p.names.push_back("x" + std::to_string(i + 1));
  }
  return p;
}

// (c_j + x_j) - (c_i + x_i) <relation> bound, i.e. x_j - x_i <relation> bound - (c_j - c_i).
void add_gap_row(LinearProgram& p, const Collection& c, std::size_t i, std::size_t j,
                 Relation relation, double bound) {
  std::vector<double> row(p.num_vars, 0.0);
  row[j] += 1.0;
  row[i] -= 1.0;
  p.add_constraint(std::move(row), relation, bound - (c[j].center - c[i].center));
}

// Every row at least `gap` apart, for pairs offset by `offset` positions.
LinearProgram separation_program(const Collection& c, std::size_t offset, double eps) {
  LinearProgram p = shift_program(c);
  for (std::size_t i = 0; i + offset < c.size(); ++i) {
    add_gap_row(p, c, i, i + offset, Relation::kGreaterEqual, 1.0 + eps);
  }
  return p;
}

double row_activity(const Constraint& row, std::span<const double> x) {
  double s = 0.0;
  for (std::size_t j = 0; j < row.coefficients.size(); ++j) s += row.coefficients[j] * x[j];
  return s;
}

void write_number(std::ostream& os, double v) {
  std::ostringstream tmp;
  tmp << std::setprecision(12) << v;
  os << tmp.str();
}

}  // namespace

void LinearProgram::add_constraint(std::vector<double> coefficients, Relation relation,
                                   double rhs) {
  if (coefficients.size() != num_vars) {
    throw std::invalid_argument("constraint row length does not match variable count");
  }
  constraints.push_back({std::move(coefficients), relation, rhs});
}

double LinearProgram::evaluate(std::span<const double> x) const {
  double v = 0.0;
  for (std::size_t j = 0; j < num_vars; ++j) {
    v += objective[j] * (absolute[j] ? std::abs(x[j]) : x[j]);
  }
  return v;
}

double LinearProgram::max_violation(std::span<const double> x) const {
  double worst = 0.0;
  for (const auto& row : constraints) {
    const double a = row_activity(row, x);
    switch (row.relation) {
      case Relation::kLessEqual: worst = std::max(worst, a - row.rhs); break;
      case Relation::kGreaterEqual: worst = std::max(worst, row.rhs - a); break;
      case Relation::kEqual: worst = std::max(worst, std::abs(a - row.rhs)); break;
    }
  }
  for (std::size_t j = 0; j < num_vars; ++j) {
    if (nonneg[j]) worst = std::max(worst, -x[j]);
  }
  return worst;
}

std::vector<double> SplitProgram::recover(std::span<const double> solution) const {
  std::vector<double> x(splits.size(), 0.0);
  for (std::size_t j = 0; j < splits.size(); ++j) {
    x[j] = solution[splits[j].positive];
    if (splits[j].negative) x[j] -= solution[*splits[j].negative];
  }
  return x;
}

SplitProgram abs_value_transform(const LinearProgram& p) {
  SplitProgram out;
  std::vector<double> objective;
  std::vector<std::string> names;
  auto name_of = [&](std::size_t j) {
    return j < p.names.size() ? p.names[j] : "x" + std::to_string(j + 1);
  };
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    SplitProgram::Split split{objective.size(), std::nullopt};
    if (p.nonneg[j]) {
      // Already sign-restricted: |x| == x.
      objective.push_back(p.objective[j]);
      names.push_back(name_of(j));
    } else {
      objective.push_back(p.objective[j]);
      names.push_back(name_of(j) + "p");
      split.negative = objective.size();
      objective.push_back(p.absolute[j] ? p.objective[j] : -p.objective[j]);
      names.push_back(name_of(j) + "n");
    }
    out.splits.push_back(split);
  }

  LinearProgram& q = out.program;
  q = LinearProgram(objective.size());
  q.objective = std::move(objective);
  q.names = std::move(names);
  std::fill(q.nonneg.begin(), q.nonneg.end(), true);
  for (const auto& row : p.constraints) {
    std::vector<double> coeffs(q.num_vars, 0.0);
    for (std::size_t j = 0; j < p.num_vars; ++j) {
      coeffs[out.splits[j].positive] = row.coefficients[j];
      if (out.splits[j].negative) coeffs[*out.splits[j].negative] = -row.coefficients[j];
    }
    q.add_constraint(std::move(coeffs), row.relation, row.rhs);
  }
  return out;
}

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

std::string to_string(Property p) {
  switch (p) {
    case Property::kEdgeless: return "edgeless";
    case Property::kAcyclic: return "acyclic";
    case Property::kNoKClique: return "no-kclique";
    case Property::kKConnected: return "kconnected";
  }
  return "unknown";
}

void write_lp_format(std::ostream& os, const LinearProgram& p, const std::string& title) {
  if (std::any_of(p.absolute.begin(), p.absolute.end(), [](bool b) { return b; })) {
    throw std::invalid_argument("absolute objective terms must be split before export");
  }
  auto name = [&](std::size_t j) {
    return j < p.names.size() ? p.names[j] : "x" + std::to_string(j + 1);
  };
  auto write_terms = [&](const std::vector<double>& coeffs) {
    bool first = true;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0.0) continue;
      os << (coeffs[j] < 0 ? " - " : (first ? " " : " + "));
      write_number(os, std::abs(coeffs[j]));
      os << ' ' << name(j);
      first = false;
    }
    if (first) os << " 0 " << name(0);
  };

  if (!title.empty()) os << "\\ " << title << '\n';
  os << "Minimize\n obj:";
  write_terms(p.objective);
  os << "\nSubject To\n";
  for (std::size_t r = 0; r < p.constraints.size(); ++r) {
    const auto& row = p.constraints[r];
    os << " c" << r + 1 << ':';
    write_terms(row.coefficients);
    os << (row.relation == Relation::kLessEqual ? " <= "
           : row.relation == Relation::kGreaterEqual ? " >= " : " = ");
    write_number(os, row.rhs);
    os << '\n';
  }
  os << "Bounds\n";
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    if (!p.nonneg[j]) os << ' ' << name(j) << " free\n";
  }
  os << "End\n";
}

LinearProgram build_edgeless_lp(const Collection& c, double eps) {
  require_unit_sorted(c);
  return separation_program(c, 1, eps);
}

LinearProgram build_acyclic_lp(const Collection& c, double eps) {
  require_unit_sorted(c);
  return separation_program(c, 2, eps);
}

LinearProgram build_no_kclique_lp(const Collection& c, std::size_t k, double eps) {
  require_unit_sorted(c);
  if (k < 2) throw std::invalid_argument("no-kclique requires k >= 2");
  if (k > c.size()) return shift_program(c);
  return separation_program(c, k - 1, eps);
}

LinearProgram build_kconnected_lp(const Collection& c, std::size_t k, KConnectedOffset offset) {
  require_unit_sorted(c);
  if (k < 1) throw std::invalid_argument("k-connectivity requires k >= 1");
  if (c.size() <= k) throw std::invalid_argument("k-connectivity needs more than k vertices");
  const std::size_t delta = offset == KConnectedOffset::kValidated ? k : k + 1;
  LinearProgram p = shift_program(c);
  for (std::size_t i = 0; i + delta < c.size(); ++i) {
    add_gap_row(p, c, i, i + delta, Relation::kLessEqual, 1.0);
  }
  // Pulling constraints alone let intervals overtake each other, which
  // satisfies the pair rows without producing the graph they describe. Sorting
  // any solution never raises its cost, so fixing the order loses nothing.
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    add_gap_row(p, c, i, i + 1, Relation::kGreaterEqual, 0.0);
  }
  return p;
}

LinearProgram build_property_lp(const Collection& c, const PropertySpec& spec) {
  if (spec.property != Property::kKConnected && !(spec.eps > 0.0)) {
    throw std::invalid_argument("eps must be positive");
  }
  switch (spec.property) {
    case Property::kEdgeless: return build_edgeless_lp(c, spec.eps);
    case Property::kAcyclic: return build_acyclic_lp(c, spec.eps);
    case Property::kNoKClique: return build_no_kclique_lp(c, spec.k, spec.eps);
    case Property::kKConnected: return build_kconnected_lp(c, spec.k, spec.offset);
  }
  throw std::invalid_argument("unknown property");
}

std::size_t active_constraints(const LinearProgram& p, std::span<const double> x, double tol) {
  std::size_t active = 0;
  for (const auto& row : p.constraints) {
    if (std::abs(row_activity(row, x) - row.rhs) <= tol) ++active;
  }
  return active;
}

PropertySolution solve_property(const Collection& c, const PropertySpec& spec) {
  const auto order = sort_order(c);
  std::vector<Interval> sorted_items;
  sorted_items.reserve(c.size());
  for (auto i : order) sorted_items.push_back(c[i]);
  const Collection sorted(std::move(sorted_items));

  const LinearProgram lp = build_property_lp(sorted, spec);
  const SplitProgram split = abs_value_transform(lp);
  const LpResult res = solve_lp(split.program);
  if (res.status != LpStatus::kOptimal) {
    throw InfeasibleProgram(to_string(spec.property) + " program is " + to_string(res.status));
  }
  const auto x_sorted = split.recover(res.x);

  std::vector<double> d(c.size(), 0.0);
  for (std::size_t j = 0; j < order.size(); ++j) d[order[j]] = x_sorted[j];

  PropertySolution out;
  out.shifts = make_shift_solution(c, std::move(d));
  out.cost = out.shifts.total_cost;
  out.pivots = res.pivots;
  if (spec.property != Property::kKConnected) {
    out.active_strict = active_constraints(lp, x_sorted, 1e-7);
    out.cost_without_eps = out.cost - spec.eps * static_cast<double>(out.active_strict);
  } else {
    out.cost_without_eps = out.cost;
  }
  return out;
}

}  // namespace intershift
