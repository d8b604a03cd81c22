#pragma once

// Linear-programming formulations for reaching edgeless, acyclic, k-clique-free
// and k-connected unit interval graphs at minimum total displacement, plus the
// dense simplex that solves them.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "intershift/core.hpp"

namespace intershift {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct Constraint {
  std::vector<double> coefficients;
  Relation relation = Relation::kGreaterEqual;
  double rhs = 0.0;
};

/// minimise sum_j objective[j] * (absolute[j] ? |x_j| : x_j) subject to the
/// constraint rows, with x_j >= 0 wherever nonneg[j].
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<double> objective;
  std::vector<bool> absolute;
  std::vector<Constraint> constraints;
  std::vector<bool> nonneg;
  std::vector<std::string> names;  // optional variable names for dumps

  explicit LinearProgram(std::size_t vars = 0)
      : num_vars(vars), objective(vars, 0.0), absolute(vars, false), nonneg(vars, false) {}

  void add_constraint(std::vector<double> coefficients, Relation relation, double rhs);
  double evaluate(std::span<const double> x) const;
  /// Largest violation over all rows and sign restrictions.
  double max_violation(std::span<const double> x) const;
};

/// Each free variable x_j becomes x_j' - x_j'' with both parts nonnegative;
/// |x_j| in the objective becomes x_j' + x_j''.
struct SplitProgram {
  LinearProgram program;
  struct Split {
    std::size_t positive;
    std::optional<std::size_t> negative;
  };
  std::vector<Split> splits;  // one per original variable

  std::vector<double> recover(std::span<const double> solution) const;
};

SplitProgram abs_value_transform(const LinearProgram& p);

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };
std::string to_string(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;
  double objective = 0.0;
  std::size_t pivots = 0;
};

/// Two-phase primal simplex on a dense tableau with Bland's rule. Every
/// variable must be nonnegative and no objective term may be absolute.
LpResult solve_lp(const LinearProgram& p);

/// Writes the program in CPLEX LP text format.
void write_lp_format(std::ostream& os, const LinearProgram& p, const std::string& title = "");

enum class Property { kEdgeless, kAcyclic, kNoKClique, kKConnected };
std::string to_string(Property p);

/// Pair offset used by the k-connectivity constraints: kValidated pairs
/// I_i with I_{i+k}; kPaperLiteral pairs I_i with I_{i+k+1}.
enum class KConnectedOffset { kValidated, kPaperLiteral };

struct PropertySpec {
  Property property = Property::kEdgeless;
  std::size_t k = 2;
  double eps = 1e-6;
  KConnectedOffset offset = KConnectedOffset::kValidated;
};

/// Builders expect unit intervals sorted by center. Variable i is the
/// displacement of the i-th interval; the objective is sum_i w_i |x_i|.
LinearProgram build_edgeless_lp(const Collection& c, double eps);
LinearProgram build_acyclic_lp(const Collection& c, double eps);
LinearProgram build_no_kclique_lp(const Collection& c, std::size_t k, double eps);
LinearProgram build_kconnected_lp(const Collection& c, std::size_t k, KConnectedOffset offset);
LinearProgram build_property_lp(const Collection& c, const PropertySpec& spec);

/// Number of rows whose slack is within tol of zero.
std::size_t active_constraints(const LinearProgram& p, std::span<const double> x, double tol = 1e-9);

struct PropertySolution {
  ShiftSolution shifts;              // input order
  double cost = 0.0;
  double cost_without_eps = 0.0;     // cost minus eps per tight strict row
  std::size_t active_strict = 0;
  std::size_t pivots = 0;
};

class InfeasibleProgram : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sorts, builds, splits and solves. Throws InfeasibleProgram when the
/// simplex does not report an optimum.
PropertySolution solve_property(const Collection& c, const PropertySpec& spec);

}  // namespace intershift
