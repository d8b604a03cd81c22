#pragma once

// Brute-force references. Nothing here shares code paths with the solvers
// beyond the cost function itself: endpoints are scanned exhaustively, graphs
// are built pairwise and properties are decided by direct search.

#include <cstddef>
#include <string>
#include <vector>

#include "intershift/core.hpp"
#include "intershift/lp.hpp"
#include "intershift/squares.hpp"

namespace intershift::oracle {

struct PointCost {
  double point = 0.0;
  double cost = 0.0;
};

/// Minimum of D over every endpoint; the leftmost minimiser is reported. O(n^2).
PointCost oracle_gathering(const Collection& c);

/// Minimum of the square cost over x-endpoints x y-endpoints. O(n^3).
struct SquareOracleResult {
  Point2 point;
  double cost = 0.0;
};
SquareOracleResult oracle_squares(std::span<const UnitSquare> squares);

struct WindowOracleResult {
  std::size_t window_start = 0;  // 1-based
  double point = 0.0;
  double cost = 0.0;
};

/// Every window of k consecutive intervals (center order) at its k-th and
/// (k+1)-th endpoint, each cost computed from scratch. Ties resolve to the
/// lowest window, then the k-th endpoint.
WindowOracleResult oracle_kclique_windows(const Collection& c, std::size_t k);

/// Every k-subset at every endpoint of its members. Exponential; n <= 12.
double oracle_kclique_full(const Collection& c, std::size_t k);

enum class GraphProperty { kComplete, kEdgeless, kAcyclic, kHasKClique, kNoKClique, kKConnected };
std::string to_string(GraphProperty p);

struct PropertyReport {
  std::string property;
  bool holds = false;
  std::string witness_kind;            // "pair", "edge", "cycle", "clique", "separator", ""
  std::vector<std::size_t> witness;    // vertex indices (0-based, input order)
};

/// Decides the property on the intersection graph of c, treating intervals
/// as intersecting when max(l) <= min(r) + tolerance. k-connectivity is
/// decided exhaustively for n <= 12 and by the index-gap rule
/// c_{i+k} - c_i <= 1 on unit intervals above that.
PropertyReport check_property(const Collection& c, GraphProperty property, std::size_t k = 0,
                              double tolerance = 0.0);

/// Largest number of intervals sharing a point, with one such set.
struct CliqueWitness {
  std::size_t size = 0;
  std::vector<std::size_t> members;
};
CliqueWitness max_clique_sweep(const Collection& c, double tolerance = 0.0);

/// Connected after deleting every vertex subset of size < k; false if n <= k.
/// On failure `separator` receives a disconnecting set.
bool k_connected_exhaustive(const IntersectionGraph& g, std::size_t k,
                            std::vector<std::size_t>* separator = nullptr);

GraphProperty graph_property_for(Property p);

struct GridOptions {
  double bound = 5.0;
  double step = 1.0 / 16;
  int refinements = 2;
};

struct GridResult {
  double cost = 0.0;
  std::vector<double> displacements;
  bool found = false;
};

/// Exhaustive search over shift vectors on a grid in [-bound, bound]^n,
/// pruned by partial cost, followed by refinement passes at step/4 around
/// the incumbent. Feasibility is decided on the exact intersection graph;
/// for edgeless, acyclic and no-kclique, intervals that merely touch count as
/// disjoint, so the result is the infimum over the closure. n <= 4.
GridResult grid_search_lp(const Collection& c, const PropertySpec& spec, GridOptions options = {});

}  // namespace intershift::oracle
