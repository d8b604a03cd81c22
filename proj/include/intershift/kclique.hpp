#pragma once

// Minimum-cost k-clique on equal-length, equal-weight intervals. An optimal
// solution gathers k consecutive intervals (in center order) at the k-th or
// (k+1)-th endpoint of that window, so the solver slides a window of k
// intervals across the sorted collection and updates the window cost
// incrementally instead of recomputing it.

#include <cstddef>
#include <vector>

#include "intershift/core.hpp"

namespace intershift {

/// Per-slide record kept when tracing is requested. Costs refer to the
/// window starting at window_start (1-based).
struct SlideTrace {
  std::size_t window_start = 0;
  double x_k = 0.0;
  double x_k1 = 0.0;
  double incremental_at_k = 0.0;
  double scratch_at_k = 0.0;
  double incremental_at_k1 = 0.0;
  double scratch_at_k1 = 0.0;
  // No endpoint of old window + incoming interval lies strictly between the
  // old window's (k+1)-th endpoint and the new window's k-th endpoint.
  bool gap_free = true;
};

struct CliqueResult {
  std::size_t window_start = 0;  // 1-based, in center order
  double point = 0.0;
  double cost = 0.0;
  ShiftSolution shifts;          // input order; zero outside the window
  std::vector<std::size_t> members;  // input indices of the gathered window
  std::vector<SlideTrace> trace;
};

struct KCliqueOptions {
  /// Record every window's incremental and from-scratch costs. O(n k).
  bool trace = false;
};

/// Throws std::invalid_argument when the collection is empty, k is outside
/// [1, n], or lengths/weights are not all equal.
CliqueResult solve_kclique(const Collection& c, std::size_t k, KCliqueOptions options = {});

/// Cost at x_{n+1} from the cost at x_n of the same window:
/// D + (x_{n+1} - x_n) * slope * (|L(x_{n+1})| - |R(x_n)|).
double update_same_window(double d_at_xn, double x_n, double x_np1, std::size_t left_count,
                          std::size_t right_count, double slope = 1.0);

/// Window-relative counts for the new window J after a slide.
struct SlideCounts {
  std::size_t left_at_new = 0;    // |L(J, x_new)|
  std::size_t right_at_new = 0;   // |R(J, x_new)|
  std::size_t left_at_prev = 0;   // |L(J, x_prev)|
  std::size_t right_at_prev = 0;  // |R(J, x_prev)|
};

/// Cost of the new window at its k-th endpoint x_new, given the old window's
/// cost at its (k+1)-th endpoint x_prev and the moving distances to x_prev of
/// the removed (d_out) and added (d_in) intervals.
double update_shift_window(double d_prev, double x_prev, double x_new, const SlideCounts& counts,
                           double d_out, double d_in, double slope = 1.0);

}  // namespace intershift
