#pragma once

// JSON instance files and the reproducible random instance generator.
//
//   {"kind": "intervals", "name": "...", "seed": 7,
//    "items": [{"center": 0.0, "length": 1.0, "weight": 1.0}, ...]}
//   {"kind": "squares", "items": [{"x": 0.0, "y": 0.0, "weight": 1.0}, ...]}
//
// length and weight default to 1; name and seed are optional metadata.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "intershift/core.hpp"
#include "intershift/squares.hpp"

namespace intershift {

enum class InstanceKind { kIntervals, kSquares };

struct Instance {
  InstanceKind kind = InstanceKind::kIntervals;
  std::vector<Interval> intervals;
  std::vector<UnitSquare> squares;
  std::string name;
  std::optional<std::uint64_t> seed;

  Collection collection() const { return Collection(intervals); }
  std::size_t size() const {
    return kind == InstanceKind::kIntervals ? intervals.size() : squares.size();
  }
  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Parse failure. what() names the offending field, e.g. "items[2].length".
class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Instance parse_instance(const std::string& text);
Instance load_instance(const std::filesystem::path& path);
/// Pretty-printed JSON; doubles use the shortest exact round-trip form.
std::string emit_instance(const Instance& instance);

struct GenerateOptions {
  std::size_t n = 0;
  std::uint64_t seed = 1;
  double span = 10.0;
  double grid = 0.5;
  InstanceKind kind = InstanceKind::kIntervals;
};

/// Draws coordinates from std::mt19937_64(seed): with s = floor(span / grid),
/// each coordinate is ((u mod (2s + 1)) - s) * grid for the next raw 64-bit
/// output u. Squares draw x then y. Lengths and weights are 1.
/// Throws std::invalid_argument when n == 0 or grid <= 0.
Instance generate_instance(const GenerateOptions& options);

}  // namespace intershift
