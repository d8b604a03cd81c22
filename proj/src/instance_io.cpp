#include "intershift/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace intershift {
namespace {

using nlohmann::json;

double number_field(const json& item, const char* field, const std::string& where,
                    std::optional<double> fallback) {
  if (!item.contains(field)) {
    if (fallback) return *fallback;
    throw InstanceError(where + "." + field + ": missing");
  }
  const auto& v = item.at(field);
  if (!v.is_number()) throw InstanceError(where + "." + field + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw InstanceError(where + "." + field + ": must be finite");
  return d;
}

double positive_field(const json& item, const char* field, const std::string& where) {
  const double d = number_field(item, field, where, 1.0);
  if (!(d > 0.0)) throw InstanceError(where + "." + field + ": must be positive");
  return d;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InstanceError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InstanceError("document: expected an object");

  Instance inst;
  const std::string kind = doc.value("kind", std::string("intervals"));
  if (kind == "intervals") {
    inst.kind = InstanceKind::kIntervals;
  } else if (kind == "squares") {
    inst.kind = InstanceKind::kSquares;
  } else {
    throw InstanceError("kind: expected \"intervals\" or \"squares\", got \"" + kind + "\"");
  }
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InstanceError("name: expected a string");
    inst.name = doc["name"].get<std::string>();
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) throw InstanceError("seed: expected an unsigned integer");
    inst.seed = doc["seed"].get<std::uint64_t>();
  }
  if (!doc.contains("items") || !doc["items"].is_array()) {
    throw InstanceError("items: expected an array");
  }

  const auto& items = doc["items"];
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string where = "items[" + std::to_string(i) + "]";
    const auto& item = items[i];
    if (!item.is_object()) throw InstanceError(where + ": expected an object");
    if (inst.kind == InstanceKind::kIntervals) {
      inst.intervals.push_back({number_field(item, "center", where, std::nullopt),
                                positive_field(item, "length", where),
                                positive_field(item, "weight", where)});
    } else {
      inst.squares.push_back({number_field(item, "x", where, std::nullopt),
                              number_field(item, "y", where, std::nullopt),
                              positive_field(item, "weight", where)});
    }
  }
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError(path.string() + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const InstanceError& e) {
    throw InstanceError(path.string() + ": " + e.what());
  }
}

std::string emit_instance(const Instance& instance) {
  json doc;
  doc["kind"] = instance.kind == InstanceKind::kIntervals ? "intervals" : "squares";
  if (!instance.name.empty()) doc["name"] = instance.name;
  if (instance.seed) doc["seed"] = *instance.seed;
  json items = json::array();
  if (instance.kind == InstanceKind::kIntervals) {
    for (const auto& it : instance.intervals) {
      items.push_back({{"center", it.center}, {"length", it.length}, {"weight", it.weight}});
    }
  } else {
    for (const auto& s : instance.squares) {
      items.push_back({{"x", s.x}, {"y", s.y}, {"weight", s.weight}});
    }
  }
  doc["items"] = std::move(items);
  return doc.dump(2) + "\n";
}

Instance generate_instance(const GenerateOptions& options) {
  if (options.n == 0) throw std::invalid_argument("n must be at least 1");
  if (!(options.grid > 0.0)) throw std::invalid_argument("grid must be positive");
  if (!(options.span >= 0.0)) throw std::invalid_argument("span must be nonnegative");

  std::mt19937_64 rng(options.seed);
  const auto steps = static_cast<std::uint64_t>(std::floor(options.span / options.grid));
  auto draw = [&] {
    const auto u = rng() % (2 * steps + 1);
    return (static_cast<double>(u) - static_cast<double>(steps)) * options.grid;
  };

  Instance inst;
  inst.kind = options.kind;
  inst.seed = options.seed;
  inst.name = "generated-" + std::to_string(options.n) + "-" + std::to_string(options.seed);
  for (std::size_t i = 0; i < options.n; ++i) {
    if (options.kind == InstanceKind::kIntervals) {
      inst.intervals.push_back({draw(), 1.0, 1.0});
    } else {
      const double x = draw();
      const double y = draw();
      inst.squares.push_back({x, y, 1.0});
    }
  }
  return inst;
}

}  // namespace intershift
