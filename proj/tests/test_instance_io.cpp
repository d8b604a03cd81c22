#include <doctest.h>

#include <cmath>
#include <string>

#include "intershift/instance_io.hpp"

using namespace intershift;

TEST_CASE("defaults for length and weight") {
  const auto inst =
      parse_instance(R"({"kind":"intervals","items":[{"center":0},{"center":2},{"center":4}]})");
  CHECK(inst.kind == InstanceKind::kIntervals);
  REQUIRE(inst.intervals.size() == 3);
  CHECK(inst.intervals[1].center == 2.0);
  CHECK(inst.intervals[1].length == 1.0);
  CHECK(inst.intervals[1].weight == 1.0);
  CHECK_FALSE(inst.seed.has_value());
}

TEST_CASE("squares route by kind") {
  const auto inst = parse_instance(R"({"kind":"squares","items":[{"x":1,"y":-2,"weight":3}]})");
  CHECK(inst.kind == InstanceKind::kSquares);
  REQUIRE(inst.squares.size() == 1);
  CHECK(inst.squares[0].y == -2.0);
  CHECK(inst.squares[0].weight == 3.0);
}

TEST_CASE("parse errors name the field") {
  auto message = [](const std::string& text) {
    try {
      parse_instance(text);
    } catch (const InstanceError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(R"({"kind":"intervals","items":[{"center":0},{"center":1,"length":-1}]})")
            .find("items[1].length") != std::string::npos);
  CHECK(message(R"({"kind":"intervals","items":[{"length":1}]})").find("items[0].center") !=
        std::string::npos);
  CHECK(message(R"({"kind":"circles","items":[]})").find("kind") != std::string::npos);
  CHECK(message(R"({"kind":"squares","items":[{"x":0,"y":"a"}]})").find("items[0].y") !=
        std::string::npos);
  CHECK(message("{not json").find("line") != std::string::npos);
}

TEST_CASE("generator is deterministic and on the grid") {
  GenerateOptions opt;
  opt.n = 50;
  opt.seed = 12;
  const auto a = generate_instance(opt);
  const auto b = generate_instance(opt);
  CHECK(emit_instance(a) == emit_instance(b));
  for (const auto& it : a.intervals) {
    CHECK(std::fmod(it.center, 0.5) == 0.0);
    CHECK(std::abs(it.center) <= 10.0);
  }
  opt.seed = 13;
  CHECK_FALSE(generate_instance(opt) == a);
  opt.n = 0;
  CHECK_THROWS_AS(generate_instance(opt), std::invalid_argument);
}

TEST_CASE("emit and parse round-trip") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GenerateOptions opt;
    opt.n = 1 + seed % 7;
    opt.seed = seed;
    opt.grid = seed % 2 ? 0.5 : 0.1;
    opt.kind = seed % 3 ? InstanceKind::kIntervals : InstanceKind::kSquares;
    const auto inst = generate_instance(opt);
    CHECK(parse_instance(emit_instance(inst)) == inst);
  }
  Instance odd;
  odd.intervals = {{0.1, 1.0 / 3, 2.7}, {-1e-300, 7e10, 1}};
  odd.name = "odd";
  odd.seed = 99;
  CHECK(parse_instance(emit_instance(odd)) == odd);
}
