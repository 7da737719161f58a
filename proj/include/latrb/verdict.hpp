#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "latrb/errors.hpp"

namespace latrb {

/// First failing instance of a law: the law's name and its element arguments.
struct Violation {
  std::string_view law;
  std::array<Element, 3> args{};
  std::size_t arity = 0;

  std::string to_string() const;
  bool operator==(const Violation&) const = default;
};

/// Outcome of a universally quantified check; carries the first
/// counterexample (in lexicographic argument order) when it fails.
struct Verdict {
  bool holds = true;
  std::optional<Violation> witness;

  explicit operator bool() const { return holds; }

  static Verdict pass() { return {}; }
  static Verdict fail(std::string_view law, Element x) {
    return {false, Violation{law, {x, 0, 0}, 1}};
  }
  static Verdict fail(std::string_view law, Element x, Element y) {
    return {false, Violation{law, {x, y, 0}, 2}};
  }
  static Verdict fail(std::string_view law, Element x, Element y, Element z) {
    return {false, Violation{law, {x, y, z}, 3}};
  }
};

}  // namespace latrb
