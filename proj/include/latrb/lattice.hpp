#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latrb/errors.hpp"
#include "latrb/verdict.hpp"

namespace latrb {

/// A Hasse-diagram edge, lower element first.
using Cover = std::pair<Element, Element>;

/// Immutable finite lattice with precomputed order, meet and join tables.
///
/// Copies are cheap: all copies share one immutable table block, so a
/// FiniteLattice can be passed by value and shared across threads.
class FiniteLattice {
 public:
  /// Builds and validates a lattice from its Hasse diagram. Redundant
  /// (transitively implied) edges are accepted and dropped; the stored
  /// covers are the transitive reduction, sorted.
  static FiniteLattice from_covers(std::size_t size, std::span<const Cover> covers,
                                   std::vector<std::string> labels = {});

  std::size_t size() const { return data_->size; }

  bool leq(Element x, Element y) const {
    check_index(x);
    check_index(y);
    return data_->leq[index(x, y)];
  }
  bool lt(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  Element meet(Element x, Element y) const {
    check_index(x);
    check_index(y);
    return data_->meet[index(x, y)];
  }
  Element join(Element x, Element y) const {
    check_index(x);
    check_index(y);
    return data_->join[index(x, y)];
  }

  std::optional<Element> bottom() const { return data_->bottom; }
  std::optional<Element> top() const { return data_->top; }

  std::span<const Cover> covers() const { return data_->covers; }
  std::span<const Element> lower_covers(Element x) const {
    check_index(x);
    return data_->lower_covers[x];
  }
  std::span<const Element> upper_covers(Element x) const {
    check_index(x);
    return data_->upper_covers[x];
  }

  /// Elements covering the bottom.
  std::vector<Element> atoms() const;

  const std::string& label(Element x) const {
    check_index(x);
    return data_->labels[x];
  }
  std::span<const std::string> labels() const { return data_->labels; }

  /// Same carrier size and same order relation; labels are ignored.
  bool operator==(const FiniteLattice& other) const;

 private:
  struct Data {
    std::size_t size = 0;
    std::vector<bool> leq;
    std::vector<Element> meet;
    std::vector<Element> join;
    std::optional<Element> bottom;
    std::optional<Element> top;
    std::vector<Cover> covers;
    std::vector<std::vector<Element>> lower_covers;
    std::vector<std::vector<Element>> upper_covers;
    std::vector<std::string> labels;
  };

  explicit FiniteLattice(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::size_t index(Element x, Element y) const { return std::size_t{x} * data_->size + y; }
  void check_index(Element x) const {
    if (x >= data_->size) throw IndexOutOfRange(x, data_->size);
  }

  std::shared_ptr<const Data> data_;
};

/// Checked free-function forms of the table lookups.
inline Element meet(const FiniteLattice& l, Element x, Element y) { return l.meet(x, y); }
inline Element join(const FiniteLattice& l, Element x, Element y) { return l.join(x, y); }

bool is_distributive(const FiniteLattice& l);
bool is_modular(const FiniteLattice& l);
bool is_chain(const FiniteLattice& l);

/// (x∨a)∧(y∨a) = ((x∨a)∧y) ∨ (x∧(y∨a)) ∨ a for all x, y, a.
/// The witness is the first failing (x, y, a) in lexicographic order.
Verdict weak_modular_identity(const FiniteLattice& l);

/// True iff every z ≤ a is comparable with b. Requires b < a.
bool below_comparable(const FiniteLattice& l, Element a, Element b);

/// Lexicographically first injective map h: pattern → l preserving meets
/// and joins, if one exists.
std::optional<std::vector<Element>> sublattice_embeds(const FiniteLattice& pattern,
                                                      const FiniteLattice& l);

/// All lattice automorphisms as permutation words, sorted lexicographically.
std::vector<std::vector<Element>> automorphisms(const FiniteLattice& l);

/// Elements in the linear extension used by enumeration: Kahn's algorithm
/// over the covers, smallest available index first.
std::vector<Element> linear_extension(const FiniteLattice& l);

/// Height of each element: length of the longest cover chain from bottom.
std::vector<std::size_t> heights(const FiniteLattice& l);

}  // namespace latrb
