#pragma once

#include <string_view>
#include <vector>

#include "latrb/operators.hpp"
#include "latrb/verdict.hpp"

namespace latrb {

enum class BinOpKind { novikov, star, prec, succ, custom };

std::string_view to_string(BinOpKind kind);

/// n×n operation table over a lattice carrier.
class BinOpTable {
 public:
  /// Throws IndexOutOfRange on a wrongly sized table or out-of-range entry.
  BinOpTable(FiniteLattice lattice, BinOpKind kind, std::vector<Element> table);

  /// Tabulates `op` over all pairs.
  template <class Op>
  static BinOpTable tabulate(const FiniteLattice& l, BinOpKind kind, Op op) {
    const auto n = static_cast<Element>(l.size());
    std::vector<Element> t(std::size_t{n} * n);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) t[std::size_t{x} * n + y] = op(x, y);
    return BinOpTable(l, kind, std::move(t));
  }

  const FiniteLattice& lattice() const { return lattice_; }
  BinOpKind kind() const { return kind_; }
  std::size_t size() const { return lattice_.size(); }

  Element operator()(Element x, Element y) const { return table_[std::size_t{x} * size() + y]; }

  bool operator==(const BinOpTable& other) const {
    return table_ == other.table_ && lattice_ == other.lattice_;
  }

 private:
  FiniteLattice lattice_;
  BinOpKind kind_;
  std::vector<Element> table_;
};

/// x ◁ y = d(x) ∧ y. Requires a distributive lattice and an isotone derivation.
BinOpTable novikov_table(const FiniteLattice& l, const LatticeMap& d);

/// Left Novikov semiring laws with + realized as ∨: both Novikov identities
/// and two-sided distributivity of ◁ over ∨, over all triples.
Verdict check_novikov(const FiniteLattice& l, const BinOpTable& table);

/// d(x∨y) = d(x)∨d(y) and d(x∧y) = d(x) ◁ d(y). Same preconditions as
/// novikov_table, plus a top element.
Verdict novikov_homomorphism_check(const FiniteLattice& l, const LatticeMap& d);

/// x ∗ y = (x∧P(y)) ∨ (P(x)∧y). Requires distributive L and P ∈ RBO(L).
BinOpTable star_table(const FiniteLattice& l, const LatticeMap& p);

/// ∗_P is commutative, associative and two-sided distributive over ∨;
/// P(x∗y) = P(x)∧P(y) and P(x∨y) = P(x)∨P(y).
Verdict check_star_semiring(const FiniteLattice& l, const LatticeMap& p);

struct DendriformTables {
  BinOpTable prec;  // x ≺ y = x ∧ P(y)
  BinOpTable succ;  // x ≻ y = P(x) ∧ y
};

DendriformTables dendriform_tables(const FiniteLattice& l, const LatticeMap& p);

/// The three dendriform identities plus two-sided distributivity of ≺ and ≻
/// over ∨.
Verdict check_dendriform(const FiniteLattice& l, const LatticeMap& p);

}  // namespace latrb
