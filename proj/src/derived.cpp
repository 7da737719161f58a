#include "latrb/derived.hpp"

namespace latrb {

std::string_view to_string(BinOpKind kind) {
  switch (kind) {
    case BinOpKind::novikov: return "novikov";
    case BinOpKind::star: return "star";
    case BinOpKind::prec: return "prec";
    case BinOpKind::succ: return "succ";
    case BinOpKind::custom: return "custom";
  }
  return "?";
}

BinOpTable::BinOpTable(FiniteLattice lattice, BinOpKind kind, std::vector<Element> table)
    : lattice_(std::move(lattice)), kind_(kind), table_(std::move(table)) {
  const std::size_t n = lattice_.size();
  if (table_.size() != n * n) throw IndexOutOfRange(table_.size(), n * n);
  for (Element v : table_)
    if (v >= n) throw IndexOutOfRange(v, n);
}

namespace {

void require_same_lattice(const FiniteLattice& l, const LatticeMap& f) {
  if (!(f.lattice() == l)) throw MixedLattices("operator does not act on the given lattice");
}

void require_isotone_derivation(const FiniteLattice& l, const LatticeMap& d) {
  require_same_lattice(l, d);
  if (!is_distributive(l)) throw NotDistributive();
  if (!is_isotone(d) || !is_derivation(d)) throw NotIsotoneDerivation();
}

void require_rota_baxter(const FiniteLattice& l, const LatticeMap& p) {
  require_same_lattice(l, p);
  if (!is_distributive(l)) throw NotDistributive();
  if (!is_rota_baxter(p)) throw NotRotaBaxter();
}

// Two-sided distributivity of `op` over join, first failure in (x, y, z) order.
template <class Op>
Verdict distributes_over_join(const FiniteLattice& l, Op op, std::string_view left_law,
                              std::string_view right_law) {
  const auto n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        if (op(x, l.join(y, z)) != l.join(op(x, y), op(x, z)))
          return Verdict::fail(left_law, x, y, z);
        if (op(l.join(y, z), x) != l.join(op(y, x), op(z, x)))
          return Verdict::fail(right_law, x, y, z);
      }
  return Verdict::pass();
}

}  // namespace

BinOpTable novikov_table(const FiniteLattice& l, const LatticeMap& d) {
  require_isotone_derivation(l, d);
  return BinOpTable::tabulate(l, BinOpKind::novikov,
                              [&](Element x, Element y) { return l.meet(d(x), y); });
}

Verdict check_novikov(const FiniteLattice& l, const BinOpTable& t) {
  if (!(t.lattice() == l)) throw MixedLattices("table does not act on the given lattice");
  const auto n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        const Element lhs = l.join(t(t(x, y), z), t(t(y, x), z));
        const Element rhs = l.join(t(x, t(y, z)), t(y, t(x, z)));
        if (lhs != rhs) return Verdict::fail("novikov-symmetric-sum", x, y, z);
        if (t(t(x, y), z) != t(t(x, z), y)) return Verdict::fail("novikov-right-commutative", x, y, z);
      }
  return distributes_over_join(l, t, "left-distributivity", "right-distributivity");
}

Verdict novikov_homomorphism_check(const FiniteLattice& l, const LatticeMap& d) {
  const auto t = novikov_table(l, d);
  if (!l.top()) throw BadParams("homomorphism check requires a top element");
  const auto n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (d(l.join(x, y)) != l.join(d(x), d(y))) return Verdict::fail("join-linearity", x, y);
      if (d(l.meet(x, y)) != t(d(x), d(y))) return Verdict::fail("meet-to-novikov", x, y);
    }
  return Verdict::pass();
}

BinOpTable star_table(const FiniteLattice& l, const LatticeMap& p) {
  require_rota_baxter(l, p);
  return BinOpTable::tabulate(l, BinOpKind::star, [&](Element x, Element y) {
    return l.join(l.meet(x, p(y)), l.meet(p(x), y));
  });
}

Verdict check_star_semiring(const FiniteLattice& l, const LatticeMap& p) {
  const auto s = star_table(l, p);
  const auto n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (s(x, y) != s(y, x)) return Verdict::fail("commutativity", x, y);
      if (p(s(x, y)) != l.meet(p(x), p(y))) return Verdict::fail("P-multiplicative", x, y);
      if (p(l.join(x, y)) != l.join(p(x), p(y))) return Verdict::fail("P-additive", x, y);
      for (Element z = 0; z < n; ++z)
        if (s(s(x, y), z) != s(x, s(y, z))) return Verdict::fail("associativity", x, y, z);
    }
  return distributes_over_join(l, s, "left-distributivity", "right-distributivity");
}

DendriformTables dendriform_tables(const FiniteLattice& l, const LatticeMap& p) {
  require_rota_baxter(l, p);
  return {BinOpTable::tabulate(l, BinOpKind::prec,
                               [&](Element x, Element y) { return l.meet(x, p(y)); }),
          BinOpTable::tabulate(l, BinOpKind::succ,
                               [&](Element x, Element y) { return l.meet(p(x), y); })};
}

Verdict check_dendriform(const FiniteLattice& l, const LatticeMap& p) {
  const auto [prec, succ] = dendriform_tables(l, p);
  const auto n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        if (prec(prec(x, y), z) != prec(x, l.join(prec(y, z), succ(y, z))))
          return Verdict::fail("prec-prec", x, y, z);
        if (prec(succ(x, y), z) != succ(x, prec(y, z)))
          return Verdict::fail("succ-prec", x, y, z);
        if (succ(x, succ(y, z)) != succ(l.join(prec(x, y), succ(x, y)), z))
          return Verdict::fail("succ-succ", x, y, z);
      }
  if (auto v = distributes_over_join(l, prec, "prec-left-distributivity",
                                     "prec-right-distributivity");
      !v)
    return v;
  return distributes_over_join(l, succ, "succ-left-distributivity", "succ-right-distributivity");
}

}  // namespace latrb
