#include "latrb/lattice.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace latrb {

namespace {

// Kahn's algorithm, smallest ready index first. Returns fewer than `size`
// elements when the edge relation has a cycle.
std::vector<Element> topological_order(std::size_t size,
                                       const std::vector<std::vector<Element>>& succ) {
  std::vector<std::size_t> indegree(size, 0);
  for (const auto& s : succ)
    for (Element y : s) ++indegree[y];
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element x = 0; x < size; ++x)
    if (indegree[x] == 0) ready.push(x);
  std::vector<Element> order;
  order.reserve(size);
  while (!ready.empty()) {
    Element x = ready.top();
    ready.pop();
    order.push_back(x);
    for (Element y : succ[x])
      if (--indegree[y] == 0) ready.push(y);
  }
  return order;
}

}  // namespace

FiniteLattice FiniteLattice::from_covers(std::size_t size, std::span<const Cover> covers,
                                         std::vector<std::string> labels) {
  if (size == 0) throw BadSpec("lattice must have at least one element");
  if (labels.empty()) {
    labels.reserve(size);
    for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
  } else if (labels.size() != size) {
    throw BadSpec("expected " + std::to_string(size) + " labels, got " +
                  std::to_string(labels.size()));
  }

  std::vector<std::vector<Element>> succ(size);
  std::set<Cover> seen;
  for (const auto& [lo, hi] : covers) {
    if (lo >= size) throw IndexOutOfRange(lo, size);
    if (hi >= size) throw IndexOutOfRange(hi, size);
    if (lo == hi) throw CyclicCovers("self-loop cover at element " + std::to_string(lo));
    if (!seen.insert({lo, hi}).second)
      throw DuplicateCover("duplicate cover (" + std::to_string(lo) + ", " +
                           std::to_string(hi) + ")");
    succ[lo].push_back(hi);
  }

  const auto topo = topological_order(size, succ);
  if (topo.size() != size) throw CyclicCovers("cover relation contains a cycle");

  auto data = std::make_shared<Data>();
  data->size = size;
  data->labels = std::move(labels);
  auto& leq = data->leq;
  leq.assign(size * size, false);
  auto at = [size](Element x, Element y) { return std::size_t{x} * size + y; };

  // Up-sets in reverse topological order.
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const Element x = *it;
    leq[at(x, x)] = true;
    for (Element y : succ[x])
      for (Element z = 0; z < size; ++z)
        if (leq[at(y, z)]) leq[at(x, z)] = true;
  }

  data->meet.assign(size * size, 0);
  data->join.assign(size * size, 0);
  for (Element x = 0; x < size; ++x) {
    for (Element y = x; y < size; ++y) {
      std::optional<Element> glb;
      std::optional<Element> lub;
      for (Element z = 0; z < size; ++z) {
        if (leq[at(z, x)] && leq[at(z, y)] && (!glb || leq[at(*glb, z)])) glb = z;
        if (leq[at(x, z)] && leq[at(y, z)] && (!lub || leq[at(z, *lub)])) lub = z;
      }
      if (!glb) throw NotALattice(x, y, "no greatest lower bound");
      if (!lub) throw NotALattice(x, y, "no least upper bound");
      // The running maximum is only a candidate; confirm it dominates all bounds.
      for (Element z = 0; z < size; ++z) {
        if (leq[at(z, x)] && leq[at(z, y)] && !leq[at(z, *glb)])
          throw NotALattice(x, y, "no greatest lower bound");
        if (leq[at(x, z)] && leq[at(y, z)] && !leq[at(*lub, z)])
          throw NotALattice(x, y, "no least upper bound");
      }
      data->meet[at(x, y)] = data->meet[at(y, x)] = *glb;
      data->join[at(x, y)] = data->join[at(y, x)] = *lub;
    }
  }

  for (Element x = 0; x < size; ++x) {
    bool is_bottom = true;
    bool is_top = true;
    for (Element y = 0; y < size; ++y) {
      is_bottom = is_bottom && leq[at(x, y)];
      is_top = is_top && leq[at(y, x)];
    }
    if (is_bottom) data->bottom = x;
    if (is_top) data->top = x;
  }

  data->lower_covers.resize(size);
  data->upper_covers.resize(size);
  for (Element x = 0; x < size; ++x) {
    for (Element y = 0; y < size; ++y) {
      if (x == y || !leq[at(x, y)]) continue;
      bool covered = true;
      for (Element z = 0; z < size && covered; ++z)
        if (z != x && z != y && leq[at(x, z)] && leq[at(z, y)]) covered = false;
      if (covered) {
        data->covers.emplace_back(x, y);
        data->upper_covers[x].push_back(y);
        data->lower_covers[y].push_back(x);
      }
    }
  }
  return FiniteLattice(std::move(data));
}

std::vector<Element> FiniteLattice::atoms() const {
  if (!bottom()) return {};
  auto up = upper_covers(*bottom());
  return {up.begin(), up.end()};
}

bool FiniteLattice::operator==(const FiniteLattice& other) const {
  return data_ == other.data_ ||
         (data_->size == other.data_->size && data_->leq == other.data_->leq);
}

bool is_distributive(const FiniteLattice& l) {
  const auto n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (l.meet(l.join(x, y), z) != l.join(l.meet(x, z), l.meet(y, z))) return false;
  return true;
}

bool is_modular(const FiniteLattice& l) {
  const auto n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!l.leq(x, y)) continue;
      for (Element z = 0; z < n; ++z)
        if (l.join(x, l.meet(y, z)) != l.meet(y, l.join(x, z))) return false;
    }
  return true;
}

bool is_chain(const FiniteLattice& l) {
  const auto n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (!l.comparable(x, y)) return false;
  return true;
}

Verdict weak_modular_identity(const FiniteLattice& l) {
  const auto n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element a = 0; a < n; ++a) {
        const Element xa = l.join(x, a);
        const Element ya = l.join(y, a);
        const Element lhs = l.meet(xa, ya);
        const Element rhs = l.join(l.join(l.meet(xa, y), l.meet(x, ya)), a);
        if (lhs != rhs) return Verdict::fail("weak-modular", x, y, a);
      }
  return Verdict::pass();
}

bool below_comparable(const FiniteLattice& l, Element a, Element b) {
  if (!l.lt(b, a))
    throw BadParams("OrderViolation(" + std::to_string(b) + "," + std::to_string(a) +
                    "): condition requires b < a");
  const auto n = static_cast<Element>(l.size());
  for (Element z = 0; z < n; ++z)
    if (l.leq(z, a) && !l.comparable(z, b)) return false;
  return true;
}

std::optional<std::vector<Element>> sublattice_embeds(const FiniteLattice& pattern,
                                                      const FiniteLattice& l) {
  const auto m = static_cast<Element>(pattern.size());
  const auto n = static_cast<Element>(l.size());
  if (m > n) return std::nullopt;

  std::vector<Element> h(m, 0);
  std::vector<bool> used(n, false);

  // Pattern elements are assigned in index order, so an element is
  // assigned iff its index is below `count`.
  auto consistent = [&](Element count) {
    const Element last = count - 1;
    for (Element u = 0; u < count; ++u) {
      for (Element v = 0; v < count; ++v) {
        const Element pm = pattern.meet(u, v);
        const Element pj = pattern.join(u, v);
        const bool involves_last = u == last || v == last || pm == last || pj == last;
        if (!involves_last) continue;
        if (pm < count && h[pm] != l.meet(h[u], h[v])) return false;
        if (pj < count && h[pj] != l.join(h[u], h[v])) return false;
      }
    }
    return true;
  };

  std::function<bool(Element)> search = [&](Element x) -> bool {
    if (x == m) return true;
    for (Element v = 0; v < n; ++v) {
      if (used[v]) continue;
      h[x] = v;
      used[v] = true;
      if (consistent(x + 1) && search(x + 1)) return true;
      used[v] = false;
    }
    return false;
  };

  if (!search(0)) return std::nullopt;
  return h;
}

std::vector<std::vector<Element>> automorphisms(const FiniteLattice& l) {
  const auto n = static_cast<Element>(l.size());
  std::vector<std::vector<Element>> result;
  std::vector<Element> f(n, 0);
  std::vector<bool> used(n, false);

  std::function<void(Element)> search = [&](Element x) {
    if (x == n) {
      result.push_back(f);
      return;
    }
    for (Element v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (Element u = 0; u < x && ok; ++u)
        ok = l.leq(u, x) == l.leq(f[u], v) && l.leq(x, u) == l.leq(v, f[u]);
      if (!ok) continue;
      f[x] = v;
      used[v] = true;
      search(x + 1);
      used[v] = false;
    }
  };
  search(0);
  return result;
}

std::vector<Element> linear_extension(const FiniteLattice& l) {
  std::vector<std::vector<Element>> succ(l.size());
  for (const auto& [lo, hi] : l.covers()) succ[lo].push_back(hi);
  return topological_order(l.size(), succ);
}

std::vector<std::size_t> heights(const FiniteLattice& l) {
  std::vector<std::size_t> h(l.size(), 0);
  for (Element x : linear_extension(l))
    for (Element lo : l.lower_covers(x)) h[x] = std::max(h[x], h[lo] + 1);
  return h;
}

std::string Violation::to_string() const {
  std::string out(law);
  out += " at (";
  for (std::size_t i = 0; i < arity; ++i) {
    if (i) out += ", ";
    out += std::to_string(args[i]);
  }
  out += ")";
  return out;
}

}  // namespace latrb
