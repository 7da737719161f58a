#include "latrb/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <thread>

#include "latrb/lattice_spec.hpp"

namespace latrb {

namespace {

struct PredicateName {
  Predicate predicate;
  std::string_view name;
};

constexpr PredicateName kPredicateNames[] = {
    {Predicate::rbo, "rbo"},
    {Predicate::derivation, "do"},
    {Predicate::isotone_derivation, "ido"},
    {Predicate::isotone_idempotent, "ieo"},
    {Predicate::szasz, "szasz"},
    {Predicate::meet_translation, "meet-translation"},
    {Predicate::all, "all"},
};

}  // namespace

Predicate parse_predicate(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "meet_translation" || lower == "mt") lower = "meet-translation";
  for (const auto& entry : kPredicateNames)
    if (entry.name == lower) return entry.predicate;
  throw BadSpec("unknown predicate '" + std::string(text) +
                "' (expected rbo, do, ido, ieo, szasz, meet-translation or all)");
}

std::string_view to_string(Predicate p) {
  for (const auto& entry : kPredicateNames)
    if (entry.predicate == p) return entry.name;
  return "?";
}

bool uses_isotone_search(Predicate p) {
  return p == Predicate::rbo || p == Predicate::isotone_derivation ||
         p == Predicate::isotone_idempotent;
}

bool satisfies(const FiniteLattice& l, std::span<const Element> f, Predicate p) {
  switch (p) {
    case Predicate::rbo:
      return static_cast<bool>(is_rota_baxter(l, f));
    case Predicate::derivation:
      return static_cast<bool>(is_derivation(l, f));
    case Predicate::isotone_derivation:
      return is_isotone(l, f) && is_derivation(l, f);
    case Predicate::isotone_idempotent:
      return is_isotone(l, f) && is_idempotent(l, f);
    case Predicate::szasz:
      return static_cast<bool>(is_szasz(l, f));
    case Predicate::meet_translation:
      return static_cast<bool>(is_meet_translation(l, f));
    case Predicate::all:
      return true;
  }
  return false;
}

namespace {

// Depth-first construction of f along a linear extension. Each prune only
// reads images of elements that precede the current one, and it only
// rejects partial maps that no member of the predicate class can extend.
class Search {
 public:
  Search(const FiniteLattice& l, Predicate p)
      : l_(l),
        p_(p),
        n_(static_cast<Element>(l.size())),
        order_(linear_extension(l)),
        image_(n_, 0),
        assigned_(n_, false),
        join_pairs_(n_) {
    for (Element x = 0; x < n_; ++x)
      for (Element y = x + 1; y < n_; ++y) {
        const Element z = l_.join(x, y);
        if (z != x && z != y) join_pairs_[z].emplace_back(x, y);
      }
    isotone_ = uses_isotone_search(p);
    idempotent_prune_ = p == Predicate::rbo || p == Predicate::isotone_idempotent;
    join_prune_ = p == Predicate::rbo || p == Predicate::szasz;
    leibniz_prune_ = p == Predicate::derivation || p == Predicate::isotone_derivation ||
                     p == Predicate::szasz;
    translation_prune_ = p == Predicate::meet_translation;
  }

  std::vector<Element> first_candidates() const { return candidates(order_.front()); }

  /// Runs the subtree where the first element of the extension maps to `v`.
  void run_from(Element v) {
    const Element x = order_.front();
    image_[x] = v;
    assigned_[x] = true;
    if (consistent(x)) descend(1);
    assigned_[x] = false;
  }

  std::vector<std::vector<Element>>& results() { return results_; }

 private:
  std::vector<Element> candidates(Element x) const {
    std::vector<Element> out;
    const auto lower = l_.lower_covers(x);
    if (!isotone_ || lower.empty()) {
      out.resize(n_);
      for (Element v = 0; v < n_; ++v) out[v] = v;
      return out;
    }
    Element floor = image_[lower.front()];
    for (Element c : lower) floor = l_.join(floor, image_[c]);
    for (Element v = 0; v < n_; ++v)
      if (l_.leq(floor, v)) out.push_back(v);
    return out;
  }

  void descend(std::size_t k) {
    if (k == n_) {
      if (satisfies(l_, image_, p_)) results_.push_back(image_);
      return;
    }
    const Element x = order_[k];
    for (Element v : candidates(x)) {
      image_[x] = v;
      assigned_[x] = true;
      if (consistent(x)) descend(k + 1);
      assigned_[x] = false;
    }
  }

  bool consistent(Element x) const {
    const Element v = image_[x];
    if (idempotent_prune_) {
      if (assigned_[v] && image_[v] != v) return false;
      for (Element y = 0; y < n_; ++y)
        if (y != x && assigned_[y] && image_[y] == x && v != x) return false;
    }
    if (join_prune_) {
      for (const auto& [p, q] : join_pairs_[x])
        if (v != l_.join(image_[p], image_[q])) return false;
    }
    if (leibniz_prune_ || translation_prune_) {
      for (Element y = 0; y < n_; ++y) {
        if (!assigned_[y]) continue;
        const Element m = l_.meet(x, y);
        if (leibniz_prune_ &&
            image_[m] != l_.join(l_.meet(v, y), l_.meet(x, image_[y])))
          return false;
        if (translation_prune_ &&
            (image_[m] != l_.meet(x, image_[y]) || image_[m] != l_.meet(y, v)))
          return false;
      }
    }
    return true;
  }

  const FiniteLattice& l_;
  Predicate p_;
  Element n_;
  std::vector<Element> order_;
  std::vector<Element> image_;
  std::vector<bool> assigned_;
  std::vector<std::vector<std::pair<Element, Element>>> join_pairs_;
  bool isotone_ = false;
  bool idempotent_prune_ = false;
  bool join_prune_ = false;
  bool leibniz_prune_ = false;
  bool translation_prune_ = false;
  std::vector<std::vector<Element>> results_;
};

std::vector<LatticeMap> to_maps(const FiniteLattice& l, std::vector<std::vector<Element>> images) {
  std::sort(images.begin(), images.end());
  std::vector<LatticeMap> out;
  out.reserve(images.size());
  for (auto& image : images) out.emplace_back(l, std::move(image));
  return out;
}

}  // namespace

std::vector<LatticeMap> enumerate(const FiniteLattice& l, Predicate p,
                                  const EnumerateOptions& options) {
  const std::size_t limit =
      uses_isotone_search(p) ? options.limits.isotone : options.limits.full_scan;
  if (l.size() > limit) throw SizeLimitExceeded(l.size(), limit);

  Search probe(l, p);
  const auto first = probe.first_candidates();
  const unsigned threads =
      std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(first.size())));

  std::vector<std::vector<Element>> images;
  if (threads == 1) {
    for (Element v : first) probe.run_from(v);
    images = std::move(probe.results());
  } else {
    std::vector<Search> workers(threads, probe);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < first.size(); i += threads) workers[t].run_from(first[i]);
      });
    }
    for (auto& th : pool) th.join();
    for (auto& w : workers)
      for (auto& image : w.results()) images.push_back(std::move(image));
  }
  return to_maps(l, std::move(images));
}

std::vector<LatticeMap> brute_force_oracle(const FiniteLattice& l, Predicate p,
                                           const EnumerationLimits& limits) {
  if (l.size() > limits.oracle) throw SizeLimitExceeded(l.size(), limits.oracle);
  const auto n = static_cast<Element>(l.size());
  std::vector<Element> f(n, 0);
  std::vector<LatticeMap> out;
  // Odometer with the first element most significant: visits maps in
  // lexicographic order, so the output is already sorted.
  while (true) {
    if (satisfies(l, f, p)) out.emplace_back(l, f);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++f[i] < n) break;
      f[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::vector<Element> conjugate(std::span<const Element> p, std::span<const Element> f) {
  std::vector<Element> inverse(f.size());
  for (Element x = 0; x < f.size(); ++x) inverse[f[x]] = x;
  std::vector<Element> out(p.size());
  for (Element x = 0; x < p.size(); ++x) out[x] = f[p[inverse[x]]];
  return out;
}

IsoClassification classify(const FiniteLattice& l, const std::vector<LatticeMap>& ops) {
  for (const auto& op : ops)
    if (!(op.lattice() == l)) throw MixedLattices("operator does not act on the classified lattice");

  struct Member {
    std::size_t multiplicity = 0;
    bool visited = false;
  };
  std::map<std::vector<Element>, Member> members;
  for (const auto& op : ops)
    ++members[std::vector<Element>(op.image().begin(), op.image().end())].multiplicity;

  const auto group = automorphisms(l);
  IsoClassification out;
  out.total = ops.size();
  for (auto& [image, member] : members) {
    if (member.visited) continue;
    std::set<std::vector<Element>> orbit;
    std::size_t size = 0;
    for (const auto& f : group) {
      auto q = conjugate(image, f);
      auto it = members.find(q);
      if (it == members.end() || it->second.visited) continue;
      it->second.visited = true;
      size += it->second.multiplicity;
      orbit.insert(std::move(q));
    }
    out.classes.push_back({LatticeMap(l, *orbit.begin()), size});
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const IsoClass& a, const IsoClass& b) { return a.representative < b.representative; });
  return out;
}

std::vector<LatticeMap> conjugacy_orbit(const LatticeMap& p) {
  std::set<std::vector<Element>> orbit;
  for (const auto& f : automorphisms(p.lattice())) orbit.insert(conjugate(p.image(), f));
  std::vector<LatticeMap> out;
  for (const auto& q : orbit) out.emplace_back(p.lattice(), q);
  return out;
}

bool rigidity_check(const FiniteLattice& l, const LatticeMap& p) {
  if (!(p.lattice() == l)) throw MixedLattices("operator does not act on the given lattice");
  for (const auto& f : automorphisms(l)) {
    const auto q = conjugate(p.image(), f);
    if (!std::equal(q.begin(), q.end(), p.image().begin())) return false;
  }
  return true;
}

namespace counts {

std::uint64_t fibonacci(unsigned n) {
  if (n == 0) throw BadParams("Fibonacci numbers are indexed from 1");
  if (n > 93) throw BadParams("F_" + std::to_string(n) + " overflows 64 bits");
  std::uint64_t prev = 0;
  std::uint64_t cur = 1;
  for (unsigned i = 1; i < n; ++i) {
    const std::uint64_t next = prev + cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::uint64_t rbo_chain(unsigned n) { return fibonacci(2 * n); }
std::uint64_t classes_chain(unsigned n) { return fibonacci(2 * n); }

std::uint64_t rbo_mn(unsigned n) {
  if (n < 3) throw BadParams("M_n requires n >= 3");
  if (n == 3) return 8;
  if (n == 4) return 14;
  if (n > 62) throw BadParams("|RBO(M_n)| overflows 64 bits");
  return (std::uint64_t{1} << (n - 2)) + 3 * std::uint64_t{n} - 4;
}

std::uint64_t classes_mn(unsigned n) {
  if (n < 3) throw BadParams("M_n requires n >= 3");
  if (n == 3) return 8;
  if (n == 4) return 9;
  return std::uint64_t{n} + 4;
}

}  // namespace counts

MnCensus expected_mn_census(unsigned n) {
  if (n < 4) throw BadParams("the per-case census is defined for n >= 4");
  MnCensus c;
  c.n = n;
  c.constants = n;
  c.zero_step = n - 1;
  c.psi = n - 2;
  c.inner = n == 4 ? 2 : 0;
  c.p_atom = n - 2;
  c.large_fix = (std::size_t{1} << (n - 2)) - n;
  c.identity = 1;
  c.total = counts::rbo_mn(n);
  return c;
}

MnCensus mn_structure_report(unsigned n, const EnumerateOptions& options) {
  const auto l = builtin(LatticeSpec::diamond(n));
  const Element bottom = 0;
  const Element top = static_cast<Element>(n - 1);
  auto is_atom = [&](Element x) { return x != bottom && x != top; };

  MnCensus census;
  census.n = n;
  const auto ops = enumerate(l, Predicate::rbo, options);
  census.total = ops.size();

  for (const auto& p : ops) {
    const auto fix = fix_points(p);
    auto describe = [&](std::string_view why) {
      std::string s(why);
      s += ": [";
      for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p(static_cast<Element>(i)));
      census.mismatches.push_back(s + "]");
    };
    auto has = [&](Element x) { return std::binary_search(fix.begin(), fix.end(), x); };
    const auto fixed_atoms = std::count_if(fix.begin(), fix.end(), is_atom);

    if (fix.size() == l.size()) {
      ++census.identity;
    } else if (fix.size() == 1) {
      ++census.constants;
      if (p != LatticeMap::constant(l, fix.front())) describe("constant case");
    } else if (fix.size() == 2 && has(bottom) && has(top)) {
      ++census.zero_step;
      bool matched = false;
      for (Element a = 0; a < top && !matched; ++a)
        matched = p == make_family(l, {Family::step, a, bottom});
      if (!matched) describe("fix {0,1} is not a step map");
    } else if (fix.size() == 2 && has(top) && fixed_atoms == 1) {
      ++census.psi;
      if (p != make_family(l, {Family::psi, fix.front()})) describe("fix {b,1} is not psi");
    } else if (fix.size() == 2 && has(bottom) && fixed_atoms == 1) {
      ++census.inner;
      if (n > 4 || p != make_family(l, {Family::inner, fix.back()}))
        describe("fix {0,b} is not an admissible inner derivation");
    } else if (fix.size() == 3 && has(bottom) && has(top) && fixed_atoms == 1) {
      ++census.p_atom;
      if (p != make_family(l, {Family::p_atom, fix[1]})) describe("fix {0,b,1} is not P^(b)");
    } else if (has(bottom) && has(top) && fixed_atoms >= 2) {
      ++census.large_fix;
      for (Element x = 0; x < l.size(); ++x)
        if (!has(x) && p(x) != top) {
          describe("large fix set with a non-fixed element not sent to top");
          break;
        }
    } else {
      describe("unexpected fix-point set");
    }
  }
  return census;
}

}  // namespace latrb
