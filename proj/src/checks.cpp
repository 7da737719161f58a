#include "latrb/checks.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>

#include "latrb/derived.hpp"
#include "latrb/lattice_spec.hpp"

namespace latrb {

std::vector<std::string> CheckConfig::default_catalog() {
  return {"chain:1", "chain:2", "chain:3", "chain:4", "chain:5", "chain:6",
          "chain:7", "m:3",     "m:4",     "m:5",     "m:6",     "m:7",
          "n5",      "n8",      "bool:1",  "bool:2",  "bool:3",  "prod(chain:2,chain:3)"};
}

std::string CheckConfig::default_expected_path() {
#ifdef LATRB_DATA_DIR
  return std::string(LATRB_DATA_DIR) + "/expected_values.json";
#else
  return "data/expected_values.json";
#endif
}

CheckConfig load_check_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadSpec("cannot open config file '" + path + "'");
  CheckConfig config;
  try {
    json j;
    in >> j;
    config.limits.isotone = j.value("isotone_limit", config.limits.isotone);
    config.limits.full_scan = j.value("full_scan_limit", config.limits.full_scan);
    config.limits.oracle = j.value("oracle_limit", config.limits.oracle);
    if (j.contains("max_size")) config.max_size = j.at("max_size").get<std::size_t>();
    if (j.contains("catalog")) config.catalog = j.at("catalog").get<std::vector<std::string>>();
    config.expected_path = j.value("expected", config.expected_path);
  } catch (const json::exception& e) {
    throw BadSpec("malformed config file '" + path + "': " + e.what());
  }
  for (const auto& spec : config.catalog) LatticeSpec::parse(spec);
  return config;
}

bool natural_less(std::string_view a, std::string_view b) {
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ei = i, ej = j;
      while (ei < a.size() && is_digit(a[ei])) ++ei;
      while (ej < b.size() && is_digit(b[ej])) ++ej;
      auto na = a.substr(i, ei - i), nb = b.substr(j, ej - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ei;
      j = ej;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

namespace {

using Ops = std::vector<LatticeMap>;

std::string show(std::span<const Element> image) {
  std::string s = "[";
  for (std::size_t i = 0; i < image.size(); ++i) s += (i ? "," : "") + std::to_string(image[i]);
  return s + "]";
}

std::string show(const LatticeMap& f) { return show(f.image()); }

std::string show(const Verdict& v) { return v.witness ? v.witness->to_string() : "no witness"; }

bool contains(const Ops& sorted, const LatticeMap& f) {
  return std::binary_search(sorted.begin(), sorted.end(), f);
}

Ops intersect(const Ops& a, const Ops& b) {
  Ops out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct Context {
  const CheckConfig& config;
  std::string spec;
  FiniteLattice lattice;

  EnumerateOptions options() const { return {config.limits, config.threads}; }
  Ops ops(Predicate p) const { return enumerate(lattice, p, options()); }
};

// Body of a check on one lattice: sets passed/witness/counts on the report.
using Body = std::function<void(const Context&, CheckReport&)>;

struct Check {
  CheckInfo info;
  std::function<std::vector<std::string>(const CheckConfig&)> lattices;
  Body body;
};

std::vector<std::string> catalog(const CheckConfig& c) { return c.catalog; }

std::vector<std::string> catalog_up_to(const CheckConfig& c, std::size_t size) {
  std::vector<std::string> out;
  for (const auto& spec : c.catalog)
    if (builtin(spec).size() <= size) out.push_back(spec);
  return out;
}

std::vector<std::string> distributive_catalog(const CheckConfig& c) {
  std::vector<std::string> out;
  for (const auto& spec : c.catalog)
    if (is_distributive(builtin(spec))) out.push_back(spec);
  return out;
}

std::vector<std::string> numbered(std::string_view prefix, unsigned from, unsigned to) {
  std::vector<std::string> out;
  for (unsigned n = from; n <= to; ++n) out.push_back(std::string(prefix) + std::to_string(n));
  return out;
}

void fail(CheckReport& r, std::string witness) {
  r.passed = false;
  r.witness = std::move(witness);
}

// Runs `check` over each op and stops at the first failure it reports.
template <class F>
void for_each_op(const Ops& ops, CheckReport& r, F check) {
  r.passed = true;
  for (const auto& op : ops) {
    if (auto why = check(op)) {
      fail(r, "P=" + show(op) + ": " + *why);
      return;
    }
  }
}

using Why = std::optional<std::string>;

CheckReport new_report(std::string id, std::string spec) {
  CheckReport r;
  r.id = std::move(id);
  r.spec = std::move(spec);
  return r;
}

std::string at(std::string_view law, Element x, Element y) {
  return std::string(law) + " at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

// ---------------------------------------------------------------------------

void rbo_basic_facts(const Context& c, CheckReport& r) {
  const auto& l = c.lattice;
  const auto n = static_cast<Element>(l.size());
  std::vector<LatticeMap> known{LatticeMap::identity(l), make_family(l, {Family::tau})};
  for (Element a = 0; a < n; ++a) known.push_back(LatticeMap::constant(l, a));
  for (const auto& p : known)
    if (auto v = is_rota_baxter(p); !v) return fail(r, "P=" + show(p) + ": " + show(v));

  const auto ops = c.ops(Predicate::rbo);
  r.counts = {ops.size()};
  for_each_op(ops, r, [&](const LatticeMap& p) -> Why {
    if (!is_isotone(p)) return "not isotone";
    if (!is_idempotent(p)) return "not idempotent";
    for (Element x = 0; x < n; ++x) {
      if (p(l.meet(x, p(x))) != p(x)) return at("P(x∧P(x)) = P(x)", x, x);
      if (p(l.join(x, p(x))) != p(x)) return at("P(x∨P(x)) = P(x)", x, x);
      for (Element y = 0; y < n; ++y)
        if (!l.leq(p(l.meet(p(x), y)), l.meet(p(x), p(y))))
          return at("P(P(x)∧y) <= P(x)∧P(y)", x, y);
    }
    return std::nullopt;
  });
}

void fix_sublattice(const Context& c, CheckReport& r) {
  const auto& l = c.lattice;
  const auto ops = c.ops(Predicate::rbo);
  r.counts = {ops.size()};
  for_each_op(ops, r, [&](const LatticeMap& p) -> Why {
    const auto fix = fix_points(p);
    if (fix != image_set(p)) return "fix-point set differs from the image";
    auto fixed = [&](Element x) { return p(x) == x; };
    for (Element x : fix)
      for (Element y : fix) {
        if (!fixed(l.meet(x, y))) return at("fix set not closed under meet", x, y);
        if (!fixed(l.join(x, y))) return at("fix set not closed under join", x, y);
      }
    return std::nullopt;
  });
}

void injective_iff_identity(const Context& c, CheckReport& r) {
  const auto ops = c.ops(Predicate::rbo);
  const auto id = LatticeMap::identity(c.lattice);
  r.counts = {ops.size()};
  for_each_op(ops, r, [&](const LatticeMap& p) -> Why {
    const bool inj = is_injective(p), surj = is_surjective(p), is_id = p == id;
    if (inj != is_id || surj != is_id) return "injective/surjective/identity disagree";
    return std::nullopt;
  });
}

void meet_translation_equiv(const Context& c, CheckReport& r) {
  const auto& l = c.lattice;
  const auto n = static_cast<Element>(l.size());
  const auto dos = c.ops(Predicate::derivation);
  const auto idos = c.ops(Predicate::isotone_derivation);
  const auto mts = c.ops(Predicate::meet_translation);
  r.counts = {dos.size(), idos.size(), mts.size()};

  Ops isotone_dos;
  std::copy_if(dos.begin(), dos.end(), std::back_inserter(isotone_dos),
               [](const LatticeMap& d) { return is_isotone(d); });
  if (isotone_dos != idos) return fail(r, "isotone members of DO differ from IDO");
  if (idos != mts) return fail(r, "IDO differs from the meet-translations");

  std::set<LatticeMap> inner;
  for (Element u = 0; u < n; ++u) inner.insert(make_family(l, {Family::inner, u}));
  if (!std::equal(inner.begin(), inner.end(), idos.begin(), idos.end()))
    return fail(r, "IDO differs from the inner derivations");

  const Element top = *l.top();
  for_each_op(dos, r, [&](const LatticeMap& d) -> Why {
    for (Element x = 0; x < n; ++x)
      if (!l.leq(d(x), x)) return at("d(x) <= x", x, x);
    if (is_join_linear(d) && !is_meet_translation(d)) return "join-linear derivation is not a meet-translation";
    if (!is_isotone(d)) return std::nullopt;
    for (Element x = 0; x < n; ++x) {
      if (d(x) != l.meet(x, d(top))) return at("d(x) = x∧d(1)", x, top);
      for (Element y = 0; y < n; ++y)
        if (d(l.meet(x, y)) != l.meet(d(x), d(y))) return at("d(x∧y) = d(x)∧d(y)", x, y);
    }
    return std::nullopt;
  });
}

void szasz_intersection(const Context& c, CheckReport& r) {
  const auto& l = c.lattice;
  auto agrees = [&](const LatticeMap& f) -> Why {
    const bool both = is_derivation(f) && is_rota_baxter(f);
    if (static_cast<bool>(is_szasz(f)) != both) return "Szász disagrees with DO ∩ RBO";
    return std::nullopt;
  };

  std::uint64_t scanned = 0;
  r.passed = true;
  if (l.size() <= 5) {
    const auto all = brute_force_oracle(l, Predicate::all, c.config.limits);
    scanned = all.size();
    for_each_op(all, r, agrees);
    if (!r.passed) return;
  }
  const auto szasz = c.ops(Predicate::szasz);
  const auto dos = c.ops(Predicate::derivation);
  const auto rbos = c.ops(Predicate::rbo);
  r.counts = {szasz.size(), dos.size(), rbos.size(), scanned};
  if (szasz != intersect(dos, rbos)) return fail(r, "SZASZ differs from DO ∩ RBO");
  for_each_op(dos, r, agrees);
  if (r.passed) for_each_op(rbos, r, agrees);
}

void distributive_iff_inner_rbo(const Context& c, CheckReport& r) {
  const auto& l = c.lattice;
  const bool distributive = is_distributive(l);
  std::optional<std::string> first_failure;
  std::uint64_t rb = 0;
  for (Element u = 0; u < l.size(); ++u) {
    const auto d = make_family(l, {Family::inner, u});
    if (auto v = is_rota_baxter(d)) {
      ++rb;
    } else if (!first_failure) {
      first_failure = "d_" + std::to_string(u) + ": " + show(v);
    }
  }
  r.counts = {distributive ? 1u : 0u, rb};
  r.passed = distributive == !first_failure;
  if (!r.passed)
    r.witness = distributive ? *first_failure
                             : std::string("not distributive, yet every inner derivation is RB");
}

void ido_subset_rbo_iff_distributive(const Context& c, CheckReport& r) {
  const auto idos = c.ops(Predicate::isotone_derivation);
  const bool distributive = is_distributive(c.lattice);
  std::optional<LatticeMap> outside;
  std::uint64_t inside = 0;
  for (const auto& d : idos) {
    if (is_rota_baxter(d)) ++inside;
    else if (!outside) outside = d;
  }
  r.counts = {idos.size(), inside};
  r.passed = distributive == !outside;
  if (!r.passed)
    r.witness = distributive ? "d=" + show(*outside) + " is an isotone derivation outside RBO"
                             : std::string("not distributive, yet IDO ⊆ RBO");
}

void family_membership(const Context& c, CheckReport& r) {
  const auto& l = c.lattice;
  const auto n = static_cast<Element>(l.size());
  const Element top = *l.top();
  std::uint64_t steps = 0, pairs = 0, with_condition = 0;
  auto require_rb = [&](const FamilySpec& spec) -> bool {
    if (auto v = is_rota_baxter(make_family(l, spec)); !v) {
      fail(r, spec.to_string() + " is not RB: " + show(v));
      return false;
    }
    return true;
  };

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b)
      if (l.leq(b, a)) {
        ++steps;
        if (!require_rb({Family::step, a, b})) return;
      }
    if (!require_rb({Family::tau_a, a})) return;
  }
  const auto atoms = l.atoms();
  for (Element a : atoms)
    if (!require_rb({Family::p_atom, a})) return;

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!l.lt(b, a)) continue;
      ++pairs;
      const bool condition = below_comparable(l, a, b);
      with_condition += condition;
      const bool tau_ab = static_cast<bool>(is_rota_baxter(make_family(l, {Family::tau_ab, a, b})));
      if (tau_ab != condition)
        return fail(r, "tauAB:" + std::to_string(a) + ":" + std::to_string(b) +
                           (tau_ab ? " is RB but the comparability condition fails"
                                   : " is not RB but the comparability condition holds"));
      if (a == top) continue;
      const bool phi = static_cast<bool>(is_rota_baxter(make_family(l, {Family::phi, a, b})));
      if (phi != condition)
        return fail(r, "phi:" + std::to_string(a) + ":" + std::to_string(b) +
                           (phi ? " is RB but the comparability condition fails"
                                : " is not RB but the comparability condition holds"));
    }

  if (is_modular(l))
    for (Element a = 0; a < n; ++a)
      if (!require_rb({Family::psi, a})) return;

  if (c.spec == "n8") {
    // psi_b must fail Rota-Baxter exactly at (a, c).
    const auto v = is_rota_baxter(make_family(l, {Family::psi, 2}));
    if (v || v.witness->law != "rota-baxter" || v.witness->args[0] != 1 || v.witness->args[1] != 3)
      return fail(r, "psi:2 on n8 expected to fail rota-baxter at (1, 3), got " +
                         (v ? std::string("pass") : show(v)));
  }
  r.counts = {steps, n, atoms.size(), pairs, with_condition};
  r.passed = true;
}

void n8_three_way(const Context& c, CheckReport& r) {
  const auto& l = c.lattice;
  const auto wm = weak_modular_identity(l);
  bool all_psi = true;
  for (Element a = 0; a < l.size() && all_psi; ++a)
    all_psi = static_cast<bool>(is_rota_baxter(make_family(l, {Family::psi, a})));
  const auto n8 = builtin(LatticeSpec::n8());
  const auto embedding = sublattice_embeds(n8, l);

  r.counts = {wm.holds ? 1u : 0u, all_psi ? 1u : 0u, embedding ? 1u : 0u};
  if (wm.holds != all_psi || all_psi != !embedding)
    return fail(r, "weak-modular=" + std::to_string(wm.holds) + " all-psi-RB=" +
                       std::to_string(all_psi) + " embeds-n8=" + std::to_string(bool(embedding)));
  if (embedding) {
    const auto& h = *embedding;
    for (Element x = 0; x < n8.size(); ++x)
      for (Element y = 0; y < n8.size(); ++y)
        if (h[n8.meet(x, y)] != l.meet(h[x], h[y]) || h[n8.join(x, y)] != l.join(h[x], h[y]))
          return fail(r, "embedding " + show(h) + " breaks " + at("meet/join", x, y));
  }
  if (c.spec == "n8" &&
      (wm.holds || wm.witness->args != std::array<Element, 3>{1, 3, 2}))
    return fail(r, "n8 weak-modular witness expected (1, 3, 2), got " + show(wm));
  r.passed = true;
}

void chain_iff_ieo(const Context& c, CheckReport& r) {
  const auto rbos = c.ops(Predicate::rbo);
  const auto ieos = c.ops(Predicate::isotone_idempotent);
  r.counts = {rbos.size(), ieos.size()};
  if (!std::includes(ieos.begin(), ieos.end(), rbos.begin(), rbos.end()))
    return fail(r, "RBO is not contained in IEO");
  const bool chain = is_chain(c.lattice);
  r.passed = (rbos == ieos) == chain;
  if (!r.passed) {
    if (chain) {
      for (const auto& f : ieos)
        if (!contains(rbos, f)) return fail(r, "chain, yet P=" + show(f) + " is in IEO but not RBO");
    }
    fail(r, "not a chain, yet RBO = IEO");
  }
}

void chain_fibonacci_count(const Context& c, CheckReport& r) {
  const auto n = static_cast<unsigned>(c.lattice.size());
  const auto rbos = c.ops(Predicate::rbo);
  const auto ieos = c.ops(Predicate::isotone_idempotent);
  const auto oracle = brute_force_oracle(c.lattice, Predicate::rbo, c.config.limits);
  const auto expected = counts::rbo_chain(n);
  r.counts = {rbos.size(), ieos.size(), oracle.size(), expected};
  r.passed = rbos.size() == expected && ieos.size() == expected && oracle == rbos;
  if (!r.passed) fail(r, "expected F_" + std::to_string(2 * n) + " = " + std::to_string(expected));
}

void chain_class_rigidity(const Context& c, CheckReport& r) {
  const auto n = static_cast<unsigned>(c.lattice.size());
  const auto rbos = c.ops(Predicate::rbo);
  const auto cls = classify(c.lattice, rbos);
  const auto group = automorphisms(c.lattice).size();
  r.counts = {rbos.size(), cls.class_count(), group};
  r.passed = group == 1 && cls.class_count() == rbos.size() &&
             cls.class_count() == counts::classes_chain(n);
  if (!r.passed) fail(r, "class count differs from operator count or F_2n");
}

unsigned diamond_n(const FiniteLattice& l) { return static_cast<unsigned>(l.size()); }

void mn_count(const Context& c, CheckReport& r) {
  const auto n = diamond_n(c.lattice);
  const auto rbos = c.ops(Predicate::rbo);
  const auto expected = counts::rbo_mn(n);
  r.counts = {rbos.size(), expected};
  r.passed = rbos.size() == expected;
  if (!r.passed) fail(r, "expected " + std::to_string(expected));
}

void mn_classes(const Context& c, CheckReport& r) {
  const auto n = diamond_n(c.lattice);
  const auto cls = classify(c.lattice, c.ops(Predicate::rbo));
  const auto group = automorphisms(c.lattice).size();
  const auto expected = counts::classes_mn(n);
  r.counts = {cls.class_count(), expected, group};
  std::size_t sum = 0;
  for (const auto& k : cls.classes) {
    sum += k.orbit_size;
    if (group % k.orbit_size != 0)
      return fail(r, "orbit of " + show(k.representative) + " has size " +
                         std::to_string(k.orbit_size) + " not dividing |Aut|");
  }
  if (sum != cls.total) return fail(r, "orbit sizes do not sum to the total");
  r.passed = cls.class_count() == expected;
  if (!r.passed) fail(r, "expected " + std::to_string(expected) + " classes");
}

void mn_structure(const Context& c, CheckReport& r) {
  const auto n = diamond_n(c.lattice);
  const auto got = mn_structure_report(n, c.options());
  r.counts = {got.constants, got.zero_step, got.psi, got.inner,
              got.p_atom,    got.large_fix, got.identity, got.total};
  if (!got.mismatches.empty()) return fail(r, got.mismatches.front());
  if (got.total != counts::rbo_mn(n)) return fail(r, "total differs from the closed form");
  if (n >= 4) {
    const auto want = expected_mn_census(n);
    const std::vector<std::uint64_t> expected{want.constants, want.zero_step, want.psi,
                                              want.inner,     want.p_atom,    want.large_fix,
                                              want.identity,  want.total};
    if (r.counts != expected) return fail(r, "census " + show(std::vector<Element>(r.counts.begin(), r.counts.end())) +
                                                 " expected " + show(std::vector<Element>(expected.begin(), expected.end())));
  }
  r.passed = true;
}

void rigidity_suite(const Context& c, CheckReport& r) {
  const auto& l = c.lattice;
  const std::vector<LatticeMap> rigid{LatticeMap::identity(l), LatticeMap::constant(l, *l.bottom()),
                                      make_family(l, {Family::tau}),
                                      LatticeMap::constant(l, *l.top())};
  r.counts = {automorphisms(l).size()};
  for (const auto& p : rigid)
    if (!rigidity_check(l, p)) return fail(r, "P=" + show(p) + " is moved by an automorphism");
  if (c.spec.rfind("m:", 0) == 0 && l.size() >= 4) {
    // Constants at middle elements are all conjugate.
    const auto orbit = conjugacy_orbit(LatticeMap::constant(l, 1)).size();
    r.counts.push_back(orbit);
    if (orbit != l.size() - 2)
      return fail(r, "C_(b1) orbit has size " + std::to_string(orbit) + ", expected " +
                         std::to_string(l.size() - 2));
  }
  r.passed = true;
}

void novikov_suite(const Context& c, CheckReport& r) {
  const auto& l = c.lattice;
  const auto meet_table =
      BinOpTable::tabulate(l, BinOpKind::custom, [&](Element x, Element y) { return l.meet(x, y); });
  if (auto v = check_novikov(l, meet_table); !v) return fail(r, "meet table: " + show(v));
  const auto idos = c.ops(Predicate::isotone_derivation);
  r.counts = {idos.size()};
  for_each_op(idos, r, [&](const LatticeMap& d) -> Why {
    if (auto v = check_novikov(l, novikov_table(l, d)); !v) return show(v);
    if (auto v = novikov_homomorphism_check(l, d); !v) return "homomorphism " + show(v);
    return std::nullopt;
  });
}

void star_semiring_suite(const Context& c, CheckReport& r) {
  const auto rbos = c.ops(Predicate::rbo);
  r.counts = {rbos.size()};
  for_each_op(rbos, r, [&](const LatticeMap& p) -> Why {
    if (auto v = check_star_semiring(c.lattice, p); !v) return show(v);
    return std::nullopt;
  });
}

void dendriform_suite(const Context& c, CheckReport& r) {
  const auto& l = c.lattice;
  const auto rbos = c.ops(Predicate::rbo);
  r.counts = {rbos.size()};
  for_each_op(rbos, r, [&](const LatticeMap& p) -> Why {
    if (auto v = check_dendriform(l, p); !v) return show(v);
    const auto [prec, succ] = dendriform_tables(l, p);
    const auto star = star_table(l, p);
    for (Element x = 0; x < l.size(); ++x)
      for (Element y = 0; y < l.size(); ++y)
        if (l.join(prec(x, y), succ(x, y)) != star(x, y)) return at("(x≺y)∨(x≻y) = x∗y", x, y);
    return std::nullopt;
  });
}

void oracle_crosscheck(const Context& c, CheckReport& r) {
  r.passed = true;
  for (Predicate p : kAllPredicates) {
    const auto fast = c.ops(p);
    const auto slow = brute_force_oracle(c.lattice, p, c.config.limits);
    r.counts.push_back(fast.size());
    if (fast != slow)
      return fail(r, std::string(to_string(p)) + ": enumerate gives " + std::to_string(fast.size()) +
                         " maps, oracle " + std::to_string(slow.size()));
  }
}

// ---------------------------------------------------------------------------

std::uint64_t measure(const std::string& spec, std::string_view quantity,
                      const EnumerationLimits& limits) {
  const auto l = builtin(spec);
  if (quantity == "aut") return automorphisms(l).size();
  return enumerate(l, parse_predicate(quantity), {limits, 1}).size();
}

std::pair<std::string, std::string> split_key(const std::string& key) {
  const auto bar = key.find('|');
  if (bar == std::string::npos) throw BadSpec("expected-values key '" + key + "' lacks '|'");
  return {key.substr(0, bar), key.substr(bar + 1)};
}

std::vector<CheckReport> pinned_values(const CheckConfig& config) {
  std::vector<CheckReport> out;
  ExpectedValues ev;
  try {
    ev = read_expected_values(config.expected_path);
  } catch (const BadSpec& e) {
    auto r = new_report("pinned-values", config.expected_path);
    fail(r, e.what());
    return {r};
  }
  for (const auto& [key, pinned] : ev.values) {
    const auto [spec, quantity] = split_key(key);
    if (config.max_size && builtin(spec).size() > *config.max_size) continue;
    auto r = new_report("pinned-values", key);
    const auto start = std::chrono::steady_clock::now();
    const auto value = measure(spec, quantity, config.limits);
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    r.counts = {value, pinned.count};
    r.passed = value == pinned.count;
    if (!r.passed) r.witness = "computed " + std::to_string(value) + ", pinned " + std::to_string(pinned.count);
    out.push_back(std::move(r));
  }
  if (out.empty() && ev.values.empty()) {
    auto r = new_report("pinned-values", config.expected_path);
    fail(r, "expected-values file has no entries");
    out.push_back(std::move(r));
  }
  return out;
}

const std::vector<Check>& checks() {
  static const std::vector<Check> table = [] {
    auto up_to_full_scan = [](const CheckConfig& c) { return catalog_up_to(c, c.limits.full_scan); };
    auto up_to_oracle = [](const CheckConfig& c) {
      return catalog_up_to(c, std::min<std::size_t>(6, c.limits.oracle));
    };
    auto chains_1_6 = [](const CheckConfig&) { return numbered("chain:", 1, 6); };
    auto chains_1_7 = [](const CheckConfig&) { return numbered("chain:", 1, 7); };
    auto diamonds = [](const CheckConfig&) { return numbered("m:", 3, 7); };
    return std::vector<Check>{
        {{"rbo-basic-facts", "RB operators are isotone and idempotent; absorption-type identities; identity, constants and tau are RB", "catalog", "formula"}, catalog, rbo_basic_facts},
        {{"fix-sublattice", "fix-point set equals the image and is a sublattice", "catalog", "formula"}, catalog, fix_sublattice},
        {{"injective-iff-identity", "an RB operator is injective iff surjective iff the identity", "catalog", "formula"}, catalog, injective_iff_identity},
        {{"meet-translation-equiv", "isotone derivations = meet-translations = inner derivations", "catalog within the full-scan limit", "formula"}, up_to_full_scan, meet_translation_equiv},
        {{"szasz-intersection", "Szász derivations = DO ∩ RBO", "catalog within the full-scan limit; full map scan at size <= 5", "formula"}, up_to_full_scan, szasz_intersection},
        {{"distributive-iff-inner-rbo", "distributive iff every inner derivation is RB", "catalog", "formula"}, catalog, distributive_iff_inner_rbo},
        {{"ido-subset-rbo-iff-distributive", "distributive iff IDO ⊆ RBO", "catalog", "formula"}, catalog, ido_subset_rbo_iff_distributive},
        {{"family-membership", "step/tauA/patom are RB; phi and tauAB RB iff the comparability condition; psi RB on modular lattices", "catalog", "formula"}, catalog, family_membership},
        {{"n8-three-way-equivalence", "weak modular identity iff every psi is RB iff n8 does not embed", "catalog", "formula"}, catalog, n8_three_way},
        {{"chain-iff-ieo", "RBO = IEO iff the lattice is a chain", "catalog", "formula"}, catalog, chain_iff_ieo},
        {{"chain-fibonacci-count", "|RBO(chain n)| = |IEO(chain n)| = F_2n", "chain:1..6", "formula"}, chains_1_6, chain_fibonacci_count},
        {{"chain-class-rigidity", "every RB operator on a chain is alone in its class", "chain:1..7", "formula"}, chains_1_7, chain_class_rigidity},
        {{"mn-count", "|RBO(M_n)| closed form", "m:3..7", "formula"}, diamonds, mn_count},
        {{"mn-classes", "class count of RBO(M_n) closed form", "m:3..7", "formula"}, diamonds, mn_classes},
        {{"mn-structure", "per-case census of RBO(M_n) by fix-point set", "m:3..7", "formula"}, diamonds, mn_structure},
        {{"rigidity-suite", "identity, 0, tau and C_(1) are rigid; middle constants of M_n are conjugate", "catalog", "formula"}, catalog, rigidity_suite},
        {{"novikov-suite", "d ∈ IDO gives a Novikov semiring and a homomorphism", "distributive catalog", "formula"}, distributive_catalog, novikov_suite},
        {{"star-semiring-suite", "P ∈ RBO gives a commutative semiring under ∗_P", "distributive catalog", "formula"}, distributive_catalog, star_semiring_suite},
        {{"dendriform-suite", "P ∈ RBO gives a dendriform semiring", "distributive catalog", "formula"}, distributive_catalog, dendriform_suite},
        {{"oracle-crosscheck", "enumerate agrees with the brute-force oracle for every predicate", "catalog of size <= 6", "formula"}, up_to_oracle, oracle_crosscheck},
        {{"pinned-values", "oracle-generated regression counts", "expected-values file", "pinned"}, nullptr, nullptr},
    };
  }();
  return table;
}

const Check& find_check(std::string_view id) {
  for (const auto& c : checks())
    if (c.info.id == id) return c;
  throw UnknownCheck(std::string(id));
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& c : checks()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

std::vector<CheckReport> run_check(std::string_view id, const CheckConfig& config) {
  const auto& check = find_check(id);
  if (!check.body) return pinned_values(config);

  std::vector<CheckReport> out;
  for (const auto& spec : check.lattices(config)) {
    auto lattice = builtin(spec);
    if (config.max_size && lattice.size() > *config.max_size) continue;
    auto r = new_report(std::string(id), spec);
    const auto start = std::chrono::steady_clock::now();
    check.body(Context{config, spec, std::move(lattice)}, r);
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) {
    return natural_less(a.spec, b.spec);
  });
  return out;
}

std::vector<CheckReport> run_all_checks(const CheckConfig& config) {
  std::vector<CheckReport> out;
  for (const auto& info : check_registry()) {
    auto part = run_check(info.id, config);
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

ExpectedValues generate_expected_values(const EnumerationLimits& limits) {
  ExpectedValues ev;
  for (const std::string spec : {"n5", "n8", "bool:3"}) {
    const auto l = builtin(spec);
    const auto count = brute_force_oracle(l, Predicate::rbo, limits).size();
    ev.values[spec + "|rbo"] = {count, "brute_force_oracle(" + spec + ", rbo): unpruned scan of " +
                                           std::to_string(l.size()) + "^" + std::to_string(l.size()) +
                                           " maps filtered by the Rota-Baxter laws"};
  }
  // Automorphisms of n8 by scanning every permutation for order preservation.
  const auto l = builtin(LatticeSpec::n8());
  std::vector<Element> perm(l.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t aut = 0;
  do {
    bool ok = true;
    for (Element x = 0; x < l.size() && ok; ++x)
      for (Element y = 0; y < l.size() && ok; ++y) ok = l.leq(x, y) == l.leq(perm[x], perm[y]);
    aut += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  ev.values["n8|aut"] = {aut, "scan of all 8! permutations of n8 preserving the order in both directions"};
  return ev;
}

}  // namespace latrb
