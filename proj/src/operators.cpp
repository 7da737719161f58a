#include "latrb/operators.hpp"

#include <algorithm>
#include <charconv>

namespace latrb {

LatticeMap::LatticeMap(FiniteLattice lattice, std::vector<Element> image)
    : lattice_(std::move(lattice)), image_(std::move(image)) {
  if (image_.size() != lattice_.size())
    throw IndexOutOfRange(image_.size(), lattice_.size());
  for (Element v : image_)
    if (v >= lattice_.size()) throw IndexOutOfRange(v, lattice_.size());
}

LatticeMap LatticeMap::identity(const FiniteLattice& lattice) {
  std::vector<Element> image(lattice.size());
  for (Element x = 0; x < image.size(); ++x) image[x] = x;
  return LatticeMap(lattice, std::move(image));
}

LatticeMap LatticeMap::constant(const FiniteLattice& lattice, Element value) {
  return LatticeMap(lattice, std::vector<Element>(lattice.size(), value));
}

namespace {

Element count(const FiniteLattice& l) { return static_cast<Element>(l.size()); }

}  // namespace

bool is_isotone(const FiniteLattice& l, std::span<const Element> f) {
  const Element n = count(l);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (l.leq(x, y) && !l.leq(f[x], f[y])) return false;
  return true;
}

bool is_idempotent(const FiniteLattice& l, std::span<const Element> f) {
  for (Element x = 0; x < count(l); ++x)
    if (f[f[x]] != f[x]) return false;
  return true;
}

bool is_injective(const FiniteLattice& l, std::span<const Element> f) {
  return image_set(l, f).size() == l.size();
}

bool is_surjective(const FiniteLattice& l, std::span<const Element> f) {
  return image_set(l, f).size() == l.size();
}

std::vector<Element> fix_points(const FiniteLattice& l, std::span<const Element> f) {
  std::vector<Element> out;
  for (Element x = 0; x < count(l); ++x)
    if (f[x] == x) out.push_back(x);
  return out;
}

std::vector<Element> image_set(const FiniteLattice& l, std::span<const Element> f) {
  std::vector<Element> out(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(l.size()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Verdict is_join_linear(const FiniteLattice& l, std::span<const Element> f) {
  const Element n = count(l);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (f[l.join(x, y)] != l.join(f[x], f[y])) return Verdict::fail("join-linearity", x, y);
  return Verdict::pass();
}

Verdict is_derivation(const FiniteLattice& l, std::span<const Element> d) {
  const Element n = count(l);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (d[l.meet(x, y)] != l.join(l.meet(d[x], y), l.meet(x, d[y])))
        return Verdict::fail("leibniz", x, y);
  return Verdict::pass();
}

Verdict is_meet_translation(const FiniteLattice& l, std::span<const Element> d) {
  const Element n = count(l);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (d[l.meet(x, y)] != l.meet(x, d[y])) return Verdict::fail("meet-translation", x, y);
  return Verdict::pass();
}

Verdict is_szasz(const FiniteLattice& l, std::span<const Element> d) {
  const Element n = count(l);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (d[l.join(x, y)] != l.join(d[x], d[y])) return Verdict::fail("join-linearity", x, y);
      if (d[l.meet(x, y)] != l.join(l.meet(d[x], y), l.meet(x, d[y])))
        return Verdict::fail("leibniz", x, y);
    }
  return Verdict::pass();
}

Verdict is_rota_baxter(const FiniteLattice& l, std::span<const Element> p) {
  const Element n = count(l);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (p[l.join(x, y)] != l.join(p[x], p[y])) return Verdict::fail("join-linearity", x, y);
      const Element lhs = l.meet(p[x], p[y]);
      const Element rhs = l.join(p[l.meet(p[x], y)], p[l.meet(x, p[y])]);
      if (lhs != rhs) return Verdict::fail("rota-baxter", x, y);
    }
  return Verdict::pass();
}

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
  int arity;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::identity, "identity", 0}, {Family::constant, "const", 1},
    {Family::tau, "tau", 0},           {Family::step, "step", 2},
    {Family::tau_a, "tauA", 1},        {Family::p_atom, "patom", 1},
    {Family::phi, "phi", 2},           {Family::tau_ab, "tauAB", 2},
    {Family::psi, "psi", 1},           {Family::inner, "inner", 1},
};

const FamilyName& lookup(Family f) {
  for (const auto& entry : kFamilyNames)
    if (entry.family == f) return entry;
  throw BadSpec("unknown family");
}

Element parse_element(std::string_view text) {
  Element value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw BadSpec("expected an element index, got '" + std::string(text) + "'");
  return value;
}

std::string order_violation(Element b, Element a) {
  return "OrderViolation(" + std::to_string(b) + "," + std::to_string(a) + ")";
}

Element require_top(const FiniteLattice& l, std::string_view family) {
  if (!l.top()) throw BadParams(std::string(family) + " requires a top element");
  return *l.top();
}

void require_element(const FiniteLattice& l, Element x) {
  if (x >= l.size()) throw IndexOutOfRange(x, l.size());
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  for (const auto& entry : kFamilyNames) {
    if (entry.name != parts.front()) continue;
    if (static_cast<int>(parts.size()) - 1 != entry.arity)
      throw BadSpec("family '" + std::string(entry.name) + "' takes " +
                    std::to_string(entry.arity) + " parameter(s)");
    FamilySpec spec{entry.family};
    if (entry.arity >= 1) spec.a = parse_element(parts[1]);
    if (entry.arity >= 2) spec.b = parse_element(parts[2]);
    return spec;
  }
  throw BadSpec("unknown family '" + std::string(parts.front()) + "'");
}

std::string FamilySpec::to_string() const {
  const auto& entry = lookup(family);
  std::string out(entry.name);
  if (entry.arity >= 1) out += ":" + std::to_string(a);
  if (entry.arity >= 2) out += ":" + std::to_string(b);
  return out;
}

LatticeMap make_family(const FiniteLattice& l, const FamilySpec& spec) {
  const Element n = count(l);
  const auto& entry = lookup(spec.family);
  if (entry.arity >= 1) require_element(l, spec.a);
  if (entry.arity >= 2) require_element(l, spec.b);
  const Element a = spec.a;
  const Element b = spec.b;
  std::vector<Element> image(n);

  switch (spec.family) {
    case Family::identity:
      return LatticeMap::identity(l);
    case Family::constant:
      return LatticeMap::constant(l, a);
    case Family::tau: {
      if (!l.bottom()) throw BadParams("tau requires a bottom element");
      const Element top = require_top(l, "tau");
      for (Element x = 0; x < n; ++x) image[x] = x == *l.bottom() ? *l.bottom() : top;
      break;
    }
    case Family::step: {
      const Element top = require_top(l, "step");
      if (!l.leq(b, a)) throw BadParams(order_violation(b, a) + ": step requires b <= a");
      for (Element x = 0; x < n; ++x) image[x] = l.leq(x, a) ? b : top;
      break;
    }
    case Family::tau_a: {
      const Element top = require_top(l, "tauA");
      for (Element x = 0; x < n; ++x) image[x] = l.leq(x, a) ? x : top;
      break;
    }
    case Family::p_atom: {
      const Element top = require_top(l, "patom");
      if (!l.bottom()) throw BadParams("patom requires a bottom element");
      const auto atoms = l.atoms();
      if (std::find(atoms.begin(), atoms.end(), a) == atoms.end())
        throw BadParams("NotAnAtom(" + std::to_string(a) + ")");
      for (Element x = 0; x < n; ++x) image[x] = (x == *l.bottom() || x == a) ? x : top;
      break;
    }
    case Family::phi: {
      const Element top = require_top(l, "phi");
      if (!l.lt(b, a)) throw BadParams(order_violation(b, a) + ": phi requires b < a");
      if (!l.lt(a, top)) throw BadParams("NotBelowTop(" + std::to_string(a) + "): phi requires a < 1");
      for (Element x = 0; x < n; ++x) image[x] = l.leq(x, b) ? b : (l.lt(b, x) && l.leq(x, a) ? x : top);
      break;
    }
    case Family::tau_ab: {
      const Element top = require_top(l, "tauAB");
      if (!l.lt(b, a)) throw BadParams(order_violation(b, a) + ": tauAB requires b < a");
      for (Element x = 0; x < n; ++x) image[x] = l.leq(x, b) ? x : (l.lt(b, x) && l.leq(x, a) ? b : top);
      break;
    }
    case Family::psi:
      for (Element x = 0; x < n; ++x) image[x] = l.join(x, a);
      break;
    case Family::inner:
      for (Element x = 0; x < n; ++x) image[x] = l.meet(x, a);
      break;
  }
  return LatticeMap(l, std::move(image));
}

}  // namespace latrb
