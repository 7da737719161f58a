#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latrb/lattice.hpp"
#include "latrb/verdict.hpp"

namespace latrb {

/// A total self-map of a lattice's carrier, stored as its image array.
class LatticeMap {
 public:
  /// Throws IndexOutOfRange if the image has the wrong length or an entry
  /// is not an element of `lattice`.
  LatticeMap(FiniteLattice lattice, std::vector<Element> image);

  static LatticeMap identity(const FiniteLattice& lattice);
  static LatticeMap constant(const FiniteLattice& lattice, Element value);

  const FiniteLattice& lattice() const { return lattice_; }
  std::span<const Element> image() const { return image_; }
  std::size_t size() const { return image_.size(); }

  Element operator()(Element x) const { return image_.at(x); }

  bool operator==(const LatticeMap& other) const {
    return image_ == other.image_ && lattice_ == other.lattice_;
  }
  /// Lexicographic order on image arrays.
  bool operator<(const LatticeMap& other) const { return image_ < other.image_; }

 private:
  FiniteLattice lattice_;
  std::vector<Element> image_;
};

// Predicates take the raw image so search code can test candidates without
// building a LatticeMap; the LatticeMap overloads forward to them.

bool is_isotone(const FiniteLattice& l, std::span<const Element> f);
bool is_idempotent(const FiniteLattice& l, std::span<const Element> f);
bool is_injective(const FiniteLattice& l, std::span<const Element> f);
bool is_surjective(const FiniteLattice& l, std::span<const Element> f);

/// Sorted set {x : f(x) = x}.
std::vector<Element> fix_points(const FiniteLattice& l, std::span<const Element> f);
/// Sorted set f(L).
std::vector<Element> image_set(const FiniteLattice& l, std::span<const Element> f);

/// f(x∨y) = f(x)∨f(y).
Verdict is_join_linear(const FiniteLattice& l, std::span<const Element> f);
/// d(x∧y) = (d(x)∧y) ∨ (x∧d(y)).
Verdict is_derivation(const FiniteLattice& l, std::span<const Element> d);
/// d(x∧y) = x∧d(y).
Verdict is_meet_translation(const FiniteLattice& l, std::span<const Element> d);
/// Join-linear derivation.
Verdict is_szasz(const FiniteLattice& l, std::span<const Element> d);
/// P(x∨y) = P(x)∨P(y) and P(x)∧P(y) = P(P(x)∧y) ∨ P(x∧P(y)). Both laws
/// are tested per pair, so the witness is the first failing pair.
Verdict is_rota_baxter(const FiniteLattice& l, std::span<const Element> p);

inline bool is_isotone(const LatticeMap& f) { return is_isotone(f.lattice(), f.image()); }
inline bool is_idempotent(const LatticeMap& f) { return is_idempotent(f.lattice(), f.image()); }
inline bool is_injective(const LatticeMap& f) { return is_injective(f.lattice(), f.image()); }
inline bool is_surjective(const LatticeMap& f) { return is_surjective(f.lattice(), f.image()); }
inline std::vector<Element> fix_points(const LatticeMap& f) { return fix_points(f.lattice(), f.image()); }
inline std::vector<Element> image_set(const LatticeMap& f) { return image_set(f.lattice(), f.image()); }
inline Verdict is_join_linear(const LatticeMap& f) { return is_join_linear(f.lattice(), f.image()); }
inline Verdict is_derivation(const LatticeMap& d) { return is_derivation(d.lattice(), d.image()); }
inline Verdict is_meet_translation(const LatticeMap& d) {
  return is_meet_translation(d.lattice(), d.image());
}
inline Verdict is_szasz(const LatticeMap& d) { return is_szasz(d.lattice(), d.image()); }
inline Verdict is_rota_baxter(const LatticeMap& p) { return is_rota_baxter(p.lattice(), p.image()); }

/// Named operator families.
enum class Family {
  identity,  // x
  constant,  // a
  tau,       // 0 at bottom, top elsewhere
  step,      // b if x ≤ a, top otherwise (requires b ≤ a)
  tau_a,     // x if x ≤ a, top otherwise
  p_atom,    // 0 at bottom, a at the atom a, top elsewhere
  phi,       // b if x ≤ b, x if b < x ≤ a, top otherwise (requires b < a < top)
  tau_ab,    // x if x ≤ b, b if b < x ≤ a, top otherwise (requires b < a)
  psi,       // x ∨ a
  inner,     // x ∧ a
};

/// Family plus its element parameters. `a` is the first parameter (the
/// `u` of an inner derivation); `b` is only read by step, phi and tau_ab.
///
/// Text grammar: `identity`, `const:A`, `tau`, `step:A:B`, `tauA:A`,
/// `patom:A`, `phi:A:B`, `tauAB:A:B`, `psi:A`, `inner:U`.
struct FamilySpec {
  Family family = Family::identity;
  Element a = 0;
  Element b = 0;

  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
  bool operator==(const FamilySpec&) const = default;
};

/// Builds the family member on `l`. Never tests Rota-Baxter membership;
/// throws BadParams when the family precondition fails.
LatticeMap make_family(const FiniteLattice& l, const FamilySpec& spec);

}  // namespace latrb
