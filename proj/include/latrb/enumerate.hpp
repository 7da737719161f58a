#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "latrb/operators.hpp"

namespace latrb {

/// Operator classes that can be enumerated.
enum class Predicate {
  rbo,               // Rota-Baxter (integral) operators
  derivation,        // DO
  isotone_derivation,  // IDO
  isotone_idempotent,  // IEO
  szasz,             // join-linear derivations
  meet_translation,
  all,               // every self-map
};

Predicate parse_predicate(std::string_view text);
std::string_view to_string(Predicate p);
inline constexpr Predicate kAllPredicates[] = {
    Predicate::rbo,   Predicate::derivation,       Predicate::isotone_derivation,
    Predicate::isotone_idempotent, Predicate::szasz, Predicate::meet_translation,
    Predicate::all};

/// RBO, IDO and IEO are searched over isotone maps only.
bool uses_isotone_search(Predicate p);

/// Direct evaluation of the predicate's defining laws on one map.
bool satisfies(const FiniteLattice& l, std::span<const Element> f, Predicate p);

struct EnumerationLimits {
  std::size_t isotone = 12;
  std::size_t full_scan = 7;
  std::size_t oracle = 7;
};

struct EnumerateOptions {
  EnumerationLimits limits;
  /// Worker threads for the subtree split on the first element's image.
  unsigned threads = 1;
};

/// All maps satisfying `p`, sorted lexicographically by image.
///
/// Maps are built along linear_extension(l). The isotone search draws f(x)
/// from the up-set of the join of f over x's lower covers; every search
/// prunes with laws that only involve already-assigned elements, and each
/// completed map is re-checked with satisfies().
std::vector<LatticeMap> enumerate(const FiniteLattice& l, Predicate p,
                                  const EnumerateOptions& options = {});

/// Unpruned scan of all size^size maps filtered by satisfies().
std::vector<LatticeMap> brute_force_oracle(const FiniteLattice& l, Predicate p,
                                           const EnumerationLimits& limits = {});

/// One orbit of operators under conjugation by automorphisms.
struct IsoClass {
  LatticeMap representative;  // lexicographic minimum of the orbit
  std::size_t orbit_size = 0;
};

struct IsoClassification {
  std::vector<IsoClass> classes;  // sorted by representative
  std::size_t total = 0;
  std::size_t class_count() const { return classes.size(); }
};

/// f∘P∘f⁻¹ for an automorphism f given as a permutation word.
std::vector<Element> conjugate(std::span<const Element> p, std::span<const Element> f);

/// Partitions `ops` into orbits under P ↦ f∘P∘f⁻¹. Orbits are intersected
/// with `ops`, so sizes always sum to ops.size().
IsoClassification classify(const FiniteLattice& l, const std::vector<LatticeMap>& ops);

/// Distinct conjugates of `p`, sorted.
std::vector<LatticeMap> conjugacy_orbit(const LatticeMap& p);

/// True iff no automorphism moves `p`.
bool rigidity_check(const FiniteLattice& l, const LatticeMap& p);

/// Closed-form counts.
namespace counts {

/// F1 = F2 = 1. Throws BadParams for n = 0 or when the value overflows.
std::uint64_t fibonacci(unsigned n);
std::uint64_t rbo_chain(unsigned n);
std::uint64_t classes_chain(unsigned n);
/// |RBO(M_n)| for n >= 3.
std::uint64_t rbo_mn(unsigned n);
/// Isomorphism classes of RBO(M_n) for n >= 3.
std::uint64_t classes_mn(unsigned n);

}  // namespace counts

/// RBO(M_n) bucketed by the shape of the fix-point set.
struct MnCensus {
  unsigned n = 0;
  std::size_t constants = 0;    // |Fix| = 1
  std::size_t zero_step = 0;    // Fix = {0, 1}: step maps 0^(a)
  std::size_t psi = 0;          // Fix = {b_i, 1}: x ∨ b_i
  std::size_t inner = 0;        // Fix = {0, b_i}: x ∧ b_i
  std::size_t p_atom = 0;       // Fix = {0, b_i, 1}
  std::size_t large_fix = 0;    // Fix ⊇ {0, 1} plus >= 2 atoms, not identity
  std::size_t identity = 0;
  std::size_t total = 0;
  /// Operators whose form differs from the one their bucket dictates.
  std::vector<std::string> mismatches;

  std::size_t two_fix() const { return zero_step + psi + inner; }
  std::size_t three_fix() const { return p_atom; }
};

/// Expected census for n >= 4.
MnCensus expected_mn_census(unsigned n);

MnCensus mn_structure_report(unsigned n, const EnumerateOptions& options = {});

}  // namespace latrb
