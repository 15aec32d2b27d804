#pragma once

// Inversion arrangements and the map phi.
//
// The ground set is the ordered list of inversion roots of w along a fixed
// reduced word; all position sets below are 1-based and sorted.  A broken
// circuit is a circuit minus its LARGEST position.  That convention is
// backwards from the usual matroid one and is load-bearing: phi sends
// {i_1 < ... < i_m} to t_{i_1} ... t_{i_m} w and everything downstream
// depends on dropping the largest element.  Do not "fix" it.

#include <cstdint>
#include <vector>

#include "invarr/bruhat.hpp"
#include "invarr/coxeter.hpp"

namespace invarr {

struct InversionArrangement {
  const CoxeterSystem* sys = nullptr;
  Element w;
  std::vector<int> word;               // reduced word in use (0-based gens)
  std::vector<RootIndex> roots;        // root of t_i, word order
  std::vector<Element> reflections;    // t_1 .. t_k

  int size() const { return static_cast<int>(roots.size()); }
};

// Throws NotReduced when the word does not evaluate reduced to w.
InversionArrangement inversion_arrangement(const CoxeterSystem& sys,
                                           const Element& w,
                                           const std::vector<int>& word);
// Same with the canonical (smallest-descent) reduced word.
InversionArrangement inversion_arrangement(const CoxeterSystem& sys,
                                           const Element& w);

struct Circuit {
  std::vector<int> positions;  // minimal dependent set, 1-based sorted
};

// Complete list of circuits by increasing cardinality with the exact rank
// oracle.  Guarded by k <= 22 (the sweeps are exponential in k).
std::vector<Circuit> circuits(const InversionArrangement& arr);

struct NBCFamily {
  InversionArrangement arr;
  std::vector<std::vector<int>> sets;  // sorted by (size, lex)

  std::size_t size() const { return sets.size(); }
  bool contains(const std::vector<int>& positions) const;
};

NBCFamily nbc_sets(const InversionArrangement& arr);
// Backtracking route used by nbc_sets for coordinate systems; exposed so
// the dihedral shortcut can be cross-checked against it.
NBCFamily nbc_sets_from_circuits(const InversionArrangement& arr,
                                 const std::vector<Circuit>& circuits);

// Number of regions of the arrangement via the Whitney sum for the
// characteristic polynomial evaluated at -1.  Independent of the NBC
// enumeration; the two must agree.
long long region_count_charpoly(const InversionArrangement& arr);

// t_{i_1} ... t_{i_m} w for ascending positions; no NBC membership check.
Element deletion_product(const InversionArrangement& arr,
                         const std::vector<int>& positions);

// Same, but validates membership in the family first (throws NotNBC).
Element phi(const NBCFamily& family, const std::vector<int>& positions);

struct PhiMap {
  NBCFamily domain;
  std::vector<Element> images;  // aligned with domain.sets
};
PhiMap phi_map(NBCFamily family);

struct PhiCheck {
  bool well_defined = false;  // every image lands in [e, w]
  bool injective = false;
  bool surjective = false;    // image is all of [e, w]
};
PhiCheck phi_check(const InversionArrangement& arr);

// The deletion positions {i_1 < ... < i_m}, m = al(u, w), whose reversed
// sequence (i_m, ..., i_1) is lexicographically maximal among all m-fold
// deletions of the word that evaluate to u.  Requires u <= w and the
// distance condition for w (throws PreconditionViolated otherwise).
std::vector<int> lexmax_preimage(const InversionArrangement& arr,
                                 const Element& u);

}  // namespace invarr
