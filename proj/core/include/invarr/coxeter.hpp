#pragma once

// Finite Coxeter systems realized exactly.
//
// Roots live in the simple-root basis with Scalar coordinates (rationals,
// or Z[tau] for H3/H4); I2(m) uses a coordinate-free dihedral model
// instead, since 2cos(pi/m) is not generally quadratic.  Group elements
// are stored as permutations of the signed positive-root indices, which
// gives canonical equality, hashing and O(#roots) multiplication.
//
// Products compose left to right: multiply(u, w) applies u first, then w.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "invarr/errors.hpp"
#include "invarr/linalg.hpp"
#include "invarr/scalar.hpp"

namespace invarr {

enum class Kind { A, B, D, E6, E7, E8, F4, G2, H3, H4, I2 };

std::string kind_name(Kind k);
std::optional<Kind> kind_from_string(const std::string& s);

struct CoxeterDatum {
  Kind kind = Kind::A;
  int rank = 1;
  int m = 0;  // dihedral order, I2 only

  static CoxeterDatum of(Kind kind, int rank);
  static CoxeterDatum dihedral(int m);

  void validate() const;  // throws InvalidDatum
  unsigned long long predicted_order() const;
  int predicted_positive_roots() const;
  bool uses_coordinates() const { return kind != Kind::I2; }
  std::string name() const;  // "A3", "I2(7)", ...
};

// Positive roots carry indices 1..N; -i denotes the negative of root i.
using RootIndex = int;
using ElementId = std::uint32_t;

struct Element {
  // perm[i-1] = signed image of positive root i.  The action commutes
  // with negation, so this determines the image of every root.
  std::vector<std::int16_t> perm;
  // Cached Coxeter length = number of positive roots sent negative.
  int len = 0;

  bool is_identity() const { return len == 0; }
  std::int16_t apply(std::int16_t v) const {
    return v > 0 ? perm[v - 1] : static_cast<std::int16_t>(-perm[-v - 1]);
  }
  friend bool operator==(const Element& a, const Element& b) {
    return a.perm == b.perm;
  }
};

struct ElementHash {
  std::size_t operator()(const Element& w) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int16_t v : w.perm) {
      h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(v));
      h *= 1099511628211ull;
    }
    return h;
  }
};

Element multiply(const Element& x, const Element& y);
Element inverse(const Element& x);

// Coordinate-free realization of I2(m): the m positive roots are angular
// slots p = 0..m-1 (directions p*pi/m), reflections are indexed by slot.
struct DihedralModel {
  int m;

  Element reflection_at_slot(int p) const;
  Element rotation(int k) const;

  struct Decoded {
    int k = 0;                // rotation exponent mod m, or mirror slot
    bool reflection = false;  // reflection flag
  };
  Decoded decode(const Element& w) const;

  // Rank-2 dependence rule: two distinct roots are independent, any three
  // are dependent.
  int root_rank(const std::vector<RootIndex>& roots) const;
};

class CoxeterSystem {
 public:
  static constexpr std::size_t kDefaultCap = 50000;

  // Generates positive roots by closure of the simple roots, enumerates
  // the group by BFS over the generators, and identifies reflections and
  // the longest element.  Throws CapExceeded or InvalidDatum.
  static CoxeterSystem build(const CoxeterDatum& datum,
                             std::size_t cap = kDefaultCap);

  const CoxeterDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank; }
  int num_positive_roots() const { return nroots_; }
  std::size_t order() const { return elements_.size(); }

  const Element& identity() const { return elements_[0]; }
  const Element& generator(int i) const { return generators_[i]; }
  const std::vector<Element>& generators() const { return generators_; }
  const Element& longest_element() const { return elements_[w0_]; }
  ElementId longest_element_id() const { return w0_; }

  // Canonical element order: BFS discovery over the generators, so ids
  // are sorted by Coxeter length first.
  const std::vector<Element>& elements() const { return elements_; }
  const Element& element(ElementId id) const { return elements_[id]; }
  ElementId id_of(const Element& w) const;

  // The reflection t with root index r; f: T -> Phi+ is a bijection.
  const Element& reflection(RootIndex r) const { return reflections_[r - 1]; }
  const std::vector<Element>& reflections() const { return reflections_; }
  bool is_reflection(const Element& w) const;
  RootIndex root_of_reflection(const Element& t) const;

  // Coordinates of positive root r in the simple-root basis (coordinate
  // kinds only).
  const Vec& root_coords(RootIndex r) const { return pos_roots_[r - 1]; }
  bool has_coordinates() const { return !pos_roots_.empty(); }
  const DihedralModel* dihedral() const {
    return dihedral_ ? &*dihedral_ : nullptr;
  }

  int coxeter_length(const Element& w) const { return w.len; }
  // Word distance from the identity in the generator Cayley graph, from
  // the construction BFS.  Agrees with coxeter_length by construction;
  // kept queryable so tests can exercise both routes.
  int word_length_bfs(ElementId id) const { return word_len_[id]; }

  // Deterministic reduced word: repeatedly strip the smallest-index left
  // descent.  Generator indices are 0-based.
  std::vector<int> reduced_word(const Element& w) const;
  // All reduced words by backtracking over left descents, up to cap.
  // Returns false (with a partial list) when the cap is hit.
  bool enumerate_reduced_words(const Element& w, std::size_t cap,
                               std::vector<std::vector<int>>& out) const;
  Element evaluate_word(const std::vector<int>& word) const;
  bool is_left_descent(int gen, const Element& w) const;

  struct Inversion {
    RootIndex root;
    Element t;
  };
  // Inversions t_i = s_1...s_{i-1} s_i s_{i-1}...s_1 in word order, with
  // their roots.  Throws NotReduced if the word is not reduced for w.
  std::vector<Inversion> inversions(const Element& w,
                                    const std::vector<int>& word) const;

  // Absolute length: BFS distance from e in the Cayley graph of (W, T).
  int absolute_length_bfs(const Element& w) const { return abs_len_[id_of(w)]; }
  int absolute_length_by_id(ElementId id) const { return abs_len_[id]; }

  // Absolute length via the codimension of the fixed space: rank of
  // (I - M(w)) over the exact ring, by fraction-free elimination.  For
  // I2(m): identity 0, reflections 1, rotations 2.
  int absolute_length_carter(const Element& w) const;

  // True iff the roots of the given reflections are linearly independent.
  bool independent_roots(const std::vector<Element>& ts) const;
  int root_rank(const std::vector<RootIndex>& roots) const;

  // Reflection representation of w: column j = coordinates of w(alpha_j).
  std::vector<Vec> matrix_of(const Element& w) const;

 private:
  CoxeterSystem() = default;
  void build_roots_and_generators();
  void build_dihedral_generators();
  void enumerate_elements(std::size_t cap);
  void find_reflections();
  void build_absolute_lengths();

  CoxeterDatum datum_;
  int nroots_ = 0;
  std::vector<Vec> pos_roots_;
  std::optional<DihedralModel> dihedral_;
  std::vector<RootIndex> simple_root_idx_;
  std::vector<Element> generators_;
  std::vector<Element> reflections_;  // indexed by root - 1
  std::vector<Element> elements_;
  std::unordered_map<Element, ElementId, ElementHash> index_;
  std::vector<char> is_refl_by_id_;
  std::vector<int> word_len_;
  std::vector<int> abs_len_;
  ElementId w0_ = 0;
};

}  // namespace invarr
