#pragma once

// Symmetric-group specifics: one-line permutations, pattern containment,
// diagrams and right hulls, dominance order, and the cycle formula for
// absolute length.  Permutations compose left to right: (uw)(i) = w(u(i)),
// so left multiplication by the adjacent transposition s_i swaps the
// entries in positions i, i+1 of the one-line notation.

#include <string>
#include <utility>
#include <vector>

#include "invarr/coxeter.hpp"

namespace invarr {

struct Permutation {
  std::vector<int> oneline;  // w(1), ..., w(n)

  int n() const { return static_cast<int>(oneline.size()); }
  int operator()(int i) const { return oneline[i - 1]; }

  static Permutation identity(int n);
  // Accepts compact digit form ("3412") or comma separated ("10,2,...").
  static Permutation parse(const std::string& s);
  std::string str() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.oneline == b.oneline;
  }
};

Permutation compose(const Permutation& u, const Permutation& w);  // uw
Permutation inverse_perm(const Permutation& w);
Permutation adjacent_transposition(int n, int i);  // swaps i, i+1
Permutation rotate180(const Permutation& w);

int inversion_count(const Permutation& w);
int cycle_count(const Permutation& w);
int absolute_length_cycles(const Permutation& w);  // n - c(w)

bool contains_pattern(const Permutation& w, const Permutation& p);
// Avoidance of 4231, 35142, 42513 and 351624 simultaneously.
bool avoids_hlss_patterns(const Permutation& w);

// u <= w iff u[i,j] <= w[i,j] for all i, j, where
// w[i,j] = #{x <= i : w(x) >= j}.
bool dominance_leq(const Permutation& u, const Permutation& w);

std::vector<std::pair<int, int>> diagram(const Permutation& w);

struct RightHull {
  int n = 0;
  std::vector<char> cells;  // row-major n x n
  bool contains(int i, int j) const { return cells[(i - 1) * n + (j - 1)]; }
};

// Cells whose upper-right and lower-left rectangles both meet the diagram.
RightHull right_hull(const Permutation& w);

// True iff [e, w] coincides with {u : diag(u) inside rh(w)}.
bool has_right_hull_property(const Permutation& w);

// Fixed realization of S_n as the type A system of rank n-1: simple
// reflections are the adjacent transpositions, composed left to right.
Element realize(const CoxeterSystem& sys, const Permutation& w);
Permutation unrealize(const CoxeterSystem& sys, const Element& w);

struct CollectionCheck {
  bool regions_eq_interval = false;
  bool right_hull_prop = false;
  bool avoids_patterns = false;
  bool distance_cond = false;

  bool all_agree() const {
    return regions_eq_interval == right_hull_prop &&
           right_hull_prop == avoids_patterns &&
           avoids_patterns == distance_cond;
  }
};

// Evaluates the four equivalent conditions independently; sys must be the
// type A system of rank n-1.
CollectionCheck check_collection(const Permutation& w,
                                 const CoxeterSystem& sys);

}  // namespace invarr
