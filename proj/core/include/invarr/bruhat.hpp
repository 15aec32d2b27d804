#pragma once

// Bruhat order and Bruhat graphs on principal order ideals [e, w].
//
// bg(w) is the directed graph on [e, w] with an edge x -> tx for every
// reflection t that increases Coxeter length; its transitive closure is
// the Bruhat order, and the edges with length jump 1 are exactly the
// covers.  Everything here is a pure function of an immutable system.

#include <cstdint>
#include <optional>
#include <vector>

#include "invarr/coxeter.hpp"

namespace invarr {

// Descent-lifting recursion on a right descent of w.
bool bruhat_leq(const CoxeterSystem& sys, const Element& u, const Element& w);

struct BruhatInterval {
  const CoxeterSystem* sys = nullptr;
  ElementId top = 0;
  std::vector<ElementId> members;   // ascending id = sorted by length
  std::vector<char> member_bits;    // indexed by ElementId

  std::size_t size() const { return members.size(); }
  bool contains(ElementId id) const { return member_bits[id] != 0; }
  bool leq(ElementId u, ElementId v) const {
    return bruhat_leq(*sys, sys->element(u), sys->element(v));
  }
};

// Filters the whole group through bruhat_leq; the groups at play are small.
BruhatInterval ideal(const CoxeterSystem& sys, const Element& w);

struct BruhatEdge {
  int from, to;  // member positions
  RootIndex t;
};

struct BruhatGraph {
  BruhatInterval interval;
  std::vector<BruhatEdge> edges;
  // Adjacency by member position: up[x] holds (y, t) with x -> y = tx.
  std::vector<std::vector<std::pair<int, RootIndex>>> up, down;
  std::vector<int> pos_by_id;  // -1 when not a member

  const CoxeterSystem& sys() const { return *interval.sys; }
  int pos_of(ElementId id) const { return pos_by_id[id]; }
  const Element& member(int pos) const {
    return interval.sys->element(interval.members[pos]);
  }

  // al(u, w) for every member, by reverse BFS from the top.
  std::vector<int> distances_to_top() const;
  int num_non_covering_edges() const;
};

BruhatGraph bruhat_graph(const CoxeterSystem& sys, const Element& w);

// Directed distance from u to w in bg(w); empty when u is not below w.
std::optional<int> directed_distance(const CoxeterSystem& sys,
                                     const Element& u, const Element& w);

// True iff al(u, w) equals the absolute length of u w^-1 for every u <= w.
bool distance_condition(const CoxeterSystem& sys, const Element& w);
bool distance_condition(const BruhatGraph& g);

// An element v <= u, w with al(v, u) + al(v, w) equal to the absolute
// length of u w^-1.  Candidates are scanned in increasing order of the
// absolute-length sum, ties broken by canonical element index.
Element meet_point(const CoxeterSystem& sys, const Element& u,
                   const Element& w);

// Roots of the reflections t with tu <= w; throws NotInIdeal when u > w.
std::vector<RootIndex> edge_set_at(const CoxeterSystem& sys, const Element& u,
                                   const Element& w);
int degree(const CoxeterSystem& sys, const Element& u, const Element& w);

// Carrell-Peterson regularity: every vertex of bg(w) has degree l(w).
bool is_regular_bg(const CoxeterSystem& sys, const Element& w);
bool is_regular_bg(const BruhatGraph& g);

struct BrokenRhombus {
  ElementId x, y, z;  // x <- y -> z with no v <= w completing x -> v <- z
};

std::vector<BrokenRhombus> broken_rhombi(const CoxeterSystem& sys,
                                         const Element& w);
std::vector<BrokenRhombus> broken_rhombi(const BruhatGraph& g);

}  // namespace invarr
