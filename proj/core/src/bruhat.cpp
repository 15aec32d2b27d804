#include "invarr/bruhat.hpp"

#include <algorithm>
#include <map>

namespace invarr {

bool bruhat_leq(const CoxeterSystem& sys, const Element& u, const Element& w) {
  Element uu = u, ww = w;
  while (true) {
    if (uu.len > ww.len) return false;
    if (uu.is_identity()) return true;
    if (uu == ww) return true;
    // Take any right descent s of w.  Then u <= w iff (us <= ws) when s is
    // a descent of u as well, and iff (u <= ws) otherwise.
    int s = -1;
    Element ws;
    for (int g = 0; g < sys.rank(); ++g) {
      Element y = multiply(ww, sys.generator(g));
      if (y.len < ww.len) {
        s = g;
        ws = std::move(y);
        break;
      }
    }
    Element us = multiply(uu, sys.generator(s));
    if (us.len < uu.len) uu = std::move(us);
    ww = std::move(ws);
  }
}

BruhatInterval ideal(const CoxeterSystem& sys, const Element& w) {
  BruhatInterval iv;
  iv.sys = &sys;
  iv.top = sys.id_of(w);
  iv.member_bits.assign(sys.order(), 0);
  for (ElementId id = 0; id < sys.order(); ++id) {
    if (bruhat_leq(sys, sys.element(id), w)) {
      iv.members.push_back(id);
      iv.member_bits[id] = 1;
    }
  }
  return iv;
}

BruhatGraph bruhat_graph(const CoxeterSystem& sys, const Element& w) {
  BruhatGraph g;
  g.interval = ideal(sys, w);
  const auto& members = g.interval.members;
  g.pos_by_id.assign(sys.order(), -1);
  for (int p = 0; p < static_cast<int>(members.size()); ++p)
    g.pos_by_id[members[p]] = p;
  g.up.resize(members.size());
  g.down.resize(members.size());
  for (int p = 0; p < static_cast<int>(members.size()); ++p) {
    const Element& u = sys.element(members[p]);
    for (RootIndex r = 1; r <= sys.num_positive_roots(); ++r) {
      Element v = multiply(sys.reflection(r), u);
      if (v.len <= u.len) continue;
      int q = g.pos_by_id[sys.id_of(v)];
      if (q < 0) continue;
      g.edges.push_back({p, q, r});
      g.up[p].emplace_back(q, r);
      g.down[q].emplace_back(p, r);
    }
  }
  for (auto& adj : g.up) std::sort(adj.begin(), adj.end());
  for (auto& adj : g.down) std::sort(adj.begin(), adj.end());
  return g;
}

std::vector<int> BruhatGraph::distances_to_top() const {
  std::vector<int> dist(interval.size(), -1);
  int top = pos_by_id[interval.top];
  dist[top] = 0;
  std::vector<int> frontier{top};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int y : frontier) {
      for (const auto& [x, t] : down[y]) {
        if (dist[x] == -1) {
          dist[x] = dist[y] + 1;
          next.push_back(x);
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

int BruhatGraph::num_non_covering_edges() const {
  int count = 0;
  for (const auto& e : edges) {
    int jump = member(e.to).len - member(e.from).len;
    if (jump > 1) ++count;
  }
  return count;
}

std::optional<int> directed_distance(const CoxeterSystem& sys,
                                     const Element& u, const Element& w) {
  if (u == w) return 0;
  BruhatGraph g = bruhat_graph(sys, w);
  int pos = g.pos_of(sys.id_of(u));
  if (pos < 0) return std::nullopt;
  return g.distances_to_top()[pos];
}

bool distance_condition(const BruhatGraph& g) {
  const CoxeterSystem& sys = g.sys();
  Element winv = inverse(sys.element(g.interval.top));
  std::vector<int> dist = g.distances_to_top();
  for (std::size_t p = 0; p < g.interval.size(); ++p) {
    const Element& u = sys.element(g.interval.members[p]);
    int lp = sys.absolute_length_bfs(multiply(u, winv));
    if (dist[p] != lp) return false;
  }
  return true;
}

bool distance_condition(const CoxeterSystem& sys, const Element& w) {
  return distance_condition(bruhat_graph(sys, w));
}

Element meet_point(const CoxeterSystem& sys, const Element& u,
                   const Element& w) {
  BruhatGraph gu = bruhat_graph(sys, u);
  BruhatGraph gw = bruhat_graph(sys, w);
  std::vector<int> du = gu.distances_to_top();
  std::vector<int> dw = gw.distances_to_top();
  const int target = sys.absolute_length_bfs(multiply(u, inverse(w)));

  Element uinv = inverse(u), winv = inverse(w);
  struct Cand {
    int score;
    ElementId id;
    int pu, pw;
  };
  std::vector<Cand> cands;
  for (ElementId id = 0; id < sys.order(); ++id) {
    int pu = gu.pos_of(id), pw = gw.pos_of(id);
    if (pu < 0 || pw < 0) continue;
    const Element& v = sys.element(id);
    int score = sys.absolute_length_bfs(multiply(v, uinv)) +
                sys.absolute_length_bfs(multiply(v, winv));
    cands.push_back({score, id, pu, pw});
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return a.score != b.score ? a.score < b.score : a.id < b.id;
  });
  for (const Cand& c : cands) {
    if (du[c.pu] + dw[c.pw] == target) return sys.element(c.id);
  }
  throw SearchExhausted("no meeting point found; this should be impossible");
}

std::vector<RootIndex> edge_set_at(const CoxeterSystem& sys, const Element& u,
                                   const Element& w) {
  if (!bruhat_leq(sys, u, w))
    throw NotInIdeal("element lies outside the order ideal");
  std::vector<RootIndex> out;
  for (RootIndex r = 1; r <= sys.num_positive_roots(); ++r) {
    if (bruhat_leq(sys, multiply(sys.reflection(r), u), w)) out.push_back(r);
  }
  return out;
}

int degree(const CoxeterSystem& sys, const Element& u, const Element& w) {
  return static_cast<int>(edge_set_at(sys, u, w).size());
}

bool is_regular_bg(const BruhatGraph& g) {
  const int want = g.member(g.pos_of(g.interval.top)).len;
  for (std::size_t p = 0; p < g.interval.size(); ++p) {
    int deg = static_cast<int>(g.up[p].size() + g.down[p].size());
    if (deg != want) return false;
  }
  return true;
}

bool is_regular_bg(const CoxeterSystem& sys, const Element& w) {
  return is_regular_bg(bruhat_graph(sys, w));
}

std::vector<BrokenRhombus> broken_rhombi(const BruhatGraph& g) {
  const CoxeterSystem& sys = g.sys();
  const int nroots = sys.num_positive_roots();
  std::vector<BrokenRhombus> out;

  // x <- y -> z reads with arrows leaving y: x and z sit above y via
  // reflections t and r.  The reflections whose roots lie in the plane of
  // alpha_t and alpha_r cut out a dihedral coset through y; its part of
  // the ideal is a dihedral Bruhat ideal.  The rhombus is broken exactly
  // when x and z are two distinct maximal elements of that part: then
  // every completion x -> v <- z (all of which stay in the coset) lies
  // outside [e, w].  Maximality is decided with the exact rank oracle.
  std::map<std::pair<RootIndex, RootIndex>, std::vector<char>> plane_cache;
  auto plane_of = [&](RootIndex a, RootIndex b) -> const std::vector<char>& {
    auto key = std::minmax(a, b);
    auto it = plane_cache.find(key);
    if (it != plane_cache.end()) return it->second;
    std::vector<char> in_plane(nroots + 1, 0);
    for (RootIndex c = 1; c <= nroots; ++c)
      in_plane[c] = c == a || c == b || sys.root_rank({a, b, c}) <= 2;
    return plane_cache.emplace(key, std::move(in_plane)).first->second;
  };
  auto plane_maximal = [&](const Element& u, const std::vector<char>& plane) {
    for (RootIndex c = 1; c <= nroots; ++c) {
      if (!plane[c]) continue;
      Element v = multiply(sys.reflection(c), u);
      if (v.len > u.len && g.pos_of(sys.id_of(v)) >= 0) return false;
    }
    return true;
  };

  for (int y = 0; y < static_cast<int>(g.interval.size()); ++y) {
    const auto& ups = g.up[y];
    for (std::size_t i = 0; i < ups.size(); ++i) {
      for (std::size_t j = i + 1; j < ups.size(); ++j) {
        const auto& plane = plane_of(ups[i].second, ups[j].second);
        int x = ups[i].first, z = ups[j].first;
        if (!plane_maximal(g.member(x), plane)) continue;
        if (!plane_maximal(g.member(z), plane)) continue;
        ElementId xi = g.interval.members[x], zi = g.interval.members[z];
        out.push_back(
            {std::min(xi, zi), g.interval.members[y], std::max(xi, zi)});
      }
    }
  }
  return out;
}

std::vector<BrokenRhombus> broken_rhombi(const CoxeterSystem& sys,
                                         const Element& w) {
  return broken_rhombi(bruhat_graph(sys, w));
}

}  // namespace invarr
