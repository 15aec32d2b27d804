#include "invarr/typea.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "invarr/arrangement.hpp"
#include "invarr/bruhat.hpp"

namespace invarr {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.oneline.resize(n);
  std::iota(p.oneline.begin(), p.oneline.end(), 1);
  return p;
}

Permutation Permutation::parse(const std::string& s) {
  Permutation p;
  if (s.find(',') != std::string::npos || s.find(' ') != std::string::npos) {
    std::string tmp = s;
    std::replace(tmp.begin(), tmp.end(), ',', ' ');
    std::istringstream in(tmp);
    int v;
    while (in >> v) p.oneline.push_back(v);
  } else {
    for (char c : s) {
      if (c < '1' || c > '9')
        throw Error(std::string("bad one-line notation: ") + s);
      p.oneline.push_back(c - '0');
    }
  }
  const int n = p.n();
  if (n == 0) throw Error("empty permutation");
  std::vector<char> seen(n + 1, 0);
  for (int v : p.oneline) {
    if (v < 1 || v > n || seen[v])
      throw Error(std::string("not a permutation: ") + s);
    seen[v] = 1;
  }
  return p;
}

std::string Permutation::str() const {
  std::string out;
  if (n() <= 9) {
    for (int v : oneline) out += static_cast<char>('0' + v);
  } else {
    for (int i = 0; i < n(); ++i) {
      if (i) out += ',';
      out += std::to_string(oneline[i]);
    }
  }
  return out;
}

Permutation compose(const Permutation& u, const Permutation& w) {
  Permutation r;
  r.oneline.resize(u.n());
  for (int i = 1; i <= u.n(); ++i) r.oneline[i - 1] = w(u(i));
  return r;
}

Permutation inverse_perm(const Permutation& w) {
  Permutation r;
  r.oneline.resize(w.n());
  for (int i = 1; i <= w.n(); ++i) r.oneline[w(i) - 1] = i;
  return r;
}

Permutation adjacent_transposition(int n, int i) {
  Permutation p = Permutation::identity(n);
  std::swap(p.oneline[i - 1], p.oneline[i]);
  return p;
}

Permutation rotate180(const Permutation& w) {
  const int n = w.n();
  Permutation r;
  r.oneline.resize(n);
  for (int i = 1; i <= n; ++i) r.oneline[i - 1] = n + 1 - w(n + 1 - i);
  return r;
}

int inversion_count(const Permutation& w) {
  int count = 0;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j) count += w(i) > w(j);
  return count;
}

int cycle_count(const Permutation& w) {
  std::vector<char> seen(w.n() + 1, 0);
  int cycles = 0;
  for (int i = 1; i <= w.n(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = w(j)) seen[j] = 1;
  }
  return cycles;
}

int absolute_length_cycles(const Permutation& w) {
  return w.n() - cycle_count(w);
}

bool contains_pattern(const Permutation& w, const Permutation& p) {
  const int n = w.n(), m = p.n();
  if (m > n) return false;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int start) -> bool {
    const int got = static_cast<int>(chosen.size());
    if (got == m) return true;
    for (int i = start; i <= n - (m - got) + 1; ++i) {
      bool ok = true;
      for (int j = 0; j < got && ok; ++j)
        ok = (p(j + 1) < p(got + 1)) == (w(chosen[j]) < w(i));
      if (!ok) continue;
      chosen.push_back(i);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(rec, 1);
}

bool avoids_hlss_patterns(const Permutation& w) {
  static const char* bad[] = {"4231", "35142", "42513", "351624"};
  for (const char* s : bad)
    if (contains_pattern(w, Permutation::parse(s))) return false;
  return true;
}

namespace {

std::vector<std::vector<int>> rank_table(const Permutation& w) {
  const int n = w.n();
  std::vector<std::vector<int>> t(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      t[i][j] = t[i - 1][j] + (w(i) >= j);
  return t;
}

}  // namespace

bool dominance_leq(const Permutation& u, const Permutation& w) {
  auto tu = rank_table(u), tw = rank_table(w);
  for (int i = 1; i <= u.n(); ++i)
    for (int j = 1; j <= u.n(); ++j)
      if (tu[i][j] > tw[i][j]) return false;
  return true;
}

std::vector<std::pair<int, int>> diagram(const Permutation& w) {
  std::vector<std::pair<int, int>> d;
  for (int i = 1; i <= w.n(); ++i) d.emplace_back(i, w(i));
  return d;
}

RightHull right_hull(const Permutation& w) {
  const int n = w.n();
  std::vector<int> prefix_max(n + 1, 0), suffix_min(n + 2, n + 1);
  for (int i = 1; i <= n; ++i)
    prefix_max[i] = std::max(prefix_max[i - 1], w(i));
  for (int i = n; i >= 1; --i)
    suffix_min[i] = std::min(suffix_min[i + 1], w(i));

  RightHull h;
  h.n = n;
  h.cells.assign(n * n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      bool upper_right = prefix_max[i] >= j;  // some x <= i with w(x) >= j
      bool lower_left = suffix_min[i] <= j;   // some x >= i with w(x) <= j
      h.cells[(i - 1) * n + (j - 1)] = upper_right && lower_left;
    }
  }
  return h;
}

bool has_right_hull_property(const Permutation& w) {
  const int n = w.n();
  RightHull hull = right_hull(w);
  Permutation u = Permutation::identity(n);
  do {
    bool in_hull = true;
    for (int i = 1; i <= n && in_hull; ++i) in_hull = hull.contains(i, u(i));
    if (in_hull != dominance_leq(u, w)) return false;
  } while (std::next_permutation(u.oneline.begin(), u.oneline.end()));
  return true;
}

namespace {

void require_type_a(const CoxeterSystem& sys, int n) {
  if (sys.datum().kind != Kind::A || sys.rank() != n - 1)
    throw Error("realization needs the type A system of rank " +
                std::to_string(n - 1));
}

}  // namespace

Element realize(const CoxeterSystem& sys, const Permutation& w) {
  require_type_a(sys, w.n());
  std::vector<int> word;
  Permutation cur = w;
  bool descending = true;
  while (descending) {
    descending = false;
    for (int i = 1; i < cur.n(); ++i) {
      if (cur(i) > cur(i + 1)) {
        word.push_back(i - 1);
        std::swap(cur.oneline[i - 1], cur.oneline[i]);
        descending = true;
        break;
      }
    }
  }
  return sys.evaluate_word(word);
}

Permutation unrealize(const CoxeterSystem& sys, const Element& w) {
  const int n = sys.rank() + 1;
  Permutation p = Permutation::identity(n);
  for (int g : sys.reduced_word(w))
    p = compose(p, adjacent_transposition(n, g + 1));
  return p;
}

CollectionCheck check_collection(const Permutation& w,
                                 const CoxeterSystem& sys) {
  CollectionCheck out;
  if (w.n() == 1) {
    out.regions_eq_interval = out.right_hull_prop = out.avoids_patterns =
        out.distance_cond = true;
    return out;
  }
  require_type_a(sys, w.n());
  Element elem = realize(sys, w);
  BruhatInterval iv = ideal(sys, elem);
  NBCFamily family = nbc_sets(inversion_arrangement(sys, elem));
  out.regions_eq_interval = family.size() == iv.size();
  out.right_hull_prop = has_right_hull_property(w);
  out.avoids_patterns = avoids_hlss_patterns(w);
  out.distance_cond = distance_condition(sys, elem);
  return out;
}

}  // namespace invarr
