#include "invarr/arrangement.hpp"

#include <algorithm>
#include <unordered_set>

namespace invarr {

namespace {

constexpr int kMaxHyperplanes = 22;

using Mask = std::uint32_t;

std::vector<int> mask_to_positions(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i + 1);
  return out;
}

void sort_family(std::vector<std::vector<int>>& sets) {
  std::sort(sets.begin(), sets.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
}

}  // namespace

InversionArrangement inversion_arrangement(const CoxeterSystem& sys,
                                           const Element& w,
                                           const std::vector<int>& word) {
  InversionArrangement arr;
  arr.sys = &sys;
  arr.w = w;
  arr.word = word;
  for (auto& inv : sys.inversions(w, word)) {
    arr.roots.push_back(inv.root);
    arr.reflections.push_back(std::move(inv.t));
  }
  return arr;
}

InversionArrangement inversion_arrangement(const CoxeterSystem& sys,
                                           const Element& w) {
  return inversion_arrangement(sys, w, sys.reduced_word(w));
}

std::vector<Circuit> circuits(const InversionArrangement& arr) {
  const int k = arr.size();
  if (k > kMaxHyperplanes)
    throw TooManyHyperplanes("arrangement has " + std::to_string(k) +
                             " hyperplanes, subset sweep cap is " +
                             std::to_string(kMaxHyperplanes));
  const CoxeterSystem& sys = *arr.sys;
  const int max_size = std::min(k, sys.rank() + 1);

  std::vector<Circuit> out;
  std::vector<Mask> masks;
  std::vector<RootIndex> selection;

  for (int m = 2; m <= max_size; ++m) {
    // Lexicographic m-combinations of positions 0..k-1.
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    while (true) {
      Mask mask = 0;
      for (int i : idx) mask |= Mask{1} << i;
      bool has_smaller = false;
      for (Mask c : masks)
        if ((mask & c) == c) {
          has_smaller = true;
          break;
        }
      if (!has_smaller) {
        selection.clear();
        for (int i : idx) selection.push_back(arr.roots[i]);
        if (sys.root_rank(selection) < m) {
          // Dependent with every proper subset independent: a circuit.
          masks.push_back(mask);
          Circuit c;
          for (int i : idx) c.positions.push_back(i + 1);
          out.push_back(std::move(c));
        }
      }
      int j = m - 1;
      while (j >= 0 && idx[j] == k - m + j) --j;
      if (j < 0) break;
      ++idx[j];
      for (int l = j + 1; l < m; ++l) idx[l] = idx[l - 1] + 1;
    }
  }
  return out;
}

NBCFamily nbc_sets_from_circuits(const InversionArrangement& arr,
                                 const std::vector<Circuit>& circs) {
  const int k = arr.size();
  if (k > kMaxHyperplanes)
    throw TooManyHyperplanes("arrangement too large for mask backtracking");

  // Broken circuits grouped by their largest position: adding position p
  // to a set completes the broken circuit bc exactly when p = max(bc) and
  // the rest of bc is already present.
  std::vector<std::vector<Mask>> rest_by_top(k);
  for (const Circuit& c : circs) {
    // Drop the LARGEST position of the circuit to form the broken circuit.
    Mask bc = 0;
    for (std::size_t i = 0; i + 1 < c.positions.size(); ++i)
      bc |= Mask{1} << (c.positions[i] - 1);
    int top = c.positions[c.positions.size() - 2] - 1;
    rest_by_top[top].push_back(bc & ~(Mask{1} << top));
  }

  std::vector<Mask> found;
  Mask cur = 0;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      found.push_back(cur);
      return;
    }
    self(self, pos + 1);
    for (Mask rest : rest_by_top[pos])
      if ((rest & ~cur) == 0) return;  // would contain a broken circuit
    cur |= Mask{1} << pos;
    self(self, pos + 1);
    cur &= ~(Mask{1} << pos);
  };
  rec(rec, 0);

  NBCFamily family;
  family.arr = arr;
  family.sets.reserve(found.size());
  for (Mask m : found) family.sets.push_back(mask_to_positions(m));
  sort_family(family.sets);
  return family;
}

NBCFamily nbc_sets(const InversionArrangement& arr) {
  const CoxeterSystem& sys = *arr.sys;
  if (sys.dihedral()) {
    // Rank-2 rule: circuits are exactly the 3-subsets, so the broken
    // circuits are the pairs {a, b} with b < k.  The family is the empty
    // set, the singletons and the pairs {a, k}: 2k sets for k >= 1.
    const int k = arr.size();
    NBCFamily family;
    family.arr = arr;
    family.sets.push_back({});
    for (int i = 1; i <= k; ++i) family.sets.push_back({i});
    for (int a = 1; a < k; ++a) family.sets.push_back({a, k});
    sort_family(family.sets);
    return family;
  }
  return nbc_sets_from_circuits(arr, circuits(arr));
}

bool NBCFamily::contains(const std::vector<int>& positions) const {
  auto cmp = [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  return std::binary_search(sets.begin(), sets.end(), positions, cmp);
}

long long region_count_charpoly(const InversionArrangement& arr) {
  const CoxeterSystem& sys = *arr.sys;
  const int k = arr.size();
  if (sys.dihedral()) {
    // chi(t) = t^2 - k t + (k - 1) for k >= 1 central lines in the plane,
    // by counting subsets per rank class; regions = chi(-1) = 2k.
    return k == 0 ? 1 : 2ll * k;
  }
  if (k > kMaxHyperplanes)
    throw TooManyHyperplanes("arrangement has " + std::to_string(k) +
                             " hyperplanes, Whitney sweep cap is " +
                             std::to_string(kMaxHyperplanes));
  // Whitney: regions = sum over subsets B of (-1)^{|B| + rank B}, which is
  // (-1)^d chi(-1) with d the ambient rank.
  std::vector<Vec> coords;
  coords.reserve(k);
  for (RootIndex r : arr.roots) coords.push_back(sys.root_coords(r));

  long long acc = 0;
  EchelonBasis basis(sys.rank());
  int picked = 0;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      acc += ((picked + basis.rank()) % 2 == 0) ? 1 : -1;
      return;
    }
    self(self, pos + 1);
    bool indep = basis.add(coords[pos]);
    ++picked;
    self(self, pos + 1);
    --picked;
    if (indep) basis.pop();
  };
  rec(rec, 0);
  return acc;
}

Element deletion_product(const InversionArrangement& arr,
                         const std::vector<int>& positions) {
  Element acc = arr.sys->identity();
  for (int p : positions) acc = multiply(acc, arr.reflections[p - 1]);
  return multiply(acc, arr.w);
}

Element phi(const NBCFamily& family, const std::vector<int>& positions) {
  if (!family.contains(positions)) throw NotNBC("position set is not NBC");
  return deletion_product(family.arr, positions);
}

PhiMap phi_map(NBCFamily family) {
  PhiMap map;
  map.images.reserve(family.sets.size());
  for (const auto& s : family.sets)
    map.images.push_back(deletion_product(family.arr, s));
  map.domain = std::move(family);
  return map;
}

PhiCheck phi_check(const InversionArrangement& arr) {
  const CoxeterSystem& sys = *arr.sys;
  PhiMap map = phi_map(nbc_sets(arr));
  BruhatInterval iv = ideal(sys, arr.w);

  PhiCheck out;
  out.well_defined = true;
  std::unordered_set<ElementId> images;
  for (const Element& img : map.images) {
    ElementId id = sys.id_of(img);
    out.well_defined = out.well_defined && iv.contains(id);
    images.insert(id);
  }
  out.injective = images.size() == map.images.size();
  out.surjective = images.size() == iv.size();
  return out;
}

std::vector<int> lexmax_preimage(const InversionArrangement& arr,
                                 const Element& u) {
  const CoxeterSystem& sys = *arr.sys;
  if (!bruhat_leq(sys, u, arr.w))
    throw PreconditionViolated("element is not below w");
  if (!distance_condition(sys, arr.w))
    throw PreconditionViolated("distance condition fails for w");

  Element g = multiply(u, inverse(arr.w));
  const int m = sys.absolute_length_bfs(g);
  std::vector<int> picked;  // i_m, i_{m-1}, ... while searching

  // Peel factorizations u w^-1 = t_{i_1} ... t_{i_m} from the right,
  // always trying the largest available position first; the first success
  // is the lex-max sequence (i_m, ..., i_1).  Prefixes of a valid
  // factorization step the absolute length down by exactly one, which
  // prunes hard.
  auto rec = [&](auto&& self, const Element& goal, int need, int hi) -> bool {
    if (need == 0) return goal.is_identity();
    for (int i = hi; i >= need; --i) {
      Element h = multiply(goal, arr.reflections[i - 1]);
      if (sys.absolute_length_bfs(h) != need - 1) continue;
      picked.push_back(i);
      if (self(self, h, need - 1, i - 1)) return true;
      picked.pop_back();
    }
    return false;
  };
  if (!rec(rec, g, m, arr.size()))
    throw SearchExhausted("no deletion sequence found; this is a bug");
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace invarr
