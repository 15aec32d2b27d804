#include "invarr/coxeter.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace invarr {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::A: return "A";
    case Kind::B: return "B";
    case Kind::D: return "D";
    case Kind::E6: return "E6";
    case Kind::E7: return "E7";
    case Kind::E8: return "E8";
    case Kind::F4: return "F4";
    case Kind::G2: return "G2";
    case Kind::H3: return "H3";
    case Kind::H4: return "H4";
    case Kind::I2: return "I2";
  }
  return "?";
}

std::optional<Kind> kind_from_string(const std::string& s) {
  static const std::pair<const char*, Kind> table[] = {
      {"A", Kind::A},   {"B", Kind::B},   {"D", Kind::D},
      {"E6", Kind::E6}, {"E7", Kind::E7}, {"E8", Kind::E8},
      {"F4", Kind::F4}, {"G2", Kind::G2}, {"H3", Kind::H3},
      {"H4", Kind::H4}, {"I2", Kind::I2}};
  for (const auto& [name, kind] : table)
    if (s == name) return kind;
  return std::nullopt;
}

CoxeterDatum CoxeterDatum::of(Kind kind, int rank) {
  CoxeterDatum d;
  d.kind = kind;
  d.rank = rank;
  d.validate();
  return d;
}

CoxeterDatum CoxeterDatum::dihedral(int m) {
  CoxeterDatum d;
  d.kind = Kind::I2;
  d.rank = 2;
  d.m = m;
  d.validate();
  return d;
}

void CoxeterDatum::validate() const {
  auto fail = [&](const std::string& why) {
    throw InvalidDatum(name() + ": " + why);
  };
  switch (kind) {
    case Kind::A:
      if (rank < 1) fail("rank must be >= 1");
      break;
    case Kind::B:
      if (rank < 2) fail("rank must be >= 2");
      break;
    case Kind::D:
      if (rank < 3) fail("rank must be >= 3");
      break;
    case Kind::E6:
      if (rank != 6) fail("rank must be 6");
      break;
    case Kind::E7:
      if (rank != 7) fail("rank must be 7");
      break;
    case Kind::E8:
      if (rank != 8) fail("rank must be 8");
      break;
    case Kind::F4:
      if (rank != 4) fail("rank must be 4");
      break;
    case Kind::G2:
      if (rank != 2) fail("rank must be 2");
      break;
    case Kind::H3:
      if (rank != 3) fail("rank must be 3");
      break;
    case Kind::H4:
      if (rank != 4) fail("rank must be 4");
      break;
    case Kind::I2:
      if (rank != 2) fail("rank must be 2");
      if (m < 3) fail("dihedral order m must be >= 3");
      break;
  }
}

unsigned long long CoxeterDatum::predicted_order() const {
  auto factorial = [](int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (kind) {
    case Kind::A: return factorial(rank + 1);
    case Kind::B: return (1ull << rank) * factorial(rank);
    case Kind::D: return (1ull << (rank - 1)) * factorial(rank);
    case Kind::E6: return 51840ull;
    case Kind::E7: return 2903040ull;
    case Kind::E8: return 696729600ull;
    case Kind::F4: return 1152ull;
    case Kind::G2: return 12ull;
    case Kind::H3: return 120ull;
    case Kind::H4: return 14400ull;
    case Kind::I2: return 2ull * m;
  }
  return 0;
}

int CoxeterDatum::predicted_positive_roots() const {
  switch (kind) {
    case Kind::A: return rank * (rank + 1) / 2;
    case Kind::B: return rank * rank;
    case Kind::D: return rank * (rank - 1);
    case Kind::E6: return 36;
    case Kind::E7: return 63;
    case Kind::E8: return 120;
    case Kind::F4: return 24;
    case Kind::G2: return 6;
    case Kind::H3: return 15;
    case Kind::H4: return 60;
    case Kind::I2: return m;
  }
  return 0;
}

std::string CoxeterDatum::name() const {
  switch (kind) {
    case Kind::A:
    case Kind::B:
    case Kind::D:
      return kind_name(kind) + std::to_string(rank);
    case Kind::I2:
      return "I2(" + std::to_string(m) + ")";
    default:
      return kind_name(kind);
  }
}

Element multiply(const Element& x, const Element& y) {
  Element r;
  const std::size_t n = x.perm.size();
  r.perm.resize(n);
  int neg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::int16_t v = y.apply(x.perm[i]);
    r.perm[i] = v;
    neg += v < 0;
  }
  r.len = neg;
  return r;
}

Element inverse(const Element& x) {
  Element r;
  const std::size_t n = x.perm.size();
  r.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int16_t v = x.perm[i];
    std::int16_t src = static_cast<std::int16_t>(i + 1);
    if (v > 0)
      r.perm[v - 1] = src;
    else
      r.perm[-v - 1] = static_cast<std::int16_t>(-src);
  }
  r.len = x.len;
  return r;
}

// ---------------------------------------------------------------------------
// Dihedral model

namespace {

std::int16_t slot_image(int r, int m) {
  // r is an angle index in [0, 2m); values >= m are negatives.
  return r < m ? static_cast<std::int16_t>(r + 1)
               : static_cast<std::int16_t>(-(r - m + 1));
}

}  // namespace

Element DihedralModel::reflection_at_slot(int p) const {
  Element e;
  e.perm.resize(m);
  int neg = 0;
  for (int q = 0; q < m; ++q) {
    std::int16_t v = slot_image((2 * p + m - q) % (2 * m), m);
    e.perm[q] = v;
    neg += v < 0;
  }
  e.len = neg;
  return e;
}

Element DihedralModel::rotation(int k) const {
  k = ((k % m) + m) % m;
  Element e;
  e.perm.resize(m);
  int neg = 0;
  for (int q = 0; q < m; ++q) {
    std::int16_t v = slot_image((q + 2 * k) % (2 * m), m);
    e.perm[q] = v;
    neg += v < 0;
  }
  e.len = neg;
  return e;
}

DihedralModel::Decoded DihedralModel::decode(const Element& w) const {
  for (int k = 0; k < m; ++k)
    if (rotation(k) == w) return {k, false};
  for (int p = 0; p < m; ++p)
    if (reflection_at_slot(p) == w) return {p, true};
  throw Error("element does not belong to this dihedral model");
}

int DihedralModel::root_rank(const std::vector<RootIndex>& roots) const {
  std::set<int> distinct;
  for (RootIndex r : roots) distinct.insert(std::abs(r));
  return static_cast<int>(std::min<std::size_t>(distinct.size(), 2));
}

// ---------------------------------------------------------------------------
// System construction

namespace {

std::vector<std::vector<Scalar>> cartan_matrix(const CoxeterDatum& d) {
  const int n = d.rank;
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n, Scalar(0)));
  for (int i = 0; i < n; ++i) a[i][i] = Scalar(2);
  auto bond = [&](int i, int j, Scalar aij, Scalar aji) {
    a[i][j] = std::move(aij);
    a[j][i] = std::move(aji);
  };
  const Scalar minus_tau = -Scalar::tau();
  switch (d.kind) {
    case Kind::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case Kind::B:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 2, n - 1, -1, -2);
      break;
    case Kind::D:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 3, n - 1, -1, -1);
      break;
    case Kind::E6:
    case Kind::E7:
    case Kind::E8: {
      // Bourbaki numbering: a path 1-3-4-5-6(-7)(-8) with 2 attached to 4.
      bond(0, 2, -1, -1);
      bond(1, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      break;
    }
    case Kind::F4:
      bond(0, 1, -1, -1);
      bond(1, 2, -1, -2);
      bond(2, 3, -1, -1);
      break;
    case Kind::G2:
      bond(0, 1, -1, -3);
      break;
    case Kind::H3:
    case Kind::H4:
      bond(0, 1, minus_tau, minus_tau);
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case Kind::I2:
      throw Error("I2 has no Cartan realization here");
  }
  return a;
}

int first_nonzero_sign(const Vec& v) {
  for (const Scalar& x : v) {
    int s = x.sign();
    if (s != 0) return s;
  }
  return 0;
}

Vec negated(const Vec& v) {
  Vec out;
  out.reserve(v.size());
  for (const Scalar& x : v) out.push_back(-x);
  return out;
}

}  // namespace

CoxeterSystem CoxeterSystem::build(const CoxeterDatum& datum, std::size_t cap) {
  datum.validate();
  const unsigned long long predicted = datum.predicted_order();
  if (predicted > cap)
    throw CapExceeded(datum.name() + " has " + std::to_string(predicted) +
                      " elements, cap is " + std::to_string(cap));
  CoxeterSystem sys;
  sys.datum_ = datum;
  if (datum.uses_coordinates())
    sys.build_roots_and_generators();
  else
    sys.build_dihedral_generators();
  sys.enumerate_elements(cap);
  sys.find_reflections();
  sys.build_absolute_lengths();
  return sys;
}

void CoxeterSystem::build_roots_and_generators() {
  const int n = datum_.rank;
  const auto cartan = cartan_matrix(datum_);

  auto act = [&](int g, const Vec& v) {
    Vec out = v;
    Scalar dot(0);
    for (int k = 0; k < n; ++k) dot += cartan[g][k] * v[k];
    out[g] = v[g] - dot;
    return out;
  };

  std::set<Vec> all;
  std::vector<Vec> work;
  for (int i = 0; i < n; ++i) {
    Vec e(n, Scalar(0));
    e[i] = Scalar(1);
    all.insert(e);
    work.push_back(std::move(e));
  }
  while (!work.empty()) {
    Vec v = std::move(work.back());
    work.pop_back();
    for (int g = 0; g < n; ++g) {
      Vec u = act(g, v);
      if (all.insert(u).second) work.push_back(std::move(u));
    }
  }

  std::vector<Vec> positives;
  for (const Vec& v : all) {
    bool nonneg = true;
    for (const Scalar& x : v) nonneg = nonneg && x.sign() >= 0;
    if (nonneg) positives.push_back(v);
  }
  if (2 * positives.size() != all.size())
    throw VerificationError(datum_.name() + ": root closure is not symmetric");

  auto height = [](const Vec& v) {
    Scalar h(0);
    for (const Scalar& x : v) h += x;
    return h;
  };
  std::sort(positives.begin(), positives.end(),
            [&](const Vec& x, const Vec& y) {
              Scalar hx = height(x), hy = height(y);
              if (hx != hy) return hx < hy;
              return x < y;
            });

  nroots_ = static_cast<int>(positives.size());
  if (nroots_ != datum_.predicted_positive_roots())
    throw VerificationError(datum_.name() + ": unexpected positive root count " +
                            std::to_string(nroots_));
  pos_roots_ = std::move(positives);

  std::map<Vec, RootIndex> index;
  for (int r = 0; r < nroots_; ++r) index[pos_roots_[r]] = r + 1;

  auto signed_index = [&](const Vec& v) -> std::int16_t {
    int s = first_nonzero_sign(v);
    const Vec& key = s >= 0 ? v : negated(v);
    auto it = index.find(key);
    if (it == index.end())
      throw VerificationError(datum_.name() + ": image is not a root");
    return static_cast<std::int16_t>(s >= 0 ? it->second : -it->second);
  };

  simple_root_idx_.resize(n);
  for (int i = 0; i < n; ++i) {
    Vec e(n, Scalar(0));
    e[i] = Scalar(1);
    simple_root_idx_[i] = index.at(e);
  }

  generators_.clear();
  for (int g = 0; g < n; ++g) {
    Element s;
    s.perm.resize(nroots_);
    int neg = 0;
    for (int r = 0; r < nroots_; ++r) {
      std::int16_t v = signed_index(act(g, pos_roots_[r]));
      s.perm[r] = v;
      neg += v < 0;
    }
    s.len = neg;
    if (s.len != 1)
      throw VerificationError(datum_.name() + ": generator is not simple");
    generators_.push_back(std::move(s));
  }
}

void CoxeterSystem::build_dihedral_generators() {
  dihedral_ = DihedralModel{datum_.m};
  nroots_ = datum_.m;
  generators_ = {dihedral_->reflection_at_slot(0),
                 dihedral_->reflection_at_slot(datum_.m - 1)};
}

void CoxeterSystem::enumerate_elements(std::size_t cap) {
  Element id;
  id.perm.resize(nroots_);
  std::iota(id.perm.begin(), id.perm.end(), std::int16_t{1});
  id.len = 0;

  elements_.clear();
  index_.clear();
  word_len_.clear();
  index_.emplace(id, 0);
  elements_.push_back(std::move(id));
  word_len_.push_back(0);

  for (ElementId i = 0; i < elements_.size(); ++i) {
    for (const Element& g : generators_) {
      Element y = multiply(elements_[i], g);
      auto [it, fresh] = index_.emplace(std::move(y), elements_.size());
      if (!fresh) continue;
      if (elements_.size() >= cap)
        throw CapExceeded(datum_.name() + ": enumeration exceeded cap");
      // BFS depth is the word metric; it must match the inversion count.
      if (it->first.len != word_len_[i] + 1)
        throw VerificationError(datum_.name() + ": length bookkeeping broke");
      elements_.push_back(it->first);
      word_len_.push_back(word_len_[i] + 1);
    }
  }
  if (elements_.size() != datum_.predicted_order())
    throw VerificationError(datum_.name() + ": group order came out as " +
                            std::to_string(elements_.size()));

  ElementId top = 0;
  int count = 0;
  for (ElementId i = 0; i < elements_.size(); ++i) {
    if (elements_[i].len == nroots_) {
      top = i;
      ++count;
    }
  }
  if (count != 1)
    throw VerificationError(datum_.name() + ": longest element is not unique");
  w0_ = top;
}

void CoxeterSystem::find_reflections() {
  reflections_.assign(nroots_, Element{});
  std::vector<char> have(nroots_, 0);
  is_refl_by_id_.assign(elements_.size(), 0);

  auto root_of = [&](const Element& t) -> RootIndex {
    RootIndex r = 0;
    int hits = 0;
    for (int i = 0; i < nroots_; ++i) {
      if (t.perm[i] == -(i + 1)) {
        r = i + 1;
        ++hits;
      }
    }
    if (hits != 1)
      throw VerificationError(datum_.name() +
                              ": conjugate does not negate a unique root");
    return r;
  };

  std::vector<Element> work;
  auto admit = [&](const Element& t) {
    RootIndex r = root_of(t);
    if (have[r - 1]) return;
    have[r - 1] = 1;
    reflections_[r - 1] = t;
    is_refl_by_id_[id_of(t)] = 1;
    work.push_back(t);
  };
  for (const Element& g : generators_) admit(g);
  while (!work.empty()) {
    Element t = std::move(work.back());
    work.pop_back();
    for (const Element& g : generators_)
      admit(multiply(multiply(g, t), g));
  }
  for (char h : have)
    if (!h)
      throw VerificationError(datum_.name() +
                              ": reflections do not exhaust the roots");
}

void CoxeterSystem::build_absolute_lengths() {
  abs_len_.assign(elements_.size(), -1);
  abs_len_[0] = 0;
  std::vector<ElementId> frontier{0};
  while (!frontier.empty()) {
    std::vector<ElementId> next;
    for (ElementId x : frontier) {
      for (const Element& t : reflections_) {
        ElementId y = id_of(multiply(elements_[x], t));
        if (abs_len_[y] == -1) {
          abs_len_[y] = abs_len_[x] + 1;
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  for (int d : abs_len_)
    if (d < 0)
      throw VerificationError(datum_.name() + ": T does not generate W");
}

ElementId CoxeterSystem::id_of(const Element& w) const {
  auto it = index_.find(w);
  if (it == index_.end())
    throw Error("element does not belong to this Coxeter system");
  return it->second;
}

bool CoxeterSystem::is_reflection(const Element& w) const {
  return is_refl_by_id_[id_of(w)] != 0;
}

RootIndex CoxeterSystem::root_of_reflection(const Element& t) const {
  if (!is_reflection(t)) throw Error("element is not a reflection");
  for (int i = 0; i < nroots_; ++i)
    if (t.perm[i] == -(i + 1)) return i + 1;
  throw VerificationError("reflection without a negated root");
}

bool CoxeterSystem::is_left_descent(int gen, const Element& w) const {
  return multiply(generators_[gen], w).len < w.len;
}

std::vector<int> CoxeterSystem::reduced_word(const Element& w) const {
  std::vector<int> out;
  Element cur = w;
  while (!cur.is_identity()) {
    bool found = false;
    for (int g = 0; g < rank(); ++g) {
      Element y = multiply(generators_[g], cur);
      if (y.len < cur.len) {
        out.push_back(g);
        cur = std::move(y);
        found = true;
        break;
      }
    }
    if (!found) throw VerificationError("no descent found below the identity");
  }
  return out;
}

bool CoxeterSystem::enumerate_reduced_words(
    const Element& w, std::size_t cap, std::vector<std::vector<int>>& out) const {
  out.clear();
  std::vector<int> stack;
  bool complete = true;
  auto rec = [&](auto&& self, const Element& cur) -> bool {
    if (cur.is_identity()) {
      out.push_back(stack);
      if (out.size() >= cap) {
        complete = false;
        return false;
      }
      return true;
    }
    for (int g = 0; g < rank(); ++g) {
      Element y = multiply(generators_[g], cur);
      if (y.len >= cur.len) continue;
      stack.push_back(g);
      bool keep = self(self, y);
      stack.pop_back();
      if (!keep) return false;
    }
    return true;
  };
  rec(rec, w);
  return complete;
}

Element CoxeterSystem::evaluate_word(const std::vector<int>& word) const {
  Element acc = identity();
  for (int g : word) {
    if (g < 0 || g >= rank()) throw Error("generator index out of range");
    acc = multiply(acc, generators_[g]);
  }
  return acc;
}

std::vector<CoxeterSystem::Inversion> CoxeterSystem::inversions(
    const Element& w, const std::vector<int>& word) const {
  if (static_cast<int>(word.size()) != w.len)
    throw NotReduced("word length " + std::to_string(word.size()) +
                     " differs from Coxeter length " + std::to_string(w.len));
  std::vector<Inversion> out;
  out.reserve(word.size());
  Element prefix = identity();
  for (int g : word) {
    Element t = multiply(multiply(prefix, generators_[g]), inverse(prefix));
    prefix = multiply(prefix, generators_[g]);
    out.push_back({root_of_reflection(t), std::move(t)});
  }
  if (!(prefix == w))
    throw NotReduced("word does not evaluate to the given element");
  return out;
}

int CoxeterSystem::absolute_length_carter(const Element& w) const {
  if (dihedral_) {
    auto d = dihedral_->decode(w);
    if (d.reflection) return 1;
    return d.k == 0 ? 0 : 2;
  }
  const int n = rank();
  std::vector<Vec> rows(n, Vec(n, Scalar(0)));
  for (int j = 0; j < n; ++j) {
    std::int16_t img = w.apply(static_cast<std::int16_t>(simple_root_idx_[j]));
    Vec col =
        img > 0 ? pos_roots_[img - 1] : negated(pos_roots_[-img - 1]);
    for (int i = 0; i < n; ++i) {
      rows[i][j] = (i == j ? Scalar(1) : Scalar(0)) - col[i];
    }
  }
  return bareiss_rank(std::move(rows));
}

int CoxeterSystem::root_rank(const std::vector<RootIndex>& roots) const {
  if (dihedral_) return dihedral_->root_rank(roots);
  std::vector<Vec> rows;
  rows.reserve(roots.size());
  for (RootIndex r : roots) rows.push_back(pos_roots_[std::abs(r) - 1]);
  return bareiss_rank(std::move(rows));
}

bool CoxeterSystem::independent_roots(const std::vector<Element>& ts) const {
  std::vector<RootIndex> roots;
  roots.reserve(ts.size());
  for (const Element& t : ts) roots.push_back(root_of_reflection(t));
  return root_rank(roots) == static_cast<int>(ts.size());
}

std::vector<Vec> CoxeterSystem::matrix_of(const Element& w) const {
  if (!has_coordinates())
    throw Error("no coordinate realization for " + datum_.name());
  const int n = rank();
  std::vector<Vec> cols;
  cols.reserve(n);
  for (int j = 0; j < n; ++j) {
    std::int16_t img = w.apply(static_cast<std::int16_t>(simple_root_idx_[j]));
    cols.push_back(img > 0 ? pos_roots_[img - 1] : negated(pos_roots_[-img - 1]));
  }
  return cols;
}

}  // namespace invarr
