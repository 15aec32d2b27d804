#include "invarr/scan.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <thread>

namespace invarr {

std::string element_form(const CoxeterSystem& sys, const Element& w) {
  if (sys.datum().kind == Kind::A) return unrealize(sys, w).str();
  if (w.is_identity()) return "e";
  std::string out;
  for (int g : sys.reduced_word(w)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(g + 1);
  }
  return out;
}

ScanRecord scan_element(const CoxeterSystem& sys, ElementId id, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  const Element& w = sys.element(id);

  ScanRecord rec;
  rec.group = sys.datum().name();
  rec.index = id;
  rec.form = element_form(sys, w);
  rec.length = sys.coxeter_length(w);
  rec.abs_length = sys.absolute_length_bfs(w);

  BruhatGraph graph = bruhat_graph(sys, w);
  rec.interval_size = static_cast<long long>(graph.interval.size());
  rec.distance_cond = distance_condition(graph);
  rec.regular_bg = is_regular_bg(graph);
  rec.has_rhombus = !broken_rhombi(graph).empty();

  InversionArrangement arr = inversion_arrangement(sys, w);
  rec.nbc_count = static_cast<long long>(nbc_sets(arr).size());
  rec.region_count = region_count_charpoly(arr);
  rec.star = rec.nbc_count == rec.interval_size;

  if (sys.datum().kind == Kind::A) {
    Permutation p = unrealize(sys, w);
    rec.right_hull_prop = has_right_hull_property(p);
    rec.avoids_patterns = avoids_hlss_patterns(p);
  }

  auto demand = [&](bool ok, const char* what) {
    if (!ok)
      throw VerificationError(rec.group + " element " + rec.form +
                              ": record identity failed: " + what);
  };
  demand(rec.nbc_count == rec.region_count, "#NBC == region oracle");
  demand(rec.star == rec.distance_cond, "star <-> distance condition");
  demand(rec.has_rhombus == !rec.regular_bg, "rhombi <-> regularity");
  demand(!rec.regular_bg || rec.star, "regular implies star");
  if (rec.right_hull_prop) {
    demand(*rec.right_hull_prop == rec.star, "right hull <-> star");
    demand(*rec.avoids_patterns == rec.star, "pattern avoidance <-> star");
  }

  if (timing) {
    rec.timing_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  }
  return rec;
}

std::vector<ScanRecord> scan_group(const CoxeterSystem& sys,
                                   const ScanOptions& opts) {
  std::vector<ScanRecord> records(sys.order());
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (ElementId id = 0; id < sys.order(); ++id)
      records[id] = scan_element(sys, id, opts.timings);
    return records;
  }
  std::atomic<ElementId> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    try {
      while (true) {
        ElementId id = next.fetch_add(1);
        if (id >= sys.order()) break;
        records[id] = scan_element(sys, id, opts.timings);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::string SuiteResult::summary() const {
  std::string out = suite + " [" + subject + "]: " +
                    std::to_string(checked) + " checked, " +
                    std::to_string(violations) + " violations";
  for (const auto& n : notes) out += "\n  note: " + n;
  return out;
}

namespace {

SuiteResult make_result(const std::string& suite, const CoxeterSystem& sys) {
  SuiteResult r;
  r.suite = suite;
  r.subject = sys.datum().name();
  return r;
}

}  // namespace

SuiteResult verify_aprime(const CoxeterSystem& sys) {
  SuiteResult r = make_result("aprime", sys);
  for (ElementId id = 0; id < sys.order(); ++id) {
    PhiCheck pc = phi_check(inversion_arrangement(sys, sys.element(id)));
    ++r.checked;
    if (!pc.well_defined || !pc.injective) {
      ++r.violations;
      r.notes.push_back("phi not injective/well-defined at " +
                        element_form(sys, sys.element(id)));
    }
  }
  return r;
}

SuiteResult verify_th_main(const CoxeterSystem& sys) {
  SuiteResult r = make_result("th-main", sys);
  for (ElementId id = 0; id < sys.order(); ++id) {
    const Element& w = sys.element(id);
    bool surjective = phi_check(inversion_arrangement(sys, w)).surjective;
    bool dc = distance_condition(sys, w);
    ++r.checked;
    if (surjective != dc) {
      ++r.violations;
      r.notes.push_back("surjectivity/distance mismatch at " +
                        element_form(sys, w));
    }
  }
  return r;
}

SuiteResult verify_carter(const CoxeterSystem& sys) {
  SuiteResult r = make_result("carter", sys);
  const bool type_a = sys.datum().kind == Kind::A;
  for (ElementId id = 0; id < sys.order(); ++id) {
    const Element& w = sys.element(id);
    int bfs = sys.absolute_length_bfs(w);
    int carter = sys.absolute_length_carter(w);
    bool ok = bfs == carter;
    if (ok && type_a) ok = bfs == absolute_length_cycles(unrealize(sys, w));
    ++r.checked;
    if (!ok) {
      ++r.violations;
      r.notes.push_back("absolute length mismatch at " +
                        element_form(sys, w));
    }
  }
  return r;
}

SuiteResult verify_rhombi(const CoxeterSystem& sys) {
  SuiteResult r = make_result("rhombi", sys);
  for (ElementId id = 0; id < sys.order(); ++id) {
    BruhatGraph g = bruhat_graph(sys, sys.element(id));
    bool no_rhombi = broken_rhombi(g).empty();
    bool regular = is_regular_bg(g);
    ++r.checked;
    if (no_rhombi != regular) {
      ++r.violations;
      r.notes.push_back("rhombi/regularity mismatch at " +
                        element_form(sys, sys.element(id)));
    }
  }
  return r;
}

SuiteResult verify_corollary(const CoxeterSystem& sys) {
  SuiteResult r = make_result("corollary", sys);
  for (ElementId id = 0; id < sys.order(); ++id) {
    const Element& w = sys.element(id);
    if (!is_regular_bg(sys, w)) continue;
    bool surjective = phi_check(inversion_arrangement(sys, w)).surjective;
    ++r.checked;
    if (!surjective) {
      ++r.violations;
      r.notes.push_back("regular but phi not surjective at " +
                        element_form(sys, w));
    }
  }
  return r;
}

SuiteResult verify_path(const CoxeterSystem& sys) {
  SuiteResult r = make_result("path", sys);
  for (ElementId ui = 0; ui < sys.order(); ++ui) {
    const Element& u = sys.element(ui);
    for (ElementId wi = 0; wi < sys.order(); ++wi) {
      const Element& w = sys.element(wi);
      ++r.checked;
      try {
        Element v = meet_point(sys, u, w);
        int target = sys.absolute_length_bfs(multiply(u, inverse(w)));
        bool ok = bruhat_leq(sys, v, u) && bruhat_leq(sys, v, w);
        auto dvu = directed_distance(sys, v, u);
        auto dvw = directed_distance(sys, v, w);
        ok = ok && dvu && dvw && *dvu + *dvw == target;
        if (!ok) {
          ++r.violations;
          r.notes.push_back("bad meeting point for pair (" +
                            element_form(sys, u) + ", " +
                            element_form(sys, w) + ")");
        }
      } catch (const SearchExhausted&) {
        ++r.violations;
        r.notes.push_back("no meeting point for pair (" +
                          element_form(sys, u) + ", " + element_form(sys, w) +
                          ")");
      }
    }
  }
  return r;
}

SuiteResult verify_oracles(const CoxeterSystem& sys, WordStrategy strategy,
                           std::uint64_t seed, std::size_t word_cap) {
  SuiteResult r = make_result("oracles", sys);
  std::mt19937_64 rng(seed);
  for (ElementId id = 0; id < sys.order(); ++id) {
    const Element& w = sys.element(id);
    InversionArrangement arr = inversion_arrangement(sys, w);
    const long long nbc = static_cast<long long>(nbc_sets(arr).size());
    ++r.checked;
    bool ok = nbc == region_count_charpoly(arr);

    if (ok && strategy == WordStrategy::All) {
      std::vector<std::vector<int>> words;
      if (!sys.enumerate_reduced_words(w, word_cap, words))
        r.notes.push_back("word enumeration capped at " +
                          std::to_string(word_cap) + " for " +
                          element_form(sys, w));
      for (const auto& word : words) {
        if (static_cast<long long>(
                nbc_sets(inversion_arrangement(sys, w, word)).size()) != nbc) {
          ok = false;
          break;
        }
      }
    } else if (ok && strategy == WordStrategy::Sample) {
      for (int trial = 0; trial < 10 && ok; ++trial) {
        std::vector<int> word;
        Element cur = w;
        while (!cur.is_identity()) {
          std::vector<int> descents;
          for (int g = 0; g < sys.rank(); ++g)
            if (sys.is_left_descent(g, cur)) descents.push_back(g);
          int g = descents[rng() % descents.size()];
          word.push_back(g);
          cur = multiply(sys.generator(g), cur);
        }
        ok = static_cast<long long>(
                 nbc_sets(inversion_arrangement(sys, w, word)).size()) == nbc;
      }
    }
    if (!ok) {
      ++r.violations;
      r.notes.push_back("oracle disagreement at " + element_form(sys, w));
    }
  }
  return r;
}

SuiteResult verify_collection(int n, std::size_t cap) {
  SuiteResult r;
  r.suite = "collection";
  r.subject = "S" + std::to_string(n);
  if (n < 2) {
    r.checked = 1;
    return r;
  }
  CoxeterSystem sys = CoxeterSystem::build(CoxeterDatum::of(Kind::A, n - 1), cap);
  for (ElementId id = 0; id < sys.order(); ++id) {
    Permutation p = unrealize(sys, sys.element(id));
    CollectionCheck c = check_collection(p, sys);
    ++r.checked;
    if (!c.all_agree()) {
      ++r.violations;
      r.notes.push_back("collection mismatch at " + p.str());
    }
  }
  return r;
}

}  // namespace invarr
