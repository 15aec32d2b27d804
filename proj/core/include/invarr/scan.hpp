#pragma once

// Whole-group scans and theorem verification suites.  A scan emits one
// record per element with every invariant cross-checked inside the record;
// the verify_* functions sweep a group (or S_n) and count violations of a
// single statement.  Both are pure and safe to run in parallel.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invarr/arrangement.hpp"
#include "invarr/bruhat.hpp"
#include "invarr/coxeter.hpp"
#include "invarr/typea.hpp"

namespace invarr {

// One-line notation for type A, concatenated 1-based reduced word
// otherwise ("e" for the identity).
std::string element_form(const CoxeterSystem& sys, const Element& w);

struct ScanRecord {
  std::string group;
  ElementId index = 0;
  std::string form;
  int length = 0;
  int abs_length = 0;
  long long interval_size = 0;
  long long nbc_count = 0;
  long long region_count = 0;
  bool star = false;           // #NBC == #[e, w]
  bool distance_cond = false;
  bool regular_bg = false;
  bool has_rhombus = false;
  std::optional<bool> right_hull_prop;  // type A only
  std::optional<bool> avoids_patterns;  // type A only
  double timing_ms = 0.0;
};

struct ScanOptions {
  int jobs = 1;
  bool timings = false;
};

// Throws VerificationError if any intra-record identity fails (star vs
// distance condition, NBC vs region oracle, rhombi vs regularity, and the
// type A pattern/hull equivalences).
ScanRecord scan_element(const CoxeterSystem& sys, ElementId id,
                        bool timing = false);

// One record per element in canonical order, regardless of jobs.
std::vector<ScanRecord> scan_group(const CoxeterSystem& sys,
                                   const ScanOptions& opts = {});

struct SuiteResult {
  std::string suite;
  std::string subject;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<std::string> notes;

  bool pass() const { return violations == 0; }
  std::string summary() const;
};

enum class WordStrategy { Canonical, All, Sample };

// phi is well defined and injective for every element.
SuiteResult verify_aprime(const CoxeterSystem& sys);
// phi surjective iff the distance condition holds, both directions.
SuiteResult verify_th_main(const CoxeterSystem& sys);
// BFS absolute length equals the fixed-space codimension; in type A also
// the cycle formula n - c(w).
SuiteResult verify_carter(const CoxeterSystem& sys);
// No broken rhombi iff bg(w) is regular.
SuiteResult verify_rhombi(const CoxeterSystem& sys);
// bg(w) regular implies phi surjective.
SuiteResult verify_corollary(const CoxeterSystem& sys);
// Meeting points exist with the exact distance sum, all ordered pairs.
SuiteResult verify_path(const CoxeterSystem& sys);
// |NBC| equals the Whitney region count, and is invariant across reduced
// words (all words up to word_cap, or a seeded sample).
SuiteResult verify_oracles(const CoxeterSystem& sys,
                           WordStrategy strategy = WordStrategy::Canonical,
                           std::uint64_t seed = 0,
                           std::size_t word_cap = 10000);
// The four conditions of the type A collection agree on all of S_n.
SuiteResult verify_collection(int n, std::size_t cap = CoxeterSystem::kDefaultCap);

}  // namespace invarr
