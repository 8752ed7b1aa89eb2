// Copyright 2026 The Braid3 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "braid3/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "braid3/conjugacy.hpp"
#include "braid3/enumerate.hpp"
#include "braid3/normal_form.hpp"
#include "braid3/structure.hpp"
#include "parallel.hpp"

namespace braid3 {
namespace {

struct PerLength {
  long long instances = 0;
  std::vector<std::string> failures;
};

using LengthCheck = std::function<PerLength(int, std::size_t)>;

SuiteResult run_by_length(std::string_view name, int max_len, std::size_t cap,
                          int threads, const LengthCheck& check) {
  SuiteResult result;
  result.suite = name;
  result.max_len = max_len;
  auto rows = detail::map_lengths<PerLength>(
      0, max_len, threads, [&](int n) { return check(n, cap); });
  for (PerLength& row : rows) {
    result.instances_checked += row.instances;
    result.failures.insert(result.failures.end(),
                           std::make_move_iterator(row.failures.begin()),
                           std::make_move_iterator(row.failures.end()));
  }
  return result;
}

std::string join_forms(const std::vector<NormalForm>& forms) {
  std::string s = "{";
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (i) s += ", ";
    s += forms[i].str();
  }
  return s + "}";
}

// Brute-force conjugates against the cyclic-class decomposition, plus
// the at-most-two bound on the decomposition itself.
PerLength check_oracle(int n, std::size_t cap) {
  PerLength r;
  for (const NormalForm& a : all_normal_forms(n)) {
    ++r.instances;
    const ClassReport report = class_report(a, cap);
    if (report.cyclic_classes.empty() || report.cyclic_classes.size() > 2) {
      r.failures.push_back("class of " + a.str() + " has " +
                           std::to_string(report.cyclic_classes.size()) +
                           " cyclic classes");
    }
    const std::vector<NormalForm> brute = positive_conjugates(a, cap);
    if (brute != report.members) {
      r.failures.push_back("conjugate sets differ for " + a.str() +
                           ": brute-force " + join_forms(brute) +
                           " vs cyclic " + join_forms(report.members));
    }
  }
  return r;
}

// Every positive simple-element conjugate lands in the cyclic class of
// the braid or of its reflection.
PerLength check_one_step(int n, std::size_t cap) {
  PerLength r;
  for (const NormalForm& a : all_normal_forms(n)) {
    for (Simple s : all_simples()) {
      ++r.instances;
      const auto conj = conjugate_by_simple(a, s, cap);
      if (!conj) continue;
      if (!cyclic_class(a, cap)->contains(*conj) &&
          !cyclic_class(reflected(a), cap)->contains(*conj)) {
        r.failures.push_back("conjugate " + conj->str() + " of " + a.str() +
                             " by " + simple_name(s) +
                             " escapes both cyclic classes");
      }
    }
  }
  return r;
}

// Positive infimum forces the reflection into the cyclic class.
PerLength check_inf_ge_1(int n, std::size_t cap) {
  PerLength r;
  for (const NormalForm& a : all_normal_forms(n)) {
    if (a.infimum < 1) continue;
    ++r.instances;
    if (!cyclic_class(a, cap)->contains(reflected(a))) {
      r.failures.push_back("inf >= 1 but reflection of " + a.str() +
                           " is not cyclic equivalent to it");
    }
  }
  return r;
}

// Words of length n with no relation site, found by scanning the whole
// length-n cube. These are the candidate unique representatives.
std::vector<Word> site_free_words(int n) {
  std::vector<Word> out;
  const std::uint64_t lo = std::uint64_t{1} << n;
  for (std::uint64_t key = lo; key < 2 * lo; ++key) {
    const Word w = Word::from_key(key);
    if (!w.first_relation_site()) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Zero-infimum braids have exactly one word representative, and that
// word round-trips through the block encoding.
PerLength check_uniqueness(int n, std::size_t cap) {
  PerLength r;
  for (const Word& w : site_free_words(n)) {
    if (normal_form(w).infimum != 0) {
      r.failures.push_back("site-free word " + w.str() +
                           " has positive infimum");
      continue;
    }
    ++r.instances;
    const std::vector<Word> reps = representatives(w, cap);
    if (reps.size() != 1 || reps.front() != w) {
      r.failures.push_back("delta-free braid " + w.str() + " has " +
                           std::to_string(reps.size()) +
                           " word representatives");
    }
    try {
      if (to_word(block_form(w)) != w) {
        r.failures.push_back("block form of " + w.str() +
                             " does not round-trip");
      }
    } catch (const ShapeError& e) {
      r.failures.push_back("block form of " + w.str() + " rejected: " +
                           e.what());
    }
  }
  return r;
}

// The generated block-form words and the scanned site-free words are the
// same set, and each one is genuinely delta-free as a braid.
PerLength check_shape(int n, std::size_t cap) {
  PerLength r;
  const std::vector<Word> scanned = site_free_words(n);
  const std::vector<Word> generated = delta_free_words(n);
  if (scanned != generated) {
    r.failures.push_back("length " + std::to_string(n) + ": " +
                         std::to_string(generated.size()) +
                         " block-form words vs " +
                         std::to_string(scanned.size()) +
                         " site-free words");
  }
  for (const Word& w : generated) {
    ++r.instances;
    const NormalForm nf = normal_form(w);
    if (nf.infimum != 0 || nf.tail != w) {
      r.failures.push_back("generated word " + w.str() +
                           " is not delta-free (normal form " + nf.str() +
                           ")");
    }
    if (representatives(w, cap).size() != 1) {
      r.failures.push_back("generated word " + w.str() +
                           " is not a unique representative");
    }
  }
  return r;
}

// The three-condition verdict agrees with direct cyclic membership of
// the reflection, and with the class report.
PerLength check_prop(int n, std::size_t cap) {
  PerLength r;
  for (const NormalForm& a : all_normal_forms(n)) {
    ++r.instances;
    const CoincidenceVerdict v = coincidence(a, cap);
    const bool direct = cyclic_class(a, cap)->contains(reflected(a));
    const bool via_report = class_report(a, cap).coincides;
    if (v.coincides != direct || via_report != direct) {
      r.failures.push_back(
          "coincidence mismatch for " + a.str() + ": verdict " +
          (v.coincides ? "true" : "false") + " (conditions " +
          (v.infimum_zero ? "T" : "F") + (v.lemma_shape ? "T" : "F") +
          (v.no_ccbar_power ? "T" : "F") + "), direct " +
          (direct ? "true" : "false"));
    }
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "oracle", "one-step", "inf-ge-1", "uniqueness",
      "shape",  "prop",     "structure"};
  return names;
}

bool is_suite_name(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

int suite_default_max_len(std::string_view name) {
  if (name == "oracle") return 10;
  if (name == "one-step") return 10;
  if (name == "inf-ge-1") return 12;
  if (name == "uniqueness") return 14;
  if (name == "shape") return 14;
  if (name == "prop") return 10;
  if (name == "structure") return 14;
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

SuiteResult run_suite(std::string_view name, int max_len, std::size_t cap,
                      int threads) {
  if (!is_suite_name(name)) {
    throw std::invalid_argument("unknown suite: " + std::string(name));
  }
  if (max_len <= 0) max_len = suite_default_max_len(name);

  const auto start = std::chrono::steady_clock::now();
  SuiteResult result;
  if (name == "structure") {
    const StructureLemmaReport report =
        verify_structure_lemma(max_len, cap, threads);
    result.suite = name;
    result.max_len = max_len;
    result.instances_checked = report.instances_checked;
    result.splits_checked = report.splits_checked;
    result.failures = report.failures;
  } else if (name == "oracle") {
    result = run_by_length(name, max_len, cap, threads, check_oracle);
  } else if (name == "one-step") {
    result = run_by_length(name, max_len, cap, threads, check_one_step);
  } else if (name == "inf-ge-1") {
    result = run_by_length(name, max_len, cap, threads, check_inf_ge_1);
  } else if (name == "uniqueness") {
    result = run_by_length(name, max_len, cap, threads, check_uniqueness);
  } else if (name == "shape") {
    result = run_by_length(name, max_len, cap, threads, check_shape);
  } else {
    result = run_by_length(name, max_len, cap, threads, check_prop);
  }
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace braid3
