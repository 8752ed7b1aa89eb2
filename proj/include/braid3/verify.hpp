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

#ifndef BRAID3_VERIFY_HPP_
#define BRAID3_VERIFY_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "braid3/word.hpp"

namespace braid3 {

/// Outcome of one exhaustive verification suite. A suite passes iff it
/// recorded no failures; each failure string names the offending
/// instance.
struct SuiteResult {
  std::string suite;
  int max_len = 0;
  long long instances_checked = 0;
  long long splits_checked = 0;  // structure suite only
  std::vector<std::string> failures;
  double elapsed_seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

/// Suites, in canonical order:
///   oracle      brute-force positive conjugates == cyclic classes + reflection
///   one-step    simple-element conjugates stay in the class union
///   inf-ge-1    positive infimum forces reflection into the cyclic class
///   uniqueness  delta-free braids have a single word representative
///   shape       delta-free words == valid block forms, both directions
///   prop        three-condition verdict == direct cyclic membership
///   structure   palindromic-power factorization and split positions
const std::vector<std::string>& suite_names();

bool is_suite_name(std::string_view name);

/// The exhaustive bound each suite runs at when none is given.
int suite_default_max_len(std::string_view name);

/// Runs one suite over every instance up to max_len (<= 0 picks the
/// suite default). threads <= 0 uses the hardware concurrency.
SuiteResult run_suite(std::string_view name, int max_len = -1,
                      std::size_t cap = kDefaultClosureCap,
                      int threads = 0);

}  // namespace braid3

#endif  // BRAID3_VERIFY_HPP_
