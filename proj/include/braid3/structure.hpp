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

#ifndef BRAID3_STRUCTURE_HPP_
#define BRAID3_STRUCTURE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braid3/normal_form.hpp"

namespace braid3 {

/// A factorization of a braid as (c * reflect(c))^exponent for a
/// nonempty word c. `minimal` records that c * reflect(c) is itself not
/// a proper power (d * reflect(d))^k with k >= 2.
struct CcbarPower {
  Word c;
  int exponent = 1;
  bool minimal = true;
};

/// Searches every word representative of a for a factorization
/// (c * reflect(c))^l, l >= 1. Returns a minimal expression (largest
/// exponent, then lexicographically least c) or std::nullopt when no
/// factorization exists.
std::optional<CcbarPower> find_ccbar_power(
    const NormalForm& a, std::size_t cap = kDefaultClosureCap);

/// True iff a has zero infimum and its tail either ends on the generator
/// it starts with, or ends on the other generator with both end blocks
/// of exponent >= 2. False for the empty tail and for positive infimum.
bool shape_condition(const NormalForm& a);

/// The three-condition test for whether the conjugacy class of a is a
/// single cyclic class. `coincides` holds iff at least one of the three
/// conditions fails.
struct CoincidenceVerdict {
  bool coincides = false;
  bool infimum_zero = false;   // condition 1
  bool lemma_shape = false;    // condition 2
  bool no_ccbar_power = false; // condition 3
};

CoincidenceVerdict coincidence(const NormalForm& a,
                               std::size_t cap = kDefaultClosureCap);

/// Exhaustive check of the palindromic-power structure of delta-free
/// braids that are cyclic equivalent to their reflection: each one must
/// factor as (c * reflect(c))^l, and every word split a = w1 w2 with
/// reflect(a) = w2 w1 must have w1 = (c * reflect(c))^k * c.
struct StructureLemmaReport {
  int max_len = 0;
  long long instances_checked = 0;
  long long splits_checked = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

StructureLemmaReport verify_structure_lemma(
    int max_len, std::size_t cap = kDefaultClosureCap, int threads = 0);

}  // namespace braid3

#endif  // BRAID3_STRUCTURE_HPP_
