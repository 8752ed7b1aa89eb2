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

#ifndef BRAID3_CONJUGACY_HPP_
#define BRAID3_CONJUGACY_HPP_

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "braid3/normal_form.hpp"
#include "braid3/word.hpp"

namespace braid3 {

/// The six left-divisors of the Garside element.
enum class Simple { identity, s1, s2, s12, s21, delta };

constexpr std::array<Simple, 6> all_simples() {
  return {Simple::identity, Simple::s1, Simple::s2,
          Simple::s12, Simple::s21, Simple::delta};
}

const Word& simple_word(Simple s);
const char* simple_name(Simple s);
std::optional<Simple> simple_from_name(std::string_view name);

/// A cyclic-equivalence class: all positive braids reachable from a seed
/// by interleaving braid-relation rewrites with cyclic rotations of the
/// word. Members are normal forms sorted by their rendered string.
class CyclicClass {
 public:
  const std::vector<NormalForm>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const NormalForm& nf) const {
    return keys_.count(nf.key()) != 0;
  }
  const NormalForm& representative() const { return members_.front(); }

  static CyclicClass from_members(std::vector<NormalForm> members);

 private:
  std::vector<NormalForm> members_;
  std::unordered_set<std::uint64_t> keys_;
};

using CyclicClassPtr = std::shared_ptr<const CyclicClass>;

/// Computes (and memoizes, per thread, keyed by every member) the cyclic
/// class of a. The cap bounds the word-level closure size.
CyclicClassPtr cyclic_class(const NormalForm& a,
                            std::size_t cap = kDefaultClosureCap);

/// Drops this thread's cyclic-class memo table.
void clear_cyclic_class_cache();

/// Decides conjugacy: a and b are conjugate iff b lies in the cyclic
/// class of a or of its reflection. When inf(a) >= 1 the reflection test
/// is redundant and skipped.
bool are_conjugate(const NormalForm& a, const NormalForm& b,
                   std::size_t cap = kDefaultClosureCap);

/// Conjugates a by the simple element s (computes s^-1 a s) when the
/// result is again a positive braid; std::nullopt otherwise. Decided by
/// left-divisibility: some representative of the word a*s must begin
/// with a word for s.
std::optional<NormalForm> conjugate_by_simple(
    const NormalForm& a, Simple s, std::size_t cap = kDefaultClosureCap);

/// All positive conjugates of a, computed as the closure of {a} under
/// conjugation by the six simple elements. This is the brute-force
/// reference for the conjugacy machinery; it deliberately shares nothing
/// with cyclic_class / are_conjugate beyond words and normal forms.
std::vector<NormalForm> positive_conjugates(
    const NormalForm& a, std::size_t cap = kDefaultClosureCap);

/// A conjugacy class with its cyclic-class decomposition. The class of a
/// positive 3-braid is the union of at most two cyclic classes; it is
/// exactly one iff `coincides`.
struct ClassReport {
  std::vector<NormalForm> members;            // sorted by rendered string
  std::vector<CyclicClassPtr> cyclic_classes; // 1 or 2, by representative
  bool coincides = false;

  const NormalForm& representative() const { return members.front(); }
  std::size_t size() const { return members.size(); }
};

ClassReport class_report(const NormalForm& a,
                         std::size_t cap = kDefaultClosureCap);

}  // namespace braid3

#endif  // BRAID3_CONJUGACY_HPP_
