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

#include "braid3/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace braid3 {
namespace {

// Emits every word extending `w` by alternating generator runs summing
// to `remaining`: the first and last run may have length 1, runs in
// between need length >= 2 (shorter middle runs would create a relation
// site).
void extend_runs(const Word& w, Letter g, int remaining, bool first,
                 std::vector<Word>& out) {
  Word run = w;
  for (int r = 1; r <= remaining; ++r) {
    run = run.appended(g);
    const bool last = (r == remaining);
    if (last) {
      out.push_back(run);
    } else if (first || r >= 2) {
      extend_runs(run, reflected(g), remaining - r, false, out);
    }
  }
}

}  // namespace

std::vector<Word> delta_free_words(int length) {
  if (length < 0 || length > static_cast<int>(Word::kMaxLetters)) {
    throw std::out_of_range("delta_free_words: unsupported length");
  }
  std::vector<Word> out;
  if (length == 0) {
    out.push_back(Word{});
    return out;
  }
  extend_runs(Word{}, Letter::sigma1, length, true, out);
  extend_runs(Word{}, Letter::sigma2, length, true, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NormalForm> all_normal_forms(int length) {
  std::vector<NormalForm> out;
  for (int m = 0; 3 * m <= length; ++m) {
    for (const Word& tail : delta_free_words(length - 3 * m)) {
      out.push_back(NormalForm{m, tail});
    }
  }
  std::sort(out.begin(), out.end(), NormalFormStrLess{});
  return out;
}

ClassTable enumerate_classes(int length, std::size_t cap) {
  ClassTable table;
  table.length = length;
  const std::vector<NormalForm> forms = all_normal_forms(length);
  table.braid_count = forms.size();

  std::unordered_set<std::uint64_t> assigned;
  std::size_t covered = 0;
  for (const NormalForm& nf : forms) {
    if (assigned.count(nf.key())) continue;
    ClassReport report = class_report(nf, cap);
    for (const NormalForm& member : report.members) {
      if (member.length() != length || !assigned.insert(member.key()).second) {
        throw std::logic_error("enumerate_classes: classes do not partition "
                               "the braids of length " +
                               std::to_string(length));
      }
    }
    covered += report.members.size();
    table.classes.push_back(std::move(report));
  }
  if (covered != table.braid_count) {
    throw std::logic_error("enumerate_classes: partition misses braids");
  }
  return table;
}

}  // namespace braid3
