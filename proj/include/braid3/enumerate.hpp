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

#ifndef BRAID3_ENUMERATE_HPP_
#define BRAID3_ENUMERATE_HPP_

#include <vector>

#include "braid3/conjugacy.hpp"
#include "braid3/normal_form.hpp"

namespace braid3 {

/// All delta-free words of the given length (every braid with zero
/// infimum appears via its unique word), sorted.
std::vector<Word> delta_free_words(int length);

/// All normal forms of the given total length, sorted by rendered
/// string: for each infimum m from 0 to length/3, every delta-free tail
/// of length length - 3m.
std::vector<NormalForm> all_normal_forms(int length);

/// All conjugacy classes of positive 3-braids of one length. Classes are
/// ordered by their lexicographically least member and partition the
/// normal forms of that length.
struct ClassTable {
  int length = 0;
  std::vector<ClassReport> classes;
  std::size_t braid_count = 0;

  std::size_t class_count() const { return classes.size(); }
};

ClassTable enumerate_classes(int length,
                             std::size_t cap = kDefaultClosureCap);

}  // namespace braid3

#endif  // BRAID3_ENUMERATE_HPP_
