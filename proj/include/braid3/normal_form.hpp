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

#ifndef BRAID3_NORMAL_FORM_HPP_
#define BRAID3_NORMAL_FORM_HPP_

#include <string>
#include <vector>

#include "braid3/word.hpp"

namespace braid3 {

/// The Garside element of the 3-strand braid group, as a word.
const Word& delta_word();

/// Canonical value of a positive 3-braid: the maximal power of the
/// Garside element (the infimum) times a delta-free tail. A positive
/// braid with zero infimum has exactly one word representative, so the
/// tail word makes the pair a unique, hashable key for the braid.
struct NormalForm {
  int infimum = 0;
  Word tail;

  /// The canonical word: infimum copies of "121" followed by the tail.
  Word word() const;

  int length() const { return 3 * infimum + static_cast<int>(tail.size()); }

  std::uint64_t key() const { return word().key(); }

  /// Rendering "D^m:tail", e.g. "D^1:2", "D^0:1122", "D^2:e".
  std::string str() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Orders normal forms by their rendered string (the canonical output
/// order throughout the library).
struct NormalFormStrLess {
  bool operator()(const NormalForm& a, const NormalForm& b) const {
    return a.str() < b.str();
  }
};

/// Computes the normal form of the braid represented by w.
NormalForm normal_form(const Word& w);

inline int infimum(const Word& w) { return normal_form(w).infimum; }

/// Conjugation by the Garside element: fixes the infimum, swaps the
/// generators of the tail.
NormalForm reflected(const NormalForm& nf);

/// A word that was expected to be delta-free is not (an upstream
/// normalization bug), or block-form constraints are violated.
class ShapeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Run-length encoding of a delta-free word into alternating generator
/// blocks. Valid exponent sequences have first and last entry >= 1 and
/// every middle entry >= 2; an odd number of blocks ends on the starting
/// generator, an even number on the other one.
struct BlockForm {
  Letter start = Letter::sigma1;
  std::vector<int> exponents;

  bool ends_with_start() const { return exponents.size() % 2 == 1; }

  friend bool operator==(const BlockForm&, const BlockForm&) = default;
};

/// Encodes a delta-free tail. Throws ShapeError when the word contains a
/// relation site (i.e. is not delta-free).
BlockForm block_form(const Word& tail);

/// Inverse of block_form. Validates the exponent constraints and throws
/// ShapeError on violation.
Word to_word(const BlockForm& bf);

}  // namespace braid3

#endif  // BRAID3_NORMAL_FORM_HPP_
