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

#include "braid3/normal_form.hpp"

namespace braid3 {

const Word& delta_word() {
  static const Word delta = Word::parse("121");
  return delta;
}

Word NormalForm::word() const {
  Word w;
  for (int i = 0; i < infimum; ++i) w = w.append(delta_word());
  return w.append(tail);
}

std::string NormalForm::str() const {
  return "D^" + std::to_string(infimum) + ":" + tail.str();
}

// Extraction rests on two facts about the two-generator monoid: an
// occurrence of "121"/"212" at position i means the braid factors as
// (prefix) * Delta * (rest) = Delta * reflect(prefix) * (rest), and a
// word with no such occurrence admits no rewrite at all, so it is the
// unique representative of a braid the Garside element does not divide.
NormalForm normal_form(const Word& w) {
  Word tail = w;
  int m = 0;
  while (auto site = tail.first_relation_site()) {
    tail = tail.prefix(*site).reflected().append(tail.suffix_from(*site + 3));
    ++m;
  }
  return NormalForm{m, tail};
}

NormalForm reflected(const NormalForm& nf) {
  return NormalForm{nf.infimum, nf.tail.reflected()};
}

BlockForm block_form(const Word& tail) {
  if (tail.first_relation_site()) {
    throw ShapeError("block_form: word \"" + tail.str() +
                     "\" is not delta-free");
  }
  BlockForm bf;
  if (tail.empty()) return bf;
  bf.start = tail.letter(0);
  Letter current = bf.start;
  int run = 0;
  for (unsigned i = 0; i < tail.size(); ++i) {
    if (tail.letter(i) == current) {
      ++run;
    } else {
      bf.exponents.push_back(run);
      current = tail.letter(i);
      run = 1;
    }
  }
  bf.exponents.push_back(run);
  return bf;
}

Word to_word(const BlockForm& bf) {
  const std::size_t k = bf.exponents.size();
  for (std::size_t i = 0; i < k; ++i) {
    const int e = bf.exponents[i];
    const int min = (i == 0 || i + 1 == k) ? 1 : 2;
    if (e < min) {
      throw ShapeError("block exponent " + std::to_string(e) +
                       " at index " + std::to_string(i) + " is below " +
                       std::to_string(min));
    }
  }
  Word w;
  Letter g = bf.start;
  for (std::size_t i = 0; i < k; ++i) {
    for (int j = 0; j < bf.exponents[i]; ++j) w = w.appended(g);
    g = reflected(g);
  }
  return w;
}

}  // namespace braid3
