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

#include "braid3/word.hpp"

#include <algorithm>
#include <unordered_set>

namespace braid3 {

Word Word::parse(std::string_view text) {
  if (text == "e") return Word{};
  if (text.empty()) {
    throw ParseError("empty word text (the identity is written \"e\")", 0);
  }
  if (text.size() > kMaxLetters) {
    throw CapExceeded("word longer than the 62-letter limit");
  }
  Word w;
  w.len_ = static_cast<std::uint32_t>(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '2') {
      w.bits_ |= std::uint64_t{1} << i;
    } else if (text[i] != '1') {
      throw ParseError(std::string("invalid character '") + text[i] +
                           "' at index " + std::to_string(i) +
                           " (expected '1' or '2')",
                       i);
    }
  }
  return w;
}

std::string Word::str() const {
  if (len_ == 0) return "e";
  std::string s(len_, '1');
  for (unsigned i = 0; i < len_; ++i) {
    if (bits_ >> i & 1) s[i] = '2';
  }
  return s;
}

Word Word::append(const Word& other) const {
  if (len_ + other.len_ > kMaxLetters) {
    throw CapExceeded("word longer than the 62-letter limit");
  }
  Word w;
  w.len_ = len_ + other.len_;
  w.bits_ = bits_ | other.bits_ << len_;
  return w;
}

Word Word::subword(unsigned pos, unsigned count) const {
  if (pos + count > len_) {
    throw std::out_of_range("subword out of range");
  }
  Word w;
  w.len_ = count;
  w.bits_ = bits_ >> pos & mask(count);
  return w;
}

Word Word::rotated(unsigned k) const {
  if (k > len_) {
    throw std::out_of_range("rotation offset exceeds word length");
  }
  if (k == 0 || k == len_) return *this;
  Word w;
  w.len_ = len_;
  w.bits_ = (bits_ >> k | bits_ << (len_ - k)) & mask(len_);
  return w;
}

std::vector<Word> relation_neighbors(const Word& w) {
  std::vector<Word> out;
  for (unsigned i = 0; i + 3 <= w.size(); ++i) {
    if (w.is_relation_site(i)) out.push_back(w.flipped_at(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> representatives(const Word& w, std::size_t cap) {
  std::unordered_set<std::uint64_t> visited{w.key()};
  std::vector<std::uint64_t> stack{w.key()};
  while (!stack.empty()) {
    const Word u = Word::from_key(stack.back());
    stack.pop_back();
    for (unsigned i = 0; i + 3 <= u.size(); ++i) {
      if (!u.is_relation_site(i)) continue;
      const Word v = u.flipped_at(i);
      if (visited.insert(v.key()).second) {
        if (visited.size() > cap) {
          throw CapExceeded("representative closure exceeded cap " +
                            std::to_string(cap));
        }
        stack.push_back(v.key());
      }
    }
  }
  std::vector<Word> out;
  out.reserve(visited.size());
  for (const std::uint64_t k : visited) out.push_back(Word::from_key(k));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace braid3
