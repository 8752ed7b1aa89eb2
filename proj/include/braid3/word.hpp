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

#ifndef BRAID3_WORD_HPP_
#define BRAID3_WORD_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braid3 {

/// One of the two Artin generators of the 3-strand braid monoid.
enum class Letter : unsigned char { sigma1 = 1, sigma2 = 2 };

constexpr Letter reflected(Letter l) {
  return l == Letter::sigma1 ? Letter::sigma2 : Letter::sigma1;
}

constexpr char to_char(Letter l) {
  return l == Letter::sigma1 ? '1' : '2';
}

/// Invalid word syntax; position() is the offending character index.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A closure or enumeration outgrew its configured cap, or a word
/// outgrew the packed 62-letter representation.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultClosureCap = std::size_t{1} << 22;

/// A positive word over {sigma1, sigma2}, packed one bit per letter.
///
/// Words are immutable values. The textual form is a string over
/// {'1','2'}; the empty word renders as "e". Both braid moves used in
/// this library (the relation sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2
/// and cyclic rotation) preserve length, so the 62-letter capacity bounds
/// every closure a word of that size can reach.
class Word {
 public:
  static constexpr unsigned kMaxLetters = 62;

  constexpr Word() = default;

  /// Parses "e" (the empty word) or a nonempty string over {'1','2'}.
  static Word parse(std::string_view text);

  /// Rebuilds a word from key(). The key of the empty word is 1.
  static constexpr Word from_key(std::uint64_t key) {
    Word w;
    w.len_ = static_cast<std::uint32_t>(std::bit_width(key)) - 1;
    w.bits_ = key ^ (std::uint64_t{1} << w.len_);
    return w;
  }

  static Word single(Letter l) {
    Word w;
    w.len_ = 1;
    w.bits_ = (l == Letter::sigma2) ? 1 : 0;
    return w;
  }

  constexpr unsigned size() const { return len_; }
  constexpr bool empty() const { return len_ == 0; }

  constexpr Letter letter(unsigned i) const {
    return (bits_ >> i & 1) ? Letter::sigma2 : Letter::sigma1;
  }

  /// Length-tagged packed form; distinct words have distinct keys.
  constexpr std::uint64_t key() const {
    return bits_ | (std::uint64_t{1} << len_);
  }

  std::string str() const;

  Word append(const Word& other) const;
  Word appended(Letter l) const { return append(single(l)); }

  /// Letters [pos, pos + count).
  Word subword(unsigned pos, unsigned count) const;
  Word prefix(unsigned n) const { return subword(0, n); }
  Word suffix_from(unsigned pos) const { return subword(pos, len_ - pos); }

  /// Left rotation: letters [k, end) followed by letters [0, k).
  /// Requires 0 <= k <= size().
  Word rotated(unsigned k) const;

  /// Letterwise generator swap.
  constexpr Word reflected() const {
    Word w;
    w.len_ = len_;
    w.bits_ = ~bits_ & mask(len_);
    return w;
  }

  /// True when letters i..i+2 spell "121" or "212" (a rewrite site for
  /// the braid relation; equivalently an occurrence of the Garside
  /// element as a factor).
  constexpr bool is_relation_site(unsigned i) const {
    if (i + 3 > len_) return false;
    const std::uint64_t window = bits_ >> i & 7;
    return window == 0b010 || window == 0b101;
  }

  std::optional<unsigned> first_relation_site() const {
    for (unsigned i = 0; i + 3 <= len_; ++i) {
      if (is_relation_site(i)) return i;
    }
    return std::nullopt;
  }

  /// Applies the braid relation at site i ("121" <-> "212").
  constexpr Word flipped_at(unsigned i) const {
    Word w = *this;
    w.bits_ ^= std::uint64_t{7} << i;
    return w;
  }

  friend constexpr bool operator==(const Word&, const Word&) = default;

  /// Shorter words first, then letterwise with sigma1 < sigma2.
  std::strong_ordering operator<=>(const Word& other) const {
    if (len_ != other.len_) return len_ <=> other.len_;
    const std::uint64_t diff = bits_ ^ other.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    const int i = std::countr_zero(diff);
    return (bits_ >> i & 1) <=> (other.bits_ >> i & 1);
  }

 private:
  static constexpr std::uint64_t mask(unsigned n) {
    return n == 0 ? 0 : ~std::uint64_t{0} >> (64 - n);
  }

  std::uint64_t bits_ = 0;  // bit i: 0 = sigma1, 1 = sigma2 at position i
  std::uint32_t len_ = 0;
};

/// All words obtained from w by one application of the braid relation,
/// sorted. Every result has the same length and represents the same braid.
std::vector<Word> relation_neighbors(const Word& w);

/// The full set of positive words representing the same braid as w: the
/// closure of {w} under relation_neighbors, sorted. Throws CapExceeded
/// when the closure outgrows cap.
std::vector<Word> representatives(const Word& w,
                                  std::size_t cap = kDefaultClosureCap);

}  // namespace braid3

#endif  // BRAID3_WORD_HPP_
