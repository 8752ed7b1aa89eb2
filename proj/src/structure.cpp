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

#include "braid3/structure.hpp"

#include <algorithm>
#include <utility>

#include "braid3/conjugacy.hpp"
#include "braid3/enumerate.hpp"
#include "parallel.hpp"

namespace braid3 {
namespace {

// The prefix of length n of the infinite repetition c c' c c' ... where
// c' = reflect(c).
Word ccbar_pattern_prefix(const Word& c, unsigned n) {
  const Word cr = c.reflected();
  Word out;
  unsigned block = 0;
  while (out.size() < n) {
    const Word& piece = (block % 2 == 0) ? c : cr;
    const unsigned take = std::min(piece.size(), n - out.size());
    out = out.append(piece.prefix(take));
    ++block;
  }
  return out;
}

// Every factorization of a as (c * reflect(c))^l with l >= min_exponent.
// A braid equality a = (c c')^l forces the literal word (c c')^l to be a
// representative of a, so scanning prefixes of every representative for
// the periodic pattern finds each factorization exactly once.
std::vector<CcbarPower> ccbar_decompositions(const NormalForm& a,
                                             int min_exponent,
                                             std::size_t cap) {
  std::vector<CcbarPower> out;
  const int n = a.length();
  if (n == 0 || n % 2 != 0) return out;
  for (const Word& w : representatives(a.word(), cap)) {
    for (int l = min_exponent; 2 * l <= n; ++l) {
      if (n % (2 * l) != 0) continue;
      const unsigned d = static_cast<unsigned>(n / (2 * l));
      const Word c = w.prefix(d);
      if (w == ccbar_pattern_prefix(c, static_cast<unsigned>(n))) {
        out.push_back(CcbarPower{c, l, false});
      }
    }
  }
  return out;
}

}  // namespace

std::optional<CcbarPower> find_ccbar_power(const NormalForm& a,
                                           std::size_t cap) {
  std::vector<CcbarPower> found = ccbar_decompositions(a, 1, cap);
  if (found.empty()) return std::nullopt;
  // Largest exponent first; a proper power of the base would show up
  // here with a strictly larger exponent, so the winner is minimal.
  auto best = std::min_element(
      found.begin(), found.end(), [](const CcbarPower& x, const CcbarPower& y) {
        if (x.exponent != y.exponent) return x.exponent > y.exponent;
        return x.c < y.c;
      });
  CcbarPower result = *best;
  const NormalForm base = normal_form(result.c.append(result.c.reflected()));
  result.minimal = ccbar_decompositions(base, 2, cap).empty();
  return result;
}

bool shape_condition(const NormalForm& a) {
  if (a.infimum != 0 || a.tail.empty()) return false;
  const BlockForm bf = block_form(a.tail);
  if (bf.ends_with_start()) return true;
  return bf.exponents.front() >= 2 && bf.exponents.back() >= 2;
}

CoincidenceVerdict coincidence(const NormalForm& a, std::size_t cap) {
  CoincidenceVerdict v;
  v.infimum_zero = (a.infimum == 0);
  v.lemma_shape = shape_condition(a);
  v.no_ccbar_power = !find_ccbar_power(a, cap).has_value();
  v.coincides = !(v.infimum_zero && v.lemma_shape && v.no_ccbar_power);
  return v;
}

StructureLemmaReport verify_structure_lemma(int max_len, std::size_t cap,
                                            int threads) {
  StructureLemmaReport total;
  total.max_len = max_len;
  if (max_len < 2) return total;

  auto check_length = [cap](int n) {
    StructureLemmaReport r;
    for (const Word& w : delta_free_words(n)) {
      const NormalForm a{0, w};
      if (!shape_condition(a)) continue;
      const NormalForm mirror = reflected(a);
      if (!cyclic_class(a, cap)->contains(mirror)) continue;
      ++r.instances_checked;

      const auto power = find_ccbar_power(a, cap);
      if (!power) {
        r.failures.push_back("no (c cbar)^l factorization: " + a.str());
        continue;
      }
      const unsigned d = power->c.size();
      const Word rw = w.reflected();
      for (unsigned p = 0; p <= w.size(); ++p) {
        if (w.rotated(p) != rw) continue;  // not a split onto the mirror
        ++r.splits_checked;
        const bool ok =
            p % (2 * d) == d && w.prefix(p) == ccbar_pattern_prefix(power->c, p);
        if (!ok) {
          r.failures.push_back("split w1=" + w.prefix(p).str() + " of " +
                               a.str() + " is not (c cbar)^k c for c=" +
                               power->c.str());
        }
      }
    }
    return r;
  };

  for (StructureLemmaReport& r : detail::map_lengths<StructureLemmaReport>(
           2, max_len, threads, check_length)) {
    total.instances_checked += r.instances_checked;
    total.splits_checked += r.splits_checked;
    total.failures.insert(total.failures.end(),
                          std::make_move_iterator(r.failures.begin()),
                          std::make_move_iterator(r.failures.end()));
  }
  return total;
}

}  // namespace braid3
