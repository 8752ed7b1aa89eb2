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

#include "braid3/conjugacy.hpp"

#include <algorithm>
#include <unordered_map>

namespace braid3 {
namespace {

thread_local std::unordered_map<std::uint64_t, CyclicClassPtr> cc_cache;

// Closure of the seed word under single-letter rotation and the braid
// relation. Both moves preserve length, so the closure lives inside the
// 2^n words of the seed's length; its elements are exactly the words of
// the braids cyclic equivalent to the seed.
std::vector<std::uint64_t> cyclic_word_closure(const Word& seed,
                                               std::size_t cap) {
  std::unordered_set<std::uint64_t> visited{seed.key()};
  std::vector<std::uint64_t> stack{seed.key()};
  auto push = [&](const Word& u) {
    if (visited.insert(u.key()).second) {
      if (visited.size() > cap) {
        throw CapExceeded("cyclic closure exceeded cap " +
                          std::to_string(cap));
      }
      stack.push_back(u.key());
    }
  };
  while (!stack.empty()) {
    const Word w = Word::from_key(stack.back());
    stack.pop_back();
    for (unsigned i = 0; i + 3 <= w.size(); ++i) {
      if (w.is_relation_site(i)) push(w.flipped_at(i));
    }
    if (!w.empty()) push(w.rotated(1));
  }
  return {visited.begin(), visited.end()};
}

}  // namespace

const Word& simple_word(Simple s) {
  static const Word words[6] = {Word{},
                                Word::parse("1"),
                                Word::parse("2"),
                                Word::parse("12"),
                                Word::parse("21"),
                                Word::parse("121")};
  return words[static_cast<int>(s)];
}

const char* simple_name(Simple s) {
  static const char* names[6] = {"e", "1", "2", "12", "21", "delta"};
  return names[static_cast<int>(s)];
}

std::optional<Simple> simple_from_name(std::string_view name) {
  for (Simple s : all_simples()) {
    if (name == simple_name(s)) return s;
  }
  if (name == "121" || name == "212") return Simple::delta;
  return std::nullopt;
}

CyclicClass CyclicClass::from_members(std::vector<NormalForm> members) {
  CyclicClass cc;
  cc.members_ = std::move(members);
  std::sort(cc.members_.begin(), cc.members_.end(), NormalFormStrLess{});
  cc.keys_.reserve(cc.members_.size());
  for (const NormalForm& nf : cc.members_) cc.keys_.insert(nf.key());
  return cc;
}

CyclicClassPtr cyclic_class(const NormalForm& a, std::size_t cap) {
  if (auto it = cc_cache.find(a.key()); it != cc_cache.end()) {
    return it->second;
  }
  std::vector<NormalForm> members;
  std::unordered_set<std::uint64_t> member_keys;
  for (const std::uint64_t k : cyclic_word_closure(a.word(), cap)) {
    NormalForm nf = normal_form(Word::from_key(k));
    if (member_keys.insert(nf.key()).second) members.push_back(std::move(nf));
  }
  auto cc = std::make_shared<const CyclicClass>(
      CyclicClass::from_members(std::move(members)));
  for (const NormalForm& nf : cc->members()) cc_cache.emplace(nf.key(), cc);
  return cc;
}

void clear_cyclic_class_cache() { cc_cache.clear(); }

bool are_conjugate(const NormalForm& a, const NormalForm& b,
                   std::size_t cap) {
  if (a.length() != b.length()) return false;
  if (a == b) return true;
  const CyclicClassPtr cc = cyclic_class(a, cap);
  if (cc->contains(b)) return true;
  if (a.infimum >= 1) return false;  // class == cyclic class here
  return cc->contains(reflected(b));
}

std::optional<NormalForm> conjugate_by_simple(const NormalForm& a, Simple s,
                                              std::size_t cap) {
  const Word sw = simple_word(s);
  const Word start = a.word().append(sw);

  // s^-1 a s is positive iff s left-divides a*s, i.e. some representative
  // of a*s starts with a word for s; the quotient past that prefix is the
  // conjugate. The Garside element has the two spellings "121" and "212".
  auto quotient = [&](const Word& w) -> std::optional<Word> {
    if (s == Simple::delta) {
      if (w.prefix(3) == delta_word() ||
          w.prefix(3) == delta_word().reflected()) {
        return w.suffix_from(3);
      }
      return std::nullopt;
    }
    if (w.prefix(sw.size()) == sw) return w.suffix_from(sw.size());
    return std::nullopt;
  };

  std::unordered_set<std::uint64_t> visited{start.key()};
  std::vector<std::uint64_t> stack{start.key()};
  while (!stack.empty()) {
    const Word w = Word::from_key(stack.back());
    stack.pop_back();
    if (auto q = quotient(w)) return normal_form(*q);
    for (unsigned i = 0; i + 3 <= w.size(); ++i) {
      if (!w.is_relation_site(i)) continue;
      const Word v = w.flipped_at(i);
      if (visited.insert(v.key()).second) {
        if (visited.size() > cap) {
          throw CapExceeded("left-division closure exceeded cap " +
                            std::to_string(cap));
        }
        stack.push_back(v.key());
      }
    }
  }
  return std::nullopt;
}

std::vector<NormalForm> positive_conjugates(const NormalForm& a,
                                            std::size_t cap) {
  std::unordered_set<std::uint64_t> seen{a.key()};
  std::vector<NormalForm> members{a};
  std::vector<NormalForm> stack{a};
  while (!stack.empty()) {
    const NormalForm x = stack.back();
    stack.pop_back();
    for (Simple s : all_simples()) {
      auto r = conjugate_by_simple(x, s, cap);
      if (!r) continue;
      if (seen.insert(r->key()).second) {
        if (seen.size() > cap) {
          throw CapExceeded("conjugate closure exceeded cap " +
                            std::to_string(cap));
        }
        members.push_back(*r);
        stack.push_back(std::move(*r));
      }
    }
  }
  std::sort(members.begin(), members.end(), NormalFormStrLess{});
  return members;
}

ClassReport class_report(const NormalForm& a, std::size_t cap) {
  ClassReport report;
  const CyclicClassPtr cc = cyclic_class(a, cap);
  const NormalForm mirror = reflected(a);
  if (cc->contains(mirror)) {
    report.coincides = true;
    report.cyclic_classes = {cc};
    report.members = cc->members();
  } else {
    report.coincides = false;
    const CyclicClassPtr ccr = cyclic_class(mirror, cap);
    report.cyclic_classes = {cc, ccr};
    std::sort(report.cyclic_classes.begin(), report.cyclic_classes.end(),
              [](const CyclicClassPtr& x, const CyclicClassPtr& y) {
                return x->representative().str() < y->representative().str();
              });
    report.members.reserve(cc->size() + ccr->size());
    report.members.insert(report.members.end(), cc->members().begin(),
                          cc->members().end());
    report.members.insert(report.members.end(), ccr->members().begin(),
                          ccr->members().end());
    std::sort(report.members.begin(), report.members.end(),
              NormalFormStrLess{});
  }
  return report;
}

}  // namespace braid3
