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

#include <doctest.h>

#include <map>
#include <random>

#include "braid3/normal_form.hpp"
#include "braid3/word.hpp"
#include "test_util.hpp"

using namespace braid3;
using testutil::all_words;
using testutil::random_word;
using testutil::strs;
using testutil::w;

TEST_SUITE_BEGIN("word");

TEST_CASE("parse and render") {
  CHECK(w("1121").str() == "1121");
  CHECK(w("e").str() == "e");
  CHECK(w("e").empty());
  CHECK(w("1121").size() == 4);
  CHECK(w("1121").letter(2) == Letter::sigma2);

  CHECK_THROWS_AS(Word::parse(""), ParseError);
  CHECK_THROWS_AS(Word::parse("1213"), ParseError);
  CHECK_THROWS_AS(Word::parse("ee"), ParseError);
  try {
    Word::parse("1x2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 1);
  }
  CHECK_THROWS_AS(Word::parse(std::string(63, '1')), CapExceeded);
  CHECK(Word::parse(std::string(62, '2')).size() == 62);
}

TEST_CASE("key round-trips") {
  std::mt19937 rng(20260810);
  for (int i = 0; i < 500; ++i) {
    const Word x = random_word(rng, 0, 18);
    CHECK(Word::from_key(x.key()) == x);
  }
  CHECK(Word{}.key() == 1);
}

TEST_CASE("rotation") {
  CHECK(w("1122").rotated(1) == w("1221"));
  CHECK(w("1112").rotated(3) == w("2111"));
  CHECK(w("e").rotated(0) == w("e"));
  CHECK(w("1212").rotated(0) == w("1212"));
  CHECK(w("1212").rotated(4) == w("1212"));
  CHECK_THROWS_AS(w("12").rotated(3), std::out_of_range);

  // Rotations compose additively mod length and preserve length.
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Word x = random_word(rng, 1, 20);
    std::uniform_int_distribution<unsigned> k(0, x.size());
    const unsigned k1 = k(rng), k2 = k(rng);
    CHECK(x.rotated(k1).size() == x.size());
    CHECK(x.rotated(k1).rotated(k2) == x.rotated((k1 + k2) % x.size()));
  }
}

TEST_CASE("reflection is an involution and a homomorphism") {
  CHECK(w("1").reflected() == w("2"));
  CHECK(w("1122").reflected() == w("2211"));
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Word a = random_word(rng, 0, 15);
    const Word b = random_word(rng, 0, 15);
    CHECK(a.reflected().reflected() == a);
    CHECK(a.append(b).reflected() == a.reflected().append(b.reflected()));
  }
}

TEST_CASE("relation neighbors") {
  CHECK(strs(relation_neighbors(w("121"))) == std::set<std::string>{"212"});
  CHECK(relation_neighbors(w("1111")).empty());
  // Both windows of "1212" rewrite: site 0 gives "2122", site 1 gives "1121".
  CHECK(strs(relation_neighbors(w("1212"))) ==
        std::set<std::string>{"1121", "2122"});
  for (const Word& u : relation_neighbors(w("1212"))) {
    CHECK(u.size() == 4);
    CHECK(normal_form(u) == normal_form(w("1212")));
  }
}

TEST_CASE("representative closures") {
  CHECK(strs(representatives(w("121"))) ==
        std::set<std::string>{"121", "212"});
  CHECK(strs(representatives(w("1122"))) == std::set<std::string>{"1122"});
  CHECK(strs(representatives(w("e"))) == std::set<std::string>{"e"});
}

TEST_CASE("closure cap reports overflow") {
  Word big;
  for (int i = 0; i < 8; ++i) big = big.append(delta_word());
  CHECK_THROWS_AS(representatives(big, 16), CapExceeded);
}

TEST_CASE("closures are equivalence classes") {
  for (int n = 0; n <= 8; ++n) {
    for (const Word& x : all_words(n)) {
      const auto reps = representatives(x);
      for (const Word& u : reps) {
        CHECK(representatives(u) == reps);
        CHECK(u.size() == x.size());
      }
    }
  }
}

TEST_CASE("closure membership matches normal-form equality") {
  // Exhaustively at every length <= 12: two words represent the same
  // braid iff they share a normal form.
  for (int n = 0; n <= 12; ++n) {
    std::map<std::string, std::set<std::string>> by_form;
    for (const Word& x : all_words(n)) {
      by_form[normal_form(x).str()].insert(x.str());
    }
    std::size_t covered = 0;
    for (const auto& [form, group] : by_form) {
      const Word seed = Word::parse(*group.begin());
      CHECK(strs(representatives(seed)) == group);
      covered += group.size();
    }
    CHECK(covered == (std::size_t{1} << n));
  }
}

TEST_SUITE_END();
