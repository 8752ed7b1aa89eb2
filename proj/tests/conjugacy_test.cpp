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

#include <random>

#include "braid3/conjugacy.hpp"
#include "braid3/enumerate.hpp"
#include "test_util.hpp"

using namespace braid3;
using testutil::nf;
using testutil::random_word;
using testutil::strs;
using testutil::w;

TEST_SUITE_BEGIN("conjugacy");

TEST_CASE("simple elements") {
  CHECK(all_simples().size() == 6);
  CHECK(simple_word(Simple::identity) == w("e"));
  CHECK(simple_word(Simple::s1) == w("1"));
  CHECK(simple_word(Simple::s2) == w("2"));
  CHECK(simple_word(Simple::s12) == w("12"));
  CHECK(simple_word(Simple::s21) == w("21"));
  CHECK(simple_word(Simple::delta) == w("121"));
  CHECK(simple_from_name("delta") == Simple::delta);
  CHECK(simple_from_name("212") == Simple::delta);
  CHECK(simple_from_name("12") == Simple::s12);
  CHECK(!simple_from_name("22").has_value());
  // Each simple left-divides the Garside element.
  for (Simple s : all_simples()) {
    CHECK(conjugate_by_simple(nf("121"), s).has_value());
  }
}

TEST_CASE("cyclic class examples") {
  CHECK(strs(cyclic_class(nf("1111"))->members()) ==
        std::set<std::string>{"D^0:1111"});
  CHECK(strs(cyclic_class(nf("1112"))->members()) ==
        std::set<std::string>{"D^0:1112", "D^0:1222", "D^0:2111", "D^0:2221",
                              "D^1:1", "D^1:2"});
  CHECK(strs(cyclic_class(nf("1122"))->members()) ==
        std::set<std::string>{"D^0:1122", "D^0:1221", "D^0:2112",
                              "D^0:2211"});
  CHECK(cyclic_class(nf("e"))->size() == 1);
}

TEST_CASE("cyclic class is seed independent and memoized") {
  const CyclicClassPtr via_a = cyclic_class(nf("1112"));
  for (const NormalForm& member : via_a->members()) {
    CHECK(cyclic_class(member) == via_a);  // shared from the memo
  }
  clear_cyclic_class_cache();
  const CyclicClassPtr fresh = cyclic_class(nf("1212"));
  CHECK(strs(fresh->members()) == strs(via_a->members()));
}

TEST_CASE("cyclic class respects the closure cap") {
  Word big;
  for (int i = 0; i < 6; ++i) big = big.append(delta_word());
  clear_cyclic_class_cache();
  CHECK_THROWS_AS(cyclic_class(normal_form(big), 32), CapExceeded);
}

TEST_CASE("conjugacy decisions") {
  CHECK(are_conjugate(nf("1111"), nf("2222")));
  CHECK(!are_conjugate(nf("1111"), nf("1122")));
  CHECK(!are_conjugate(nf("1111"), nf("11111")));
  CHECK(are_conjugate(nf("1112"), nf("1212")));
  std::mt19937 rng(41);
  for (int i = 0; i < 100; ++i) {
    const NormalForm a = normal_form(random_word(rng, 0, 12));
    CHECK(are_conjugate(a, a));
    CHECK(are_conjugate(a, reflected(a)));  // conjugation by the Garside element
  }
}

TEST_CASE("conjugation by identity and by the garside element") {
  std::mt19937 rng(43);
  for (int i = 0; i < 150; ++i) {
    const NormalForm a = normal_form(random_word(rng, 0, 12));
    CHECK(conjugate_by_simple(a, Simple::identity) == a);
    CHECK(conjugate_by_simple(a, Simple::delta) == reflected(a));
  }
}

TEST_CASE("conjugation that would leave the monoid is rejected") {
  CHECK(!conjugate_by_simple(nf("12"), Simple::s2).has_value());
  CHECK(!conjugate_by_simple(nf("1"), Simple::s2).has_value());
  const auto back_in_class = conjugate_by_simple(nf("1121"), Simple::s1);
  REQUIRE(back_in_class.has_value());
  CHECK(cyclic_class(nf("1121"))->contains(*back_in_class));
}

TEST_CASE("brute-force conjugates") {
  CHECK(strs(positive_conjugates(nf("1111"))) ==
        std::set<std::string>{"D^0:1111", "D^0:2222"});
  CHECK(strs(positive_conjugates(nf("1112"))) ==
        std::set<std::string>{"D^0:1112", "D^0:1222", "D^0:2111", "D^0:2221",
                              "D^1:1", "D^1:2"});
  CHECK(strs(positive_conjugates(nf("e"))) == std::set<std::string>{"D^0:e"});
}

TEST_CASE("class reports") {
  ClassReport r = class_report(nf("1111"));
  CHECK(r.size() == 2);
  CHECK(!r.coincides);
  REQUIRE(r.cyclic_classes.size() == 2);
  CHECK(r.cyclic_classes[0]->size() == 1);
  CHECK(r.cyclic_classes[1]->size() == 1);
  CHECK(r.representative().str() == "D^0:1111");

  r = class_report(nf("1122"));
  CHECK(r.size() == 4);
  CHECK(r.coincides);
  CHECK(r.cyclic_classes.size() == 1);

  r = class_report(nf("1112"));
  CHECK(r.size() == 6);
  CHECK(r.coincides);
  CHECK(r.cyclic_classes.size() == 1);

  // Identical report from any member.
  const ClassReport again = class_report(nf("2121"));
  CHECK(strs(again.members) == strs(r.members));
  CHECK(again.representative() == r.representative());
}

TEST_CASE("reflection equivariance of cyclic classes") {
  for (int n = 0; n <= 8; ++n) {
    for (const NormalForm& a : all_normal_forms(n)) {
      std::set<std::string> mirrored;
      for (const NormalForm& m : cyclic_class(a)->members()) {
        mirrored.insert(reflected(m).str());
      }
      CHECK(strs(cyclic_class(reflected(a))->members()) == mirrored);
    }
  }
}

TEST_CASE("members of a cyclic class share the seed's length") {
  std::mt19937 rng(47);
  for (int i = 0; i < 60; ++i) {
    const NormalForm a = normal_form(random_word(rng, 0, 12));
    for (const NormalForm& m : cyclic_class(a)->members()) {
      CHECK(m.length() == a.length());
    }
  }
}

TEST_SUITE_END();
