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

// Python bindings for the braid3 core. Braid words cross the boundary
// as text ("e" or a string over {'1','2'}); normal forms come back in
// their "D^m:tail" rendering, and structured results use the same JSON
// shapes as the command line tool.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "braid3/conjugacy.hpp"
#include "braid3/enumerate.hpp"
#include "braid3/json_io.hpp"
#include "braid3/normal_form.hpp"
#include "braid3/structure.hpp"
#include "braid3/verify.hpp"
#include "braid3/word.hpp"

namespace py = pybind11;

namespace {

using braid3::NormalForm;
using braid3::Word;

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) {
        out[py::str(key)] = json_to_py(value);
      }
      return out;
    }
    default:
      return py::none();
  }
}

NormalForm parse_nf(const std::string& word) {
  return braid3::normal_form(Word::parse(word));
}

std::vector<std::string> render_all(const std::vector<NormalForm>& forms) {
  std::vector<std::string> out;
  out.reserve(forms.size());
  for (const NormalForm& nf : forms) out.push_back(nf.str());
  return out;
}

std::vector<std::string> render_words(const std::vector<Word>& words) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const Word& w : words) out.push_back(w.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_braid3, m) {
  m.doc() = "Conjugacy classes of positive 3-braids";

  py::register_exception<braid3::ParseError>(m, "WordParseError",
                                             PyExc_ValueError);
  py::register_exception<braid3::CapExceeded>(m, "CapExceeded",
                                              PyExc_RuntimeError);

  m.def("normal_form",
        [](const std::string& word) { return parse_nf(word).str(); },
        py::arg("word"), "Normal form rendering \"D^m:tail\" of a word.");

  m.def("infimum",
        [](const std::string& word) { return parse_nf(word).infimum; },
        py::arg("word"), "Garside exponent of the normal form.");

  m.def("tail",
        [](const std::string& word) { return parse_nf(word).tail.str(); },
        py::arg("word"), "Delta-free tail of the normal form.");

  m.def("reflect",
        [](const std::string& word) {
          return Word::parse(word).reflected().str();
        },
        py::arg("word"), "Letterwise generator swap.");

  m.def("rotate",
        [](const std::string& word, unsigned k) {
          return Word::parse(word).rotated(k).str();
        },
        py::arg("word"), py::arg("k"), "Left rotation by k letters.");

  m.def("relation_neighbors",
        [](const std::string& word) {
          return render_words(braid3::relation_neighbors(Word::parse(word)));
        },
        py::arg("word"), "Single applications of the braid relation.");

  m.def("representatives",
        [](const std::string& word, std::size_t cap) {
          return render_words(braid3::representatives(Word::parse(word), cap));
        },
        py::arg("word"), py::arg("cap") = braid3::kDefaultClosureCap,
        "All words representing the same braid.");

  m.def("cyclic_class",
        [](const std::string& word, std::size_t cap) {
          return render_all(
              braid3::cyclic_class(parse_nf(word), cap)->members());
        },
        py::arg("word"), py::arg("cap") = braid3::kDefaultClosureCap,
        "Members of the cyclic-equivalence class, sorted.");

  m.def("are_conjugate",
        [](const std::string& a, const std::string& b, std::size_t cap) {
          return braid3::are_conjugate(parse_nf(a), parse_nf(b), cap);
        },
        py::arg("a"), py::arg("b"), py::arg("cap") = braid3::kDefaultClosureCap,
        "Decide conjugacy of two positive braids.");

  m.def("conjugate_by_simple",
        [](const std::string& word, const std::string& simple,
           std::size_t cap) -> py::object {
          const auto s = braid3::simple_from_name(simple);
          if (!s) throw py::value_error("unknown simple element: " + simple);
          const auto result =
              braid3::conjugate_by_simple(parse_nf(word), *s, cap);
          if (!result) return py::none();
          return py::str(result->str());
        },
        py::arg("word"), py::arg("simple"),
        py::arg("cap") = braid3::kDefaultClosureCap,
        "s^-1 a s when positive, else None. Simples: e 1 2 12 21 delta.");

  m.def("positive_conjugates",
        [](const std::string& word, std::size_t cap) {
          return render_all(braid3::positive_conjugates(parse_nf(word), cap));
        },
        py::arg("word"), py::arg("cap") = braid3::kDefaultClosureCap,
        "All positive conjugates, by brute-force simple-element closure.");

  m.def("class_report",
        [](const std::string& word, std::size_t cap) {
          return json_to_py(
              braid3::to_json(braid3::class_report(parse_nf(word), cap)));
        },
        py::arg("word"), py::arg("cap") = braid3::kDefaultClosureCap,
        "Conjugacy class and its cyclic decomposition.");

  m.def("find_ccbar_power",
        [](const std::string& word, std::size_t cap) -> py::object {
          const auto power =
              braid3::find_ccbar_power(parse_nf(word), cap);
          if (!power) return py::none();
          return json_to_py(braid3::to_json(power));
        },
        py::arg("word"), py::arg("cap") = braid3::kDefaultClosureCap,
        "Minimal factorization as (c reflect(c))^l, or None.");

  m.def("shape_condition",
        [](const std::string& word) {
          return braid3::shape_condition(parse_nf(word));
        },
        py::arg("word"));

  m.def("coincidence",
        [](const std::string& word, std::size_t cap) {
          return json_to_py(
              braid3::to_json(braid3::coincidence(parse_nf(word), cap)));
        },
        py::arg("word"), py::arg("cap") = braid3::kDefaultClosureCap,
        "Three-condition verdict on class == cyclic class.");

  m.def("delta_free_words",
        [](int length) {
          return render_words(braid3::delta_free_words(length));
        },
        py::arg("length"));

  m.def("all_normal_forms",
        [](int length) { return render_all(braid3::all_normal_forms(length)); },
        py::arg("length"));

  m.def("enumerate_classes",
        [](int length, std::size_t cap) {
          return json_to_py(
              braid3::to_json(braid3::enumerate_classes(length, cap)));
        },
        py::arg("length"), py::arg("cap") = braid3::kDefaultClosureCap,
        "Class table of one braid length.");

  m.def("verify_suite",
        [](const std::string& name, int max_len, std::size_t cap,
           int threads) {
          return json_to_py(
              braid3::to_json(braid3::run_suite(name, max_len, cap, threads)));
        },
        py::arg("name"), py::arg("max_len") = -1,
        py::arg("cap") = braid3::kDefaultClosureCap, py::arg("threads") = 0,
        "Run one exhaustive verification suite.");

  m.def("suite_names", [] { return braid3::suite_names(); });

  m.attr("__version__") = "1.0.0";
}
