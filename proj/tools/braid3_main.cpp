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

// braid3: conjugacy classes of positive 3-braids from the command line.
//
// Words are written over {'1','2'} ("1121" = sigma1 sigma1 sigma2 sigma1);
// the identity is "e". Exit codes: 0 success (or boolean true), 1
// verification failure or boolean false under --exit-code, 2 usage or
// parse error, 3 resource cap exceeded.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "braid3/conjugacy.hpp"
#include "braid3/enumerate.hpp"
#include "braid3/json_io.hpp"
#include "braid3/normal_form.hpp"
#include "braid3/structure.hpp"
#include "braid3/verify.hpp"
#include "braid3/word.hpp"

namespace {

using braid3::NormalForm;
using braid3::Word;
using nlohmann::json;

constexpr int kCacheSchemaVersion = 1;
constexpr int kEnumerateSoftLimit = 20;

struct Options {
  std::string format = "text";
  bool stable = false;
  bool exit_code = false;
  std::size_t cap = braid3::kDefaultClosureCap;
  std::string cache_dir;
  int threads = 0;
};

struct Outcome {
  json result;
  std::string text;
  int exit_status = 0;
};

double ms_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void emit(const Options& opt, const std::string& command,
          const std::vector<std::string>& inputs, const Outcome& out,
          double elapsed_ms) {
  if (opt.format == "json") {
    json envelope = {{"command", command},
                     {"inputs", inputs},
                     {"result", out.result}};
    if (!opt.stable) envelope["elapsed_ms"] = elapsed_ms;
    std::cout << envelope.dump(2) << "\n";
  } else {
    std::cout << out.text;
  }
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string class_text(const braid3::ClassReport& report) {
  std::ostringstream os;
  os << "class of " << report.representative().str() << ": " << report.size()
     << " members, " << report.cyclic_classes.size()
     << " cyclic class(es), coincides: " << yesno(report.coincides) << "\n";
  for (const auto& cc : report.cyclic_classes) {
    os << "  cyclic class " << cc->representative().str() << ": " << cc->size()
       << " members\n";
    for (const NormalForm& nf : cc->members()) {
      os << "    " << nf.str() << "\n";
    }
  }
  return os.str();
}

std::string suite_text(const braid3::SuiteResult& r) {
  std::ostringstream os;
  os << "suite=" << r.suite << " max_len=" << r.max_len
     << " instances=" << r.instances_checked;
  if (r.suite == "structure") os << " splits=" << r.splits_checked;
  os << " failures=" << r.failures.size() << " "
     << (r.passed() ? "PASS" : "FAIL") << " (" << std::fixed
     << std::setprecision(2) << r.elapsed_seconds << "s)\n";
  for (const std::string& f : r.failures) os << "  " << f << "\n";
  return os.str();
}

// ---- class-table cache -----------------------------------------------
//
// One JSON-lines file per length: a header line with the schema version
// followed by one class report per line. A stale or foreign file is
// ignored and rewritten.

std::filesystem::path cache_path(const std::string& dir, int length) {
  return std::filesystem::path(dir) /
         ("classes-len" + std::to_string(length) + ".jsonl");
}

std::optional<json> load_cached_table(const std::string& dir, int length) {
  std::ifstream in(cache_path(dir, length));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  json header = json::parse(line, nullptr, false);
  if (header.is_discarded() || !header.is_object() ||
      header.value("schema_version", -1) != kCacheSchemaVersion ||
      header.value("length", -1) != length) {
    return std::nullopt;
  }
  json classes = json::array();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json cls = json::parse(line, nullptr, false);
    if (cls.is_discarded()) return std::nullopt;
    classes.push_back(std::move(cls));
  }
  if (classes.size() != header.value("class_count", std::size_t{0})) {
    return std::nullopt;
  }
  return json{{"length", length},
              {"braid_count", header.value("braid_count", std::size_t{0})},
              {"class_count", classes.size()},
              {"classes", std::move(classes)}};
}

void store_cached_table(const std::string& dir, const json& table) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;  // cache is best-effort
  const int length = table.at("length").get<int>();
  std::ofstream out(cache_path(dir, length), std::ios::trunc);
  if (!out) return;
  const json header = {{"schema_version", kCacheSchemaVersion},
                       {"length", length},
                       {"braid_count", table.at("braid_count")},
                       {"class_count", table.at("class_count")}};
  out << header.dump() << "\n";
  for (const json& cls : table.at("classes")) out << cls.dump() << "\n";
}

// ---- commands ---------------------------------------------------------

Outcome run_normal(const std::string& word) {
  const NormalForm nf = braid3::normal_form(Word::parse(word));
  Outcome out;
  out.result = {{"normal_form", nf.str()},
                {"infimum", nf.infimum},
                {"tail", nf.tail.str()}};
  out.text = nf.str() + "\n";
  return out;
}

Outcome run_reflect(const std::string& word) {
  const Word r = Word::parse(word).reflected();
  Outcome out;
  out.result = {{"word", r.str()}};
  out.text = r.str() + "\n";
  return out;
}

Outcome run_cyclic_class(const Options& opt, const std::string& word) {
  const NormalForm nf = braid3::normal_form(Word::parse(word));
  const braid3::CyclicClassPtr cc = braid3::cyclic_class(nf, opt.cap);
  Outcome out;
  out.result = braid3::to_json(*cc);
  std::ostringstream os;
  os << "cyclic class of " << nf.str() << ": " << cc->size() << " members\n";
  for (const NormalForm& m : cc->members()) os << "  " << m.str() << "\n";
  out.text = os.str();
  return out;
}

Outcome run_class(const Options& opt, const std::string& word) {
  const NormalForm nf = braid3::normal_form(Word::parse(word));
  const braid3::ClassReport report = braid3::class_report(nf, opt.cap);
  Outcome out;
  out.result = braid3::to_json(report);
  out.text = class_text(report);
  return out;
}

Outcome run_conjugate(const Options& opt, const std::string& lhs,
                      const std::string& rhs) {
  const NormalForm a = braid3::normal_form(Word::parse(lhs));
  const NormalForm b = braid3::normal_form(Word::parse(rhs));
  const bool conjugate = braid3::are_conjugate(a, b, opt.cap);
  Outcome out;
  out.result = {{"conjugate", conjugate}};
  out.text = std::string(conjugate ? "true" : "false") + "\n";
  out.exit_status = (opt.exit_code && !conjugate) ? 1 : 0;
  return out;
}

Outcome run_ccbar(const Options& opt, const std::string& word) {
  const NormalForm nf = braid3::normal_form(Word::parse(word));
  const auto power = braid3::find_ccbar_power(nf, opt.cap);
  Outcome out;
  out.result = braid3::to_json(power);
  if (power) {
    out.text = "c=" + power->c.str() +
               " exponent=" + std::to_string(power->exponent) +
               " minimal=" + (power->minimal ? "true" : "false") + "\n";
  } else {
    out.text = "none\n";
  }
  return out;
}

Outcome run_coincide(const Options& opt, const std::string& word) {
  const NormalForm nf = braid3::normal_form(Word::parse(word));
  const braid3::CoincidenceVerdict v = braid3::coincidence(nf, opt.cap);
  Outcome out;
  out.result = braid3::to_json(v);
  std::ostringstream os;
  os << "coincides=" << (v.coincides ? "true" : "false")
     << " (infimum_zero=" << yesno(v.infimum_zero)
     << " lemma_shape=" << yesno(v.lemma_shape)
     << " no_ccbar_power=" << yesno(v.no_ccbar_power) << ")\n";
  out.text = os.str();
  out.exit_status = (opt.exit_code && !v.coincides) ? 1 : 0;
  return out;
}

Outcome run_enumerate(const Options& opt, int length, bool force) {
  if (length > kEnumerateSoftLimit && !force) {
    throw braid3::CapExceeded(
        "refusing to enumerate length " + std::to_string(length) +
        " (limit " + std::to_string(kEnumerateSoftLimit) +
        "); pass --force to override");
  }
  Outcome out;
  json table;
  std::optional<json> cached;
  if (!opt.cache_dir.empty()) {
    cached = load_cached_table(opt.cache_dir, length);
  }
  if (cached) {
    table = std::move(*cached);
  } else {
    table = braid3::to_json(braid3::enumerate_classes(length, opt.cap));
    if (!opt.cache_dir.empty()) store_cached_table(opt.cache_dir, table);
  }
  out.result = table;
  std::ostringstream os;
  os << "length " << length << ": " << table.at("braid_count").get<long long>()
     << " braids in " << table.at("class_count").get<long long>()
     << " conjugacy classes\n";
  for (const json& cls : table.at("classes")) {
    os << "  " << cls.at("representative").get<std::string>()
       << "  size=" << cls.at("size").get<long long>()
       << " cyclic_classes=" << cls.at("cyclic_classes").size()
       << " coincides=" << yesno(cls.at("coincides").get<bool>()) << "\n";
  }
  out.text = os.str();
  return out;
}

Outcome run_verify(const Options& opt, const std::string& suite,
                   int max_len) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = braid3::suite_names();
  } else {
    names.push_back(suite);
  }
  Outcome out;
  json results = json::array();
  std::string text;
  bool all_passed = true;
  for (const std::string& name : names) {
    const braid3::SuiteResult r =
        braid3::run_suite(name, max_len, opt.cap, opt.threads);
    all_passed = all_passed && r.passed();
    results.push_back(braid3::to_json(r));
    text += suite_text(r);
  }
  if (suite == "all") {
    out.result = {{"suites", std::move(results)}, {"passed", all_passed}};
  } else {
    out.result = std::move(results.front());
  }
  out.text = std::move(text);
  out.exit_status = all_passed ? 0 : 1;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy classes of positive 3-braids"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--stable", opt.stable,
               "Omit timing from JSON output (byte-stable payloads)");
  app.add_flag("--exit-code", opt.exit_code,
               "Exit 1 when a boolean query answers false");
  app.add_option("--cap", opt.cap, "Closure size cap")
      ->capture_default_str();
  app.add_option("--cache", opt.cache_dir,
                 "Class-table cache directory (enumerate only)")
      ->envname("BRAID3_CACHE");
  app.add_option("--threads", opt.threads,
                 "Worker threads for verify (0 = hardware)");

  std::string word, word2, suite;
  int length = 0, max_len = -1;
  bool force = false;

  CLI::App* cmd_normal = app.add_subcommand("normal", "Normal form of a word");
  cmd_normal->add_option("word", word, "Braid word")->required();

  CLI::App* cmd_reflect =
      app.add_subcommand("reflect", "Letterwise generator swap of a word");
  cmd_reflect->add_option("word", word, "Braid word")->required();

  CLI::App* cmd_cyclic =
      app.add_subcommand("cyclic-class", "Cyclic-equivalence class");
  cmd_cyclic->add_option("word", word, "Braid word")->required();

  CLI::App* cmd_class = app.add_subcommand(
      "class", "Conjugacy class with its cyclic decomposition");
  cmd_class->add_option("word", word, "Braid word")->required();

  CLI::App* cmd_conj =
      app.add_subcommand("conjugate", "Decide conjugacy of two words");
  cmd_conj->add_option("word1", word, "First braid word")->required();
  cmd_conj->add_option("word2", word2, "Second braid word")->required();

  CLI::App* cmd_ccbar = app.add_subcommand(
      "ccbar", "Factor as a power of c followed by its reflection");
  cmd_ccbar->add_option("word", word, "Braid word")->required();

  CLI::App* cmd_coincide = app.add_subcommand(
      "coincide", "Does the conjugacy class equal the cyclic class?");
  cmd_coincide->add_option("word", word, "Braid word")->required();

  CLI::App* cmd_enum = app.add_subcommand(
      "enumerate", "All conjugacy classes of one braid length");
  cmd_enum->add_option("length", length, "Braid length")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_enum->add_flag("--force", force,
                     "Enumerate lengths beyond the built-in limit");

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "Run an exhaustive verification suite");
  {
    std::vector<std::string> allowed = braid3::suite_names();
    allowed.push_back("all");
    cmd_verify->add_option("--suite", suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(allowed));
  }
  cmd_verify->add_option("--max-len", max_len,
                         "Exhaustive bound (default: per suite)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome out;
    std::vector<std::string> inputs;
    std::string command;
    if (cmd_normal->parsed()) {
      command = "normal";
      inputs = {word};
      out = run_normal(word);
    } else if (cmd_reflect->parsed()) {
      command = "reflect";
      inputs = {word};
      out = run_reflect(word);
    } else if (cmd_cyclic->parsed()) {
      command = "cyclic-class";
      inputs = {word};
      out = run_cyclic_class(opt, word);
    } else if (cmd_class->parsed()) {
      command = "class";
      inputs = {word};
      out = run_class(opt, word);
    } else if (cmd_conj->parsed()) {
      command = "conjugate";
      inputs = {word, word2};
      out = run_conjugate(opt, word, word2);
    } else if (cmd_ccbar->parsed()) {
      command = "ccbar";
      inputs = {word};
      out = run_ccbar(opt, word);
    } else if (cmd_coincide->parsed()) {
      command = "coincide";
      inputs = {word};
      out = run_coincide(opt, word);
    } else if (cmd_enum->parsed()) {
      command = "enumerate";
      inputs = {std::to_string(length)};
      out = run_enumerate(opt, length, force);
    } else {
      command = "verify";
      inputs = {suite};
      out = run_verify(opt, suite, max_len);
    }
    emit(opt, command, inputs, out, ms_since(start));
    return out.exit_status;
  } catch (const braid3::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const braid3::CapExceeded& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
