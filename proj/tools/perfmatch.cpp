// Copyright 2026 The perfmatch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "perfmatch.hpp"

namespace pm = perfmatch;

namespace {

constexpr int kExitFail = 1;   // an assertion or identity failed
constexpr int kExitUsage = 2;  // bad input, parameters or IO

struct Flags {
  int max_oracle = pm::kDefaultOracleGuard;
  double tolerance = 1e-9;
  std::string format = "json";
  std::string out;
};

void emit(const Flags& f, const std::string& text) {
  if (f.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(f.out);
  if (!os) throw std::runtime_error("cannot write " + f.out);
  os << text;
}

pm::GraphInput load(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  pm::json j;
  try {
    is >> j;
  } catch (const pm::json::exception& e) {
    throw pm::ParameterError(path + ": " + e.what());
  }
  try {
    return pm::graph_input_from_json(j);
  } catch (const pm::json::exception& e) {
    throw pm::ParameterError(path + ": " + e.what());
  }
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw pm::ParameterError(what + " must be an integer, got '" + s + "'");
  return v;
}

// gen <family> [params...]
pm::GraphInput generate(const std::vector<std::string>& args) {
  if (args.empty()) throw pm::ParameterError("gen needs a family");
  const std::string& fam = args[0];
  auto need = [&](std::size_t k) {
    if (args.size() != k + 1) throw pm::ParameterError("gen " + fam + " takes " + std::to_string(k) + " argument(s)");
  };
  auto cap = [&](const std::string& kind, int l) {
    if (kind == "pentacap") return pm::pentacap(l);
    if (kind == "hexacap") return pm::hexacap(l);
    throw pm::ParameterError("unknown cap family '" + kind + "'");
  };
  if (fam == "classic") {
    if (args.size() < 2 || args.size() > 3) throw pm::ParameterError("gen classic <name> [param]");
    const int p = args.size() == 3 ? parse_int(args[2], "parameter") : 0;
    return {args[1], pm::classic_embedding(args[1], p)};
  }
  if (fam == "pentacap" || fam == "hexacap") {
    need(1);
    const int l = parse_int(args[1], "layer count");
    return pm::family_input(fam + "-" + args[1], cap(fam, l), fam);
  }
  if (fam == "extend") {
    need(2);
    const int l = parse_int(args[2], "layer count");
    return pm::family_input("extended-" + args[1] + "-" + args[2], pm::extend_cap(cap(args[1], l)), "extended");
  }
  if (fam == "leapfrog") {
    if (args.size() < 3) throw pm::ParameterError("gen leapfrog <pentacap|hexacap> <layers> | gen leapfrog classic <name> [param]");
    pm::PlanarEmbedding base = args[1] == "classic"
                                   ? pm::classic_embedding(args[2], args.size() > 3 ? parse_int(args[3], "parameter") : 0)
                                   : cap(args[1], parse_int(args[2], "layer count")).embedding;
    return {"leapfrog-" + args[1] + "-" + args[2], pm::leapfrog(base), "leapfrog"};
  }
  throw pm::ParameterError("unknown family '" + fam + "' (classic, pentacap, hexacap, extend, leapfrog)");
}

int cmd_count(const Flags& f, const std::string& path, const std::string& method) {
  const pm::GraphInput in = load(path);
  std::optional<pm::BigInt> pf, orc;
  std::ostringstream os;
  if (method == "pfaffian" || method == "both") {
    if (in.embedding) {
      pf = pm::count_by_pfaffian(*in.embedding);
    } else if (in.attested_orientation) {
      if (in.graph.order() > f.max_oracle) throw pm::ParameterError("attested orientation cannot be certified above --max-oracle");
      if (!pm::verify_determinant_matching_bound(*in.attested_orientation, f.max_oracle).equality) {
        std::cerr << in.id << ": attested orientation is not pfaffian\n";
        return kExitFail;
      }
      pf = pm::count_with_orientation(*in.attested_orientation);
    } else {
      throw pm::ParameterError(in.id + ": pfaffian method needs an embedding or a pfaffian_orientation");
    }
    os << in.id << " pfaffian " << *pf << '\n';
  }
  if (method == "oracle" || method == "both") {
    if (in.graph.order() > f.max_oracle) {
      os << in.id << " oracle skipped (n=" << in.graph.order() << " > " << f.max_oracle << ")\n";
    } else {
      orc = pm::enumerate_perfect_matchings(in.graph, f.max_oracle);
      os << in.id << " oracle " << *orc << '\n';
    }
  }
  if (pf && orc) os << in.id << " both " << *pf << (*pf == *orc ? " = " : " != ") << *orc << '\n';
  emit(f, os.str());
  return pf && orc && *pf != *orc ? kExitFail : 0;
}

int cmd_bounds(const Flags& f, const std::vector<std::string>& files, bool corpus) {
  std::vector<pm::GraphInput> inputs;
  if (corpus) inputs = pm::builtin_corpus();
  for (const auto& p : files) inputs.push_back(load(p));
  if (inputs.empty()) throw pm::ParameterError("bounds needs input files or --corpus");
  const pm::CompareOptions opt{f.max_oracle, f.tolerance};

  std::vector<pm::BoundReport> reports;
  int status = 0;
  for (const auto& in : inputs) {
    try {
      reports.push_back(pm::compare_all(in, opt));
    } catch (const pm::ConsistencyError& e) {
      std::cerr << "FAIL " << e.what() << '\n';
      status = kExitFail;
    }
  }
  std::ostringstream os;
  if (f.format == "csv") {
    os << pm::csv_header() << '\n';
    for (const auto& r : reports) os << pm::to_csv_rows(r);
  } else {
    pm::json arr = pm::json::array();
    for (const auto& r : reports) arr.push_back(pm::to_json(r));
    os << pm::json{{"schema_version", pm::kReportSchemaVersion}, {"all_sound", status == 0}, {"reports", arr}}.dump(2)
       << '\n';
  }
  emit(f, os.str());
  return status;
}

int cmd_identities(const Flags& f, int n_max) {
  if (n_max < 8) throw pm::ParameterError("identities needs n-max >= 8");
  std::ostringstream os;
  int failures = 0;
  auto row = [&](const std::string& check, int n, bool ok, const std::string& detail) {
    if (!ok) ++failures;
    os << std::left << std::setw(22) << check << std::setw(5) << n << (ok ? "pass" : "FAIL");
    if (!detail.empty()) os << "  " << detail;
    os << '\n';
  };
  for (int n = 3; n <= n_max; ++n) {
    for (auto s : {pm::CycleSign::plus, pm::CycleSign::minus}) {
      const auto t = pm::t_matrix(n, s).matrix();
      const pm::BigInt direct = pm::exact_determinant(pm::IntMatrix::identity(n) - t * t);
      const pm::BigInt closed = pm::lucas_det(n, s);
      row(std::string("lucas_det") + pm::to_string(s), n, direct == closed, closed.str());
    }
  }
  for (int n = 3; n <= std::min(n_max, 16); ++n) {
    const auto d = pm::matching_poly_identity_details(n);
    row("matching_poly", n, d.ok(), "det(I+tT-) = " + d.det_minus.str());
  }
  const auto mono = pm::sequence_monotonicity_check(n_max);
  row("odd_increasing", n_max, mono.odd_increasing, "");
  row("even_decreasing", n_max, mono.even_decreasing, "");
  row("within_a3_a4", n_max, mono.within_first_pair, "");
  row("cube_root_20_max", n_max, mono.bounded_by_cube_root_20 && mono.equality_only_at_6,
      "a_6 = 400^(1/6) = 20^(1/3), attained only at n = 6");
  os << "a_n (display): ";
  for (std::size_t i = 0; i < mono.display.size(); ++i)
    os << (i ? " " : "") << std::fixed << std::setprecision(4) << mono.display[i];
  os << '\n' << (failures == 0 ? "all identities pass" : std::to_string(failures) + " identity check(s) failed") << '\n';
  emit(f, os.str());
  return failures == 0 ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect-matching counts and upper bounds for planar and pfaffian graphs"};
  app.require_subcommand(1);
  Flags flags;
  app.add_option("--max-oracle", flags.max_oracle, "Largest order for exhaustive enumeration")->check(CLI::Range(2, 64));
  app.add_option("--tolerance", flags.tolerance, "Relative log2 tolerance for bound checks")->check(CLI::PositiveNumber);
  app.add_option("--format", flags.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", flags.out, "Write output to this path instead of stdout");
  app.fallthrough();

  auto* gen = app.add_subcommand("gen", "Write a generated graph with its embedding as JSON");
  std::vector<std::string> gen_args;
  gen->add_option("args", gen_args, "family and parameters, e.g. 'pentacap 2' or 'classic octahedron'")->required();

  auto* count = app.add_subcommand("count", "Count perfect matchings of a graph file");
  std::string count_path, method = "both";
  count->add_option("file", count_path)->required();
  count->add_option("--method", method)->check(CLI::IsMember({"pfaffian", "oracle", "both"}));

  auto* bounds = app.add_subcommand("bounds", "Evaluate every applicable bound against the exact count");
  std::vector<std::string> bound_files;
  bool use_corpus = false;
  bounds->add_option("files", bound_files);
  bounds->add_flag("--corpus", use_corpus, "Include the built-in corpus");

  auto* ident = app.add_subcommand("identities", "Run the circulant determinant identity suite");
  int n_max = 16;
  ident->add_option("n-max", n_max)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      emit(flags, pm::to_json(generate(gen_args)).dump(2) + "\n");
      return 0;
    }
    if (*count) return cmd_count(flags, count_path, method);
    if (*bounds) return cmd_bounds(flags, bound_files, use_corpus);
    if (*ident) return cmd_identities(flags, n_max);
  } catch (const pm::ConsistencyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
