/*
Copyright 2026 The qnc Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Batch command-line front end. Talks to the library only through qnc.h.

#include <cstdint>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "qnc/qnc.h"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitViolation = 3;

struct Failure {
  qnc_status status;
};

void ok(qnc_status s) {
  if (s != QNC_OK) throw Failure{s};
}

std::string take(char* s) {
  std::string out(s);
  qnc_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Space = std::unique_ptr<qnc_space, Deleter<qnc_space, qnc_space_free>>;
using Norm = std::unique_ptr<qnc_norm, Deleter<qnc_norm, qnc_norm_free>>;
using Quotient = std::unique_ptr<qnc_quotient, Deleter<qnc_quotient, qnc_quotient_free>>;
using Map = std::unique_ptr<qnc_map, Deleter<qnc_map, qnc_map_free>>;

Space load_space(const std::string& path) {
  qnc_space* s = nullptr;
  ok(qnc_space_load(path.c_str(), &s));
  return Space(s);
}

Norm load_norm(const std::string& path) {
  qnc_norm* n = nullptr;
  ok(qnc_norm_load(path.c_str(), &n));
  return Norm(n);
}

Map load_map(const std::string& path) {
  qnc_map* m = nullptr;
  ok(qnc_map_load(path.c_str(), &m));
  return Map(m);
}

struct QuotientArgs {
  std::string space, norm, subcone, desc;
  std::size_t budget = 64;
};

void add_quotient_options(CLI::App* cmd, QuotientArgs& a) {
  auto* desc = cmd->add_option("--desc", a.desc, "quotient description file {space, p, subcone}");
  cmd->add_option("--space", a.space, "cone file")->excludes(desc);
  cmd->add_option("--norm", a.norm, "quasi-norm file")->excludes(desc);
  cmd->add_option("--subcone", a.subcone, "subcone file")->excludes(desc);
  cmd->add_option("--budget", a.budget, "grid pre-pass budget of the closedness falsifier");
}

Quotient load_quotient(const QuotientArgs& a) {
  qnc_quotient* q = nullptr;
  if (!a.desc.empty()) {
    ok(qnc_quotient_load(a.desc.c_str(), &q));
    return Quotient(q);
  }
  if (a.space.empty() || a.norm.empty() || a.subcone.empty())
    throw CLI::ValidationError("quotient", "give --desc or all of --space, --norm, --subcone");
  const Space x = load_space(a.space), y = load_space(a.subcone);
  const Norm p = load_norm(a.norm);
  ok(qnc_quotient_build(x.get(), p.get(), y.get(), a.budget, &q));
  return Quotient(q);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of quasi-normed cones, quotients and linear maps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qnc_version()));

  std::string space, norm, from, to, map_path;
  bool symmetric = false;
  auto* dist = app.add_subcommand("dist", "directed distance d_p(from, to)");
  dist->add_option("--space", space, "cone file")->required();
  dist->add_option("--norm", norm, "quasi-norm file")->required();
  dist->add_option("--from", from, "comma-separated rationals")->required();
  dist->add_option("--to", to, "comma-separated rationals")->required();
  dist->add_flag("--symmetric", symmetric, "print max(d(from,to), d(to,from))");

  QuotientArgs qa;
  std::string action, x_csv, y_csv;
  bool allow_prenorm = false;
  auto* quotient = app.add_subcommand("quotient", "quotient cone X/Y");
  add_quotient_options(quotient, qa);
  quotient->add_option("action", action, "build | class | hatp | qdist")
      ->required()
      ->check(CLI::IsMember({"build", "class", "hatp", "qdist"}));
  quotient->add_option("--x", x_csv, "element of X (class, hatp, qdist)");
  quotient->add_option("--y", y_csv, "second element of X (qdist)");
  quotient->add_flag("--allow-prenorm", allow_prenorm, "evaluate p-hat even when G_Y is not closed");

  auto* opnorm = app.add_subcommand("opnorm", "operator report of a linear map");
  opnorm->add_option("--map", map_path, "map file")->required();
  auto* analyze = app.add_subcommand("analyze", "operator report of a linear map");
  analyze->add_option("--map", map_path, "map file")->required();
  auto* factorize = app.add_subcommand("factorize", "T = T~ o phi through the quotient by the kernel");
  factorize->add_option("--map", map_path, "map file")->required();

  QuotientArgs pa;
  auto* polar = app.add_subcommand("polar", "generators of the polar of the subcone");
  add_quotient_options(polar, pa);

  std::string a_csv, b_csv;
  std::size_t n = 32;
  auto* complexity = app.add_subcommand("complexity", "dual complexity space");
  complexity->require_subcommand(1);
  auto* compare = complexity->add_subcommand("compare", "compare two running-cost series");
  compare->add_option("--a", a_csv, "CSV file with header index,cost")->required()->check(CLI::ExistingFile);
  compare->add_option("--b", b_csv, "CSV file with header index,cost")->required()->check(CLI::ExistingFile);
  compare->add_option("--n", n, "truncation length")->check(CLI::PositiveNumber);

  std::uint64_t seed = 1;
  std::size_t cases = 100;
  auto* check = app.add_subcommand("check", "run the randomized invariant suite");
  check->add_option("--seed", seed, "random seed");
  check->add_option("--cases", cases, "cases per property")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    char* out = nullptr;
    if (*dist) {
      const Space x = load_space(space);
      const Norm p = load_norm(norm);
      ok(qnc_dist(x.get(), p.get(), from.c_str(), to.c_str(), symmetric ? 1 : 0, &out));
      std::cout << take(out) << "\n";
    } else if (*quotient) {
      const Quotient q = load_quotient(qa);
      const int allow = allow_prenorm ? 1 : 0;
      if (action != "build" && x_csv.empty()) throw CLI::ValidationError("--x", "required for " + action);
      if (action == "build") {
        ok(qnc_quotient_certificate(q.get(), &out));
        std::cout << take(out) << "\n";
        ok(qnc_quotient_describe(q.get(), &out));
        std::cout << take(out) << "\n";
      } else if (action == "class") {
        ok(qnc_quotient_class(q.get(), x_csv.c_str(), &out));
        std::cout << take(out) << "\n";
      } else if (action == "hatp") {
        ok(qnc_quotient_hatp(q.get(), x_csv.c_str(), allow, &out));
        std::cout << take(out) << "\n";
      } else {
        if (y_csv.empty()) throw CLI::ValidationError("--y", "required for qdist");
        ok(qnc_quotient_qdist(q.get(), x_csv.c_str(), y_csv.c_str(), allow, &out));
        std::cout << take(out) << "\n";
      }
    } else if (*opnorm || *analyze) {
      const Map m = load_map(map_path);
      ok(qnc_map_analyze(m.get(), &out));
      std::cout << take(out) << "\n";
    } else if (*factorize) {
      const Map m = load_map(map_path);
      ok(qnc_map_factorize(m.get(), &out));
      std::cout << take(out) << "\n";
    } else if (*polar) {
      const Quotient q = load_quotient(pa);
      ok(qnc_quotient_polar(q.get(), &out));
      std::cout << take(out) << "\n";
    } else if (*compare) {
      ok(qnc_complexity_compare_files(a_csv.c_str(), b_csv.c_str(), n, &out));
      std::cout << take(out) << "\n";
    } else if (*check) {
      int passed = 0;
      ok(qnc_check(seed, cases, &out, &passed));
      std::cout << take(out) << "\n";
      if (!passed) return kExitViolation;
    }
  } catch (const Failure& f) {
    std::cerr << "error (" << qnc_status_name(f.status) << "): " << qnc_last_error() << "\n";
    return kExitValidation;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
