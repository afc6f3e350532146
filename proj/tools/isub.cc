// Copyright 2026 The isub Authors
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

// isub: analyze graphs, generate instances, search for induced
// subdivisions, verify certificates, and run the lemma procedures.
//
// Exit codes: 0 success, 1 not found / invalid certificate, 2 hypothesis
// not met, 3 usage error, 4 budget exhausted.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "isub/certificate.h"
#include "isub/connectivity.h"
#include "isub/generators.h"
#include "isub/graph.h"
#include "isub/pipeline.h"
#include "isub/profile.h"
#include "isub/subdivision.h"

namespace {

using namespace isub;

constexpr int kOk = 0;
constexpr int kNotFound = 1;
constexpr int kHypothesis = 2;
constexpr int kUsage = 3;
constexpr int kBudget = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string out;
  std::string report;
  std::optional<std::uint64_t> seed;
  std::string profile = "relaxed";
  std::vector<std::string> overrides;
  std::int64_t trials = 0;
  std::int64_t rounds = 0;
  std::int64_t budget = 0;

  std::string header() const {
    std::ostringstream h;
    h << "# isub " << command;
    for (const auto& in : inputs) h << ' ' << in;
    h << "\n# seed=" << (seed ? std::to_string(*seed) : "none") << " profile=" << profile;
    for (const auto& o : overrides) h << " set:" << o;
    if (trials) h << " trials=" << trials;
    if (rounds) h << " rounds=" << rounds;
    if (budget) h << " budget=" << budget;
    h << '\n';
    return h.str();
  }

  ConstantsProfile make_profile() const {
    ConstantsProfile p = ConstantsProfile::by_name(profile);
    for (const auto& o : overrides) p.set(o);
    if (trials) p.max_trials = static_cast<int>(trials);
    if (rounds) p.max_rounds = static_cast<int>(rounds);
    if (budget) p.brute_force_budget = budget;
    return p;
  }

  std::uint64_t need_seed() const {
    if (!seed) throw UsageError(command + " is randomized and needs --seed");
    return *seed;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

// A path to an edge-list file, or a named graph such as "petersen".
Graph read_graph(const std::string& spec) {
  if (std::filesystem::exists(spec)) return load_graph(slurp(spec));
  try {
    return gen_named(spec);
  } catch (const Error&) {
    throw UsageError("no such file or named graph: " + spec);
  }
}

// "role R: v1 v2 ..." lines, as written by `gen --manifest`.
std::map<std::string, VertexSet> read_roles(const std::string& path) {
  std::map<std::string, VertexSet> roles;
  std::istringstream in(slurp(path));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.starts_with("role ")) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string name = line.substr(5, colon - 5);
    std::istringstream vs(line.substr(colon + 1));
    VertexSet set;
    for (Vertex v; vs >> v;) set.push_back(v);
    roles[name] = make_vertex_set(std::move(set));
  }
  return roles;
}

VertexSet parse_list(const std::string& text) {
  VertexSet out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError("bad vertex id '" + tok + "'");
    }
  }
  return make_vertex_set(std::move(out));
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotFound:
    case ErrorKind::kDisconnected:
    case ErrorKind::kStructureViolation:
      return kNotFound;
    case ErrorKind::kHypothesisNotMet:
      return kHypothesis;
    case ErrorKind::kInvalidInput:
    case ErrorKind::kUnknownName:
    case ErrorKind::kParseError:
      return kUsage;
    case ErrorKind::kBudgetExhausted:
    case ErrorKind::kTrialsExhausted:
    case ErrorKind::kRoundsExhausted:
    case ErrorKind::kAttemptsExhausted:
      return kBudget;
    default:
      return kNotFound;
  }
}

void emit_certificate(const RunConfig& cfg, const SubdivisionCertificate& c) {
  if (cfg.out.empty()) return;
  write_file(cfg.out, cfg.header() + format_certificate(c));
  std::cerr << "certificate written to " << cfg.out << '\n';
}

void emit_report(const RunConfig& cfg, const Report& r) {
  std::cerr << r.to_text();
  if (!cfg.report.empty()) write_file(cfg.report, cfg.header() + r.to_text());
}

int run_analyze(const RunConfig& cfg) {
  Graph g = read_graph(cfg.inputs.at(0));
  auto gi = girth(g);
  std::cout << "n=" << g.num_vertices() << " m=" << g.num_edges()
            << " girth=" << (gi ? std::to_string(*gi) : "none")
            << " degeneracy=" << degeneracy_ordering(g).degeneracy
            << " connectivity=" << vertex_connectivity(g) << '\n';
  return kOk;
}

int run_gen(const RunConfig& cfg, const std::string& family,
            const std::vector<std::string>& params, const std::string& manifest) {
  if (cfg.out.empty()) throw UsageError("gen needs --out");
  if (family.starts_with("named:")) {
    write_file(cfg.out, cfg.header() + format_graph(gen_named(family.substr(6))));
    return kOk;
  }
  PlantedParams pp;
  for (const auto& p : params) pp.set(p);
  RandomSource rng(cfg.need_seed());
  if (family == "regular") {
    Graph g = gen_regular_high_girth(pp.get_int("n", 50), pp.get_int("d", 3),
                                     pp.get_int("girth", 5), rng);
    write_file(cfg.out, cfg.header() + format_graph(g));
    return kOk;
  }
  auto inst = gen_planted(family, pp, rng, cfg.make_profile());
  write_file(cfg.out, cfg.header() + format_graph(inst.graph));
  if (!manifest.empty()) write_file(manifest, cfg.header() + inst.manifest_text());
  std::istringstream lines(inst.manifest_text());
  for (std::string line; std::getline(lines, line);) {
    if (!line.starts_with("role ")) std::cerr << line << '\n';
  }
  return kOk;
}

int run_find(const RunConfig& cfg, int target, const std::string& mode,
             const std::string& method) {
  if (mode != "plain" && mode != "induced") throw UsageError("--mode is plain or induced");
  if (target < 2) throw UsageError("--target must be at least 2");
  Graph g = read_graph(cfg.inputs.at(0));
  auto profile = cfg.make_profile();
  RandomSource rng(cfg.need_seed());
  bool exhaustive = method == "exhaustive" ||
                    (method == "auto" && g.num_vertices() <= profile.brute_force_max_n);
  std::optional<SubdivisionCertificate> cert;
  Report report;
  if (exhaustive) {
    cert = mode == "induced" ? brute_force_induced(g, target, profile.brute_force_budget)
                             : brute_force_plain(g, target, profile.brute_force_budget);
  } else if (mode == "plain") {
    cert = find_subdivision(g, target - 1, profile);
  } else {
    cert = theorem_main(g, target - 1, profile, rng, &report);
  }
  emit_report(cfg, report);
  if (!cert) {
    std::cout << "found: no\n";
    return kNotFound;
  }
  std::cout << "found: yes\n";
  emit_certificate(cfg, *cert);
  return kOk;
}

int run_verify(const RunConfig& cfg, const std::string& mode) {
  Graph g = read_graph(cfg.inputs.at(0));
  auto cert = parse_certificate(slurp(cfg.inputs.at(1)));
  auto r = verify_induced_subdivision(g, cert);
  std::cout << "plain: " << (r.valid_plain ? "yes" : "no") << '\n';
  std::cout << "induced: " << (r.valid_induced ? "yes" : "no") << '\n';
  for (const auto& v : r.violations) {
    std::cerr << v.kind << ':';
    for (Vertex w : v.witness) std::cerr << ' ' << w;
    std::cerr << '\n';
  }
  bool ok = mode == "plain" ? r.valid_plain : r.valid_induced;
  return ok ? kOk : kNotFound;
}

VertexSet role(const std::map<std::string, VertexSet>& roles, const std::string& name) {
  auto it = roles.find(name);
  if (it == roles.end()) throw UsageError("missing role set '" + name + "'");
  return it->second;
}

int run_lemma(const RunConfig& cfg, const std::string& name, int d,
              std::map<std::string, VertexSet> roles) {
  Graph g = read_graph(cfg.inputs.at(0));
  auto profile = cfg.make_profile();
  RandomSource rng(cfg.need_seed());
  Report report;
  try {
    if (name == "unbalanced") {
      auto c = lemma_unbalanced(g, role(roles, "a"), role(roles, "b"), d, profile, rng, &report);
      emit_report(cfg, report);
      emit_certificate(cfg, c);
    } else if (name == "largesub") {
      auto r = lemma_largesub(g, role(roles, "x"), d, profile, rng, &report);
      emit_report(cfg, report);
      std::ostringstream out;
      out << "role x_prime:";
      for (Vertex v : r.x_prime) out << ' ' << v;
      out << "\nrole y:";
      for (Vertex v : r.y) out << ' ' << v;
      out << '\n';
      if (!cfg.out.empty()) write_file(cfg.out, cfg.header() + out.str());
    } else if (name == "maxdegree") {
      auto c = lemma_maxdegree(g, role(roles, "u"), d, profile, rng, &report);
      emit_report(cfg, report);
      emit_certificate(cfg, c);
    } else if (name == "theorem") {
      auto c = theorem_main(g, d, profile, rng, &report);
      emit_report(cfg, report);
      emit_certificate(cfg, c);
    } else {
      throw UsageError("unknown lemma '" + name + "'");
    }
  } catch (const EarlySuccess& e) {
    emit_report(cfg, report);
    std::cerr << "early success: " << e.what() << '\n';
    emit_certificate(cfg, e.certificate);
  } catch (const Error&) {
    emit_report(cfg, report);
    throw;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced subdivisions in graphs of large girth"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&](CLI::App* sub, bool randomized) {
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--profile", cfg.profile, "full | relaxed | scaled:S");
    sub->add_option("--set", cfg.overrides, "profile override key=value");
    sub->add_option("--trials", cfg.trials, "retry cap");
    sub->add_option("--rounds", cfg.rounds, "resampling cap");
    sub->add_option("--budget", cfg.budget, "exhaustive search node budget");
    sub->add_option("--out,-o", cfg.out, "output file");
    if (randomized) sub->add_option("--report", cfg.report, "pipeline report file");
  };

  std::string graph, cert_path;
  auto* analyze = app.add_subcommand("analyze", "n, m, girth, degeneracy, connectivity");
  analyze->add_option("graph", graph, "edge-list file or named graph")->required();

  std::string family, manifest;
  std::vector<std::string> params;
  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->add_option("--family", family,
                  "named:NAME | regular | unbalanced | largesub | connectedgood | "
                  "maxdegree | case1 | case2")
      ->required();
  gen->add_option("--param", params, "family parameter key=value");
  gen->add_option("--manifest", manifest, "write roles and checks here");
  common(gen, false);

  int target = 4;
  std::string mode = "induced", method = "auto";
  auto* find = app.add_subcommand("find", "search for a K_t subdivision");
  find->add_option("--target", target, "t in K_t");
  find->add_option("--mode", mode, "plain | induced");
  find->add_option("--method", method, "auto | exhaustive | pipeline")
      ->check(CLI::IsMember({"auto", "exhaustive", "pipeline"}));
  find->add_option("graph", graph, "edge-list file or named graph")->required();
  common(find, true);

  std::string verify_mode = "induced";
  auto* verify = app.add_subcommand("verify", "check a certificate");
  verify->add_option("graph", graph)->required();
  verify->add_option("certificate", cert_path)->required();
  verify->add_option("--mode", verify_mode, "plain | induced")
      ->check(CLI::IsMember({"plain", "induced"}));

  std::string lemma_name, roles_file;
  std::vector<std::string> role_flags;
  int d = 3;
  auto* lemma = app.add_subcommand("lemma", "run one lemma procedure");
  lemma->add_option("name", lemma_name, "unbalanced | largesub | maxdegree | theorem")
      ->required();
  lemma->add_option("graph", graph)->required();
  lemma->add_option("-d", d, "target is K_{d+1}");
  lemma->add_option("--roles", roles_file, "manifest with 'role R: ...' lines");
  lemma->add_option("--role", role_flags, "R=v1,v2,... (overrides --roles)");
  common(lemma, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*analyze) {
      cfg.command = "analyze";
      cfg.inputs = {graph};
      return run_analyze(cfg);
    }
    if (*gen) {
      cfg.command = "gen --family " + family;
      return run_gen(cfg, family, params, manifest);
    }
    if (*find) {
      cfg.command = "find --target " + std::to_string(target) + " --mode " + mode;
      cfg.inputs = {graph};
      return run_find(cfg, target, mode, method);
    }
    if (*verify) {
      cfg.command = "verify";
      cfg.inputs = {graph, cert_path};
      return run_verify(cfg, verify_mode);
    }
    cfg.command = "lemma " + lemma_name;
    cfg.inputs = {graph};
    std::map<std::string, VertexSet> roles;
    if (!roles_file.empty()) roles = read_roles(roles_file);
    for (const auto& r : role_flags) {
      auto eq = r.find('=');
      if (eq == std::string::npos) throw UsageError("--role wants R=v1,v2,...");
      roles[r.substr(0, eq)] = parse_list(r.substr(eq + 1));
    }
    return run_lemma(cfg, lemma_name, d, std::move(roles));
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code(e.kind());
  }
}
