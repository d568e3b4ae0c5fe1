// Copyright 2026 The hypercover Authors
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

// hypercover command-line tool. Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypercover/hypercover.h"
#include "json.hpp"

namespace {

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

// Thrown for any failure that should end the run with exit code 1.
struct DomainFailure {
  std::string name;
  std::string message;
};

void Require(hc_status status) {
  if (status != HC_OK) {
    throw DomainFailure{hc_status_name(status), hc_last_error()};
  }
}

struct HypergraphDeleter {
  void operator()(hc_hypergraph* h) const { hc_hypergraph_free(h); }
};
struct GraphDeleter {
  void operator()(hc_graph* g) const { hc_graph_free(g); }
};
using HypergraphPtr = std::unique_ptr<hc_hypergraph, HypergraphDeleter>;
using GraphPtr = std::unique_ptr<hc_graph, GraphDeleter>;

// Takes ownership of a library-allocated string.
std::string Adopt(char* s) {
  std::string out(s);
  hc_string_free(s);
  return out;
}

struct Options {
  bool json = false;
  bool lenient = false;
  std::uint64_t seed = 0;
  std::string input;
  std::string positional;
};

std::string ReadInput(const Options& opts) {
  const std::string& path = opts.input.empty() ? opts.positional : opts.input;
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainFailure{"IoError", "cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

HypergraphPtr LoadHypergraph(const Options& opts) {
  const std::string text = ReadInput(opts);
  hc_hypergraph* h = nullptr;
  hc_parse_report report{};
  Require(hc_hypergraph_parse(text.data(), text.size(), opts.lenient ? 0 : 1,
                              &h, &report));
  if (report.merged_edges > 0) {
    std::cerr << "note: merged " << report.merged_edges
              << " duplicate edge(s)\n";
  }
  if (report.repeated_vertices > 0) {
    std::cerr << "warning: ignored " << report.repeated_vertices
              << " repeated vertex id(s) within edges\n";
  }
  return HypergraphPtr(h);
}

GraphPtr LoadGraph(const Options& opts) {
  const std::string text = ReadInput(opts);
  hc_graph* g = nullptr;
  std::size_t merged = 0;
  Require(
      hc_graph_parse(text.data(), text.size(), opts.lenient ? 0 : 1, &g, &merged));
  if (merged > 0) {
    std::cerr << "note: merged " << merged << " duplicate edge(s)\n";
  }
  return GraphPtr(g);
}

std::string Scalar(const nlohmann::json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& item : v) {
      if (!out.empty()) out += ' ';
      out += Scalar(item);
    }
    return out.empty() ? "(none)" : out;
  }
  return v.dump();
}

void Flatten(const nlohmann::json& doc, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>* rows) {
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      Flatten(*it, key, rows);
    } else {
      rows->emplace_back(key, Scalar(*it));
    }
  }
}

// JSON with --json, otherwise an aligned key: value table.
void Print(const std::string& json_text, const Options& opts) {
  const auto doc = nlohmann::json::parse(json_text);
  if (opts.json) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  Flatten(doc, "", &rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) {
    std::cout << k << ':' << std::string(width - k.size() + 1, ' ') << v
              << '\n';
  }
}

void WriteText(char* text) { std::cout << Adopt(text); }

std::vector<std::uint32_t> ParseIds(const std::string& list) {
  std::vector<std::uint32_t> ids;
  std::string token;
  std::istringstream in(list);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || value == 0 || value > UINT32_MAX) {
      throw CLI::ValidationError("--ids", "not a positive id: " + token);
    }
    ids.push_back(static_cast<std::uint32_t>(value));
  }
  return ids;
}

void AddInput(CLI::App* cmd, Options* opts) {
  cmd->add_option("--input", opts->input, "Input file, or - for stdin");
  cmd->add_option("file", opts->positional, "Input file, or - for stdin");
  cmd->callback([cmd, opts] {
    if (opts->input.empty() && opts->positional.empty()) {
      throw CLI::RequiredError(cmd->get_name() + ": an input file (or -)");
    }
  });
}

const std::map<std::string, hc_degeneracy_kind> kDegeneracyKinds = {
    {"strong", HC_DEGENERACY_STRONG},
    {"plain", HC_DEGENERACY_PLAIN},
    {"strong-bf", HC_DEGENERACY_STRONG_BF},
    {"plain-bf", HC_DEGENERACY_PLAIN_BF},
    {"mighty-bf", HC_DEGENERACY_MIGHTY_BF},
};

const std::map<std::string, hc_neighborhood> kNeighborhoods = {
    {"closed", HC_CLOSED},
    {"open", HC_OPEN},
};

const std::map<std::string, hc_problem> kProblems = {
    {"min-edge-cover", HC_MIN_EDGE_COVER},
    {"max-independent-set", HC_MAX_INDEPENDENT_SET},
    {"min-transversal", HC_MIN_TRANSVERSAL},
    {"max-matching", HC_MAX_MATCHING},
    {"min-dominating", HC_MIN_DOMINATING},
    {"min-total-dominating", HC_MIN_TOTAL_DOMINATING},
    {"max-2-packing", HC_MAX_TWO_PACKING},
    {"max-open-2-packing", HC_MAX_OPEN_TWO_PACKING},
};

const std::map<std::string, hc_set_kind> kSetKinds = {
    {"edge-cover", HC_SET_EDGE_COVER},
    {"independent-set", HC_SET_INDEPENDENT},
    {"transversal", HC_SET_TRANSVERSAL},
    {"matching", HC_SET_MATCHING},
    {"dominating", HC_SET_DOMINATING},
    {"total-dominating", HC_SET_TOTAL_DOMINATING},
    {"2-packing", HC_SET_TWO_PACKING},
    {"open-2-packing", HC_SET_OPEN_TWO_PACKING},
};

bool IsGraphProblem(hc_problem p) {
  return p == HC_MIN_DOMINATING || p == HC_MIN_TOTAL_DOMINATING ||
         p == HC_MAX_TWO_PACKING || p == HC_MAX_OPEN_TWO_PACKING;
}

bool IsGraphSetKind(hc_set_kind k) {
  return k == HC_SET_DOMINATING || k == HC_SET_TOTAL_DOMINATING ||
         k == HC_SET_TWO_PACKING || k == HC_SET_OPEN_TWO_PACKING;
}

int Run(int argc, char** argv) {
  CLI::App app{"Hypergraph covers, degeneracy and tree domination"};
  app.set_version_flag("--version", std::string(hc_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_flag("--json", opts.json, "Emit JSON instead of a table");
  bool strict = false;
  auto* strict_flag =
      app.add_flag("--strict", strict, "Reject duplicate edges (default)");
  app.add_flag("--lenient", opts.lenient, "Merge duplicate edges")
      ->excludes(strict_flag);
  app.add_option("--seed", opts.seed, "Seed for generators and samplers");

  std::function<void()> action;

  // gen
  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  gen->require_subcommand(1);
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_size = 0;
  double p = 0.0;
  bool cover_feasible = false;

  auto* gen_gap = gen->add_subcommand("gap", "Gap family hypergraph (.hg)");
  gen_gap->add_option("--n", n, "Number of vertices")->required();
  gen_gap->callback([&] {
    action = [&] {
      hc_hypergraph* h = nullptr;
      Require(hc_generate_gap(n, &h));
      HypergraphPtr owned(h);
      char* text = nullptr;
      Require(hc_hypergraph_write(h, &text));
      WriteText(text);
    };
  });

  auto* gen_tree = gen->add_subcommand("tree", "Uniform random tree (.gr)");
  gen_tree->add_option("--n", n, "Number of vertices")->required();
  gen_tree->add_option("--seed", opts.seed, "Seed");
  gen_tree->callback([&] {
    action = [&] {
      hc_graph* g = nullptr;
      Require(hc_generate_tree(n, opts.seed, &g));
      GraphPtr owned(g);
      char* text = nullptr;
      Require(hc_graph_write(g, &text));
      WriteText(text);
    };
  });

  auto* gen_hg = gen->add_subcommand("hg", "Random hypergraph (.hg)");
  gen_hg->add_option("--n", n, "Number of vertices")->required();
  gen_hg->add_option("--m", m, "Number of edges")->required();
  gen_hg->add_option("--max-size", max_size, "Largest edge size")->required();
  gen_hg->add_option("--seed", opts.seed, "Seed");
  gen_hg->add_flag("--cover-feasible", cover_feasible,
                   "Every vertex lies in some edge");
  gen_hg->callback([&] {
    action = [&] {
      hc_hypergraph* h = nullptr;
      Require(hc_generate_hypergraph(n, m, max_size, opts.seed,
                                     cover_feasible ? 1 : 0, &h));
      HypergraphPtr owned(h);
      char* text = nullptr;
      Require(hc_hypergraph_write(h, &text));
      WriteText(text);
    };
  });

  auto* gen_graph = gen->add_subcommand("graph", "G(n, p) random graph (.gr)");
  gen_graph->add_option("--n", n, "Number of vertices")->required();
  gen_graph->add_option("--p", p, "Edge probability")->required();
  gen_graph->add_option("--seed", opts.seed, "Seed");
  gen_graph->callback([&] {
    action = [&] {
      hc_graph* g = nullptr;
      Require(hc_generate_graph(n, p, opts.seed, &g));
      GraphPtr owned(g);
      char* text = nullptr;
      Require(hc_graph_write(g, &text));
      WriteText(text);
    };
  });

  // degeneracy
  auto* degeneracy = app.add_subcommand("degeneracy", "Degeneracy of a .hg");
  hc_degeneracy_kind degeneracy_kind = HC_DEGENERACY_STRONG;
  degeneracy->add_option("--kind", degeneracy_kind, "Which degeneracy")
      ->required()
      ->transform(CLI::CheckedTransformer(kDegeneracyKinds));
  AddInput(degeneracy, &opts);
  degeneracy->parse_complete_callback([&] {
    action = [&] {
      HypergraphPtr h = LoadHypergraph(opts);
      char* json = nullptr;
      Require(hc_degeneracy(h.get(), degeneracy_kind, &json));
      Print(Adopt(json), opts);
    };
  });

  // cover / transversal / vc / dual
  auto* cover = app.add_subcommand("cover", "Greedy edge cover certificate");
  AddInput(cover, &opts);
  cover->parse_complete_callback([&] {
    action = [&] {
      HypergraphPtr h = LoadHypergraph(opts);
      char* json = nullptr;
      Require(hc_cover(h.get(), &json));
      Print(Adopt(json), opts);
    };
  });

  auto* transversal =
      app.add_subcommand("transversal", "Greedy transversal certificate");
  AddInput(transversal, &opts);
  transversal->parse_complete_callback([&] {
    action = [&] {
      HypergraphPtr h = LoadHypergraph(opts);
      char* json = nullptr;
      Require(hc_transversal(h.get(), &json));
      Print(Adopt(json), opts);
    };
  });

  auto* vc = app.add_subcommand("vc", "VC dimension with a witness");
  AddInput(vc, &opts);
  vc->parse_complete_callback([&] {
    action = [&] {
      HypergraphPtr h = LoadHypergraph(opts);
      char* json = nullptr;
      Require(hc_vc_dimension(h.get(), &json));
      Print(Adopt(json), opts);
    };
  });

  auto* dual = app.add_subcommand("dual", "Write the dual hypergraph (.hg)");
  AddInput(dual, &opts);
  dual->parse_complete_callback([&] {
    action = [&] {
      HypergraphPtr h = LoadHypergraph(opts);
      hc_hypergraph* d = nullptr;
      Require(hc_hypergraph_dual(h.get(), &d));
      HypergraphPtr owned(d);
      char* text = nullptr;
      Require(hc_hypergraph_write(d, &text));
      WriteText(text);
    };
  });

  // dominate
  auto* dominate =
      app.add_subcommand("dominate", "Tree domination and packing (.gr)");
  hc_neighborhood neighborhood = HC_CLOSED;
  bool cross_check = false;
  dominate->add_option("--kind", neighborhood, "closed or open")
      ->required()
      ->transform(CLI::CheckedTransformer(kNeighborhoods));
  dominate->add_flag("--cross-check", cross_check,
                     "Also run the generic greedy on the neighborhood "
                     "hypergraph");
  AddInput(dominate, &opts);
  dominate->parse_complete_callback([&] {
    action = [&] {
      GraphPtr g = LoadGraph(opts);
      char* json = nullptr;
      Require(hc_dominate(g.get(), neighborhood, cross_check ? 1 : 0, &json));
      Print(Adopt(json), opts);
    };
  });

  // exact
  auto* exact = app.add_subcommand("exact", "Exhaustive optimum");
  hc_problem problem = HC_MIN_EDGE_COVER;
  exact->add_option("--problem", problem, "Problem name")
      ->required()
      ->transform(CLI::CheckedTransformer(kProblems));
  AddInput(exact, &opts);
  exact->parse_complete_callback([&] {
    action = [&] {
      char* json = nullptr;
      if (IsGraphProblem(problem)) {
        GraphPtr g = LoadGraph(opts);
        Require(hc_exact(nullptr, g.get(), problem, &json));
      } else {
        HypergraphPtr h = LoadHypergraph(opts);
        Require(hc_exact(h.get(), nullptr, problem, &json));
      }
      Print(Adopt(json), opts);
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Check a set against a definition");
  hc_set_kind set_kind = HC_SET_EDGE_COVER;
  std::string id_list;
  std::string set_kind_name;
  verify->add_option("--kind", set_kind_name, "Set kind")
      ->required()
      ->check(CLI::IsMember(kSetKinds));
  verify->add_option("--ids", id_list, "Comma-separated 1-based ids")
      ->required();
  AddInput(verify, &opts);
  verify->parse_complete_callback([&] {
    set_kind = kSetKinds.at(set_kind_name);
    const std::vector<std::uint32_t> ids = ParseIds(id_list);
    action = [&, ids] {
      int valid = 0;
      if (IsGraphSetKind(set_kind)) {
        GraphPtr g = LoadGraph(opts);
        Require(hc_verify(nullptr, g.get(), set_kind, ids.data(), ids.size(),
                          &valid));
      } else {
        HypergraphPtr h = LoadHypergraph(opts);
        Require(hc_verify(h.get(), nullptr, set_kind, ids.data(), ids.size(),
                          &valid));
      }
      nlohmann::json doc = {
          {"kind", set_kind_name}, {"ids", ids}, {"valid", valid != 0}};
      Print(doc.dump(), opts);
    };
  });

  // audit
  auto* audit = app.add_subcommand("audit", "Sample the neighborhood "
                                            "equivalences on a graph (.gr)");
  std::size_t trials = 1000;
  audit->add_option("--trials", trials, "Number of sampled subsets");
  audit->add_option("--seed", opts.seed, "Seed");
  AddInput(audit, &opts);
  audit->parse_complete_callback([&] {
    action = [&] {
      GraphPtr g = LoadGraph(opts);
      char* json = nullptr;
      Require(hc_audit(g.get(), trials, opts.seed, &json));
      Print(Adopt(json), opts);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (action) action();
    std::cout.flush();
    return 0;
  } catch (const DomainFailure& f) {
    std::cerr << f.name << ": " << f.message << '\n';
    return kDomainError;
  }
}

}  // namespace

int main(int argc, char** argv) { return Run(argc, argv); }
