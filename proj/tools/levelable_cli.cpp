// Command-line surface for the levelable-graph decision engine. One
// subcommand per library operation; graphs travel as edge-list files ("-"
// reads standard input), results as JSON on stdout. Verdicts are data: the
// exit status is 0 for both levelable and not-levelable outcomes, 1 for
// domain errors (error JSON on stderr), 2 for usage errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "levelable/levelable.hpp"

namespace {

using namespace levelable;
using nlohmann::json;

std::size_t enumeration_cap_from_env() {
  if (const char* s = std::getenv("LEVELABLE_MAX_SETS")) {
    try {
      const long long v = std::stoll(s);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
    throw GraphError("LEVELABLE_MAX_SETS must be a positive integer");
  }
  return kDefaultMaxSets;
}

Graph read_graph(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_graph(buf.str());
  }
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw GraphError("empty entry in list \"" + s + "\"");
    out.push_back(std::stoi(tok));
  }
  if (out.empty()) throw GraphError("empty list");
  return out;
}

std::vector<BigInt> parse_weight_list(const std::string& s) {
  std::vector<BigInt> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.emplace_back(tok);
  if (out.empty()) throw GraphError("empty weight list");
  return out;
}

std::vector<std::pair<int, int>> parse_pair_list(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto dash = tok.find('-');
    if (dash == std::string::npos) throw GraphError("expected u-v pairs, got \"" + tok + "\"");
    out.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
  }
  return out;
}

// Family spec grammar shared by `gen` and `classify --family`:
//   path N | cycle N | star N | circulant N d1,d2,.. | multipartite a1,..
//   caterpillar l1,l2,.. | bigstar n1,.. | gnp N P SEED
//   cw A B u-v,u-v,.. q1,..,qA r1,..,rB | cubic-circulant N A
struct ParsedFamily {
  std::string kind;
  std::vector<std::string> args;
};

ParsedFamily split_family(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw GraphError("missing family name");
  ParsedFamily f;
  f.kind = tokens.front();
  f.args.assign(tokens.begin() + 1, tokens.end());
  return f;
}

void require_args(const ParsedFamily& f, std::size_t count) {
  if (f.args.size() != count)
    throw GraphError("family " + f.kind + " expects " + std::to_string(count) + " argument(s)");
}

CameronWalkerSpec parse_cw(const ParsedFamily& f) {
  require_args(f, 5);
  CameronWalkerSpec spec;
  spec.a = std::stoi(f.args[0]);
  spec.b = std::stoi(f.args[1]);
  spec.bipartite_edges = parse_pair_list(f.args[2]);
  spec.leg_counts = parse_int_list(f.args[3]);
  spec.triangle_counts = parse_int_list(f.args[4]);
  return spec;
}

Graph generate_from(const ParsedFamily& f) {
  if (f.kind == "path") {
    require_args(f, 1);
    return make_path(std::stoi(f.args[0]));
  }
  if (f.kind == "cycle") {
    require_args(f, 1);
    return make_cycle(std::stoi(f.args[0]));
  }
  if (f.kind == "star") {
    require_args(f, 1);
    return make_star(std::stoi(f.args[0]));
  }
  if (f.kind == "circulant") {
    require_args(f, 2);
    return make_circulant(std::stoi(f.args[0]), parse_int_list(f.args[1]));
  }
  if (f.kind == "cubic-circulant") {
    require_args(f, 2);
    return make_cubic_circulant(std::stoi(f.args[0]), std::stoi(f.args[1]));
  }
  if (f.kind == "multipartite") {
    require_args(f, 1);
    return make_complete_multipartite(parse_int_list(f.args[0]));
  }
  if (f.kind == "caterpillar") {
    require_args(f, 1);
    return make_caterpillar(parse_int_list(f.args[0]));
  }
  if (f.kind == "bigstar") {
    require_args(f, 1);
    return make_big_star(parse_int_list(f.args[0]));
  }
  if (f.kind == "gnp") {
    require_args(f, 3);
    return make_random_gnp(std::stoi(f.args[0]), std::stod(f.args[1]),
                           std::stoull(f.args[2]));
  }
  if (f.kind == "cw") return realize_cameron_walker(parse_cw(f));
  throw GraphError("unknown family \"" + f.kind + "\"");
}

FamilyVerdict classify_from(const ParsedFamily& f, const DecideOptions& opt) {
  if (f.kind == "caterpillar") {
    require_args(f, 1);
    return classify_caterpillar(CaterpillarSpec{parse_int_list(f.args[0])});
  }
  if (f.kind == "bigstar") {
    require_args(f, 1);
    return classify_big_star(parse_int_list(f.args[0]));
  }
  if (f.kind == "cubic-circulant") {
    require_args(f, 2);
    return classify_cubic_circulant(std::stoi(f.args[0]), std::stoi(f.args[1]));
  }
  if (f.kind == "cw") return classify_cameron_walker(parse_cw(f));
  if (f.kind == "multipartite") {
    require_args(f, 1);
    FamilyVerdict v;
    v.family = "complete_multipartite";
    v.citation = "complete multipartite graphs are levelable (lcm weighting)";
    v.levelable = true;
    v.weights = multipartite_weights(parse_int_list(f.args[0]));
    return v;
  }
  return classify(generate_from(f), opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision engine and certificate generator for levelable graphs"};
  app.require_subcommand(1);

  std::string graph_path = "-";
  std::string family_spec;
  std::string weights_arg, exponents_arg, c_arg, r_arg;
  std::vector<std::string> family_tokens, part_args;
  int construct_vertex = 0;
  int stats_n = 8;
  double stats_p = 0.5;
  long long stats_trials = 100;
  std::uint64_t stats_seed = 7;

  auto* cmd_decide = app.add_subcommand("decide", "decide levelability, print a certificate");
  cmd_decide->add_option("file", graph_path, "edge-list file or - for stdin");

  auto* cmd_mis = app.add_subcommand("mis", "enumerate maximal independent sets");
  cmd_mis->add_option("file", graph_path, "edge-list file or - for stdin");

  auto* cmd_wcw = app.add_subcommand("wcw", "basis of the well-covered weighting space");
  cmd_wcw->add_option("file", graph_path, "edge-list file or - for stdin");

  auto* cmd_classify = app.add_subcommand("classify", "closed-form family verdict when available");
  cmd_classify->add_option("file", graph_path, "edge-list file or - for stdin");
  cmd_classify->add_option("--family", family_spec, "family spec, e.g. \"bigstar 1,2,2\"");

  auto* cmd_gen = app.add_subcommand("gen", "generate a named family as an edge list");
  cmd_gen->add_option("family", family_tokens, "family name and arguments")->expected(-1);

  auto* cmd_socle = app.add_subcommand("socle", "socle vector of the artinian quotient");
  cmd_socle->add_option("file", graph_path, "edge-list file or - for stdin");
  cmd_socle->add_option("--exponents", exponents_arg, "pure-power exponents a1,..,an (each >= 2)")
      ->required();

  auto* cmd_stats = app.add_subcommand("stats", "dim WCW sampling experiment, CSV output");
  cmd_stats->add_option("--n", stats_n, "vertex count");
  cmd_stats->add_option("--p", stats_p, "edge probability");
  cmd_stats->add_option("--trials", stats_trials, "samples; 0 with --n <= 5 enumerates all graphs");
  cmd_stats->add_option("--seed", stats_seed, "base seed");

  auto* cmd_construct = app.add_subcommand("construct", "weight-transporting constructions");
  auto* con_dup = cmd_construct->add_subcommand("duplicate", "duplicate a vertex");
  con_dup->add_option("file", graph_path)->required();
  con_dup->add_option("vertex", construct_vertex)->required();
  con_dup->add_option("--weights", weights_arg, "validated weights of the input graph")->required();
  auto* con_exp = cmd_construct->add_subcommand("expand", "expand a vertex");
  con_exp->add_option("file", graph_path)->required();
  con_exp->add_option("vertex", construct_vertex)->required();
  con_exp->add_option("--weights", weights_arg)->required();
  auto* con_att = cmd_construct->add_subcommand("attach", "attach weighted graphs to every vertex");
  con_att->add_option("file", graph_path)->required();
  con_att->add_option("--part", part_args, "per-vertex component as FILE:w1,w2,..")->required();
  auto* con_prof = cmd_construct->add_subcommand("profile", "realize a weight profile");
  std::string profile_mode;
  con_prof->add_option("mode", profile_mode, "A (clique attachment) or B (pendant)")->required();
  con_prof->add_option("--c", c_arg, "weights c1,..,cn")->required();
  con_prof->add_option("--r", r_arg, "multiplicities r1,..,rn (mode A)");
  cmd_construct->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << error_to_json("usage", e.what()).dump() << "\n";
    return 2;
  }

  try {
    DecideOptions opt;
    opt.max_sets = enumeration_cap_from_env();

    if (*cmd_decide) {
      std::cout << certificate_to_json(decide_levelable(read_graph(graph_path), opt)).dump() << "\n";
    } else if (*cmd_mis) {
      std::cout << mis_to_json(enumerate_max_independent_sets(read_graph(graph_path), opt.max_sets)).dump()
                << "\n";
    } else if (*cmd_wcw) {
      const Graph g = read_graph(graph_path);
      std::cout << wcw_to_json(wcw_basis(g, opt.max_sets), g.vertex_count()).dump() << "\n";
    } else if (*cmd_classify) {
      FamilyVerdict v;
      if (!family_spec.empty()) {
        std::vector<std::string> tokens;
        std::stringstream ss(family_spec);
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);
        v = classify_from(split_family(tokens), opt);
      } else {
        v = classify(read_graph(graph_path), opt);
      }
      std::cout << verdict_to_json(v).dump() << "\n";
    } else if (*cmd_gen) {
      std::cout << to_edge_list(generate_from(split_family(family_tokens)));
    } else if (*cmd_socle) {
      const Graph g = read_graph(graph_path);
      const ExponentVector a(parse_int_list(exponents_arg));
      const SocleVector sv = socle_vector(g, a);
      std::cout << socle_to_json(sv, monomial_basis(g, a), is_level_quotient(g, a)).dump() << "\n";
    } else if (*cmd_stats) {
      std::cout << stats_to_csv(wcw_dim_zero_fraction(stats_n, stats_p, stats_trials, stats_seed, opt));
    } else if (*cmd_construct) {
      std::pair<Graph, WeightFunction> result;
      if (*con_dup || *con_exp) {
        const Graph g = read_graph(graph_path);
        const auto w = validate_weights(g, parse_weight_list(weights_arg), opt.max_sets);
        result = *con_dup ? duplicate_vertex(g, construct_vertex, w)
                          : expand_vertex(g, construct_vertex, w);
      } else if (*con_att) {
        const Graph g = read_graph(graph_path);
        std::vector<std::pair<Graph, WeightFunction>> hs;
        for (const auto& part : part_args) {
          const auto colon = part.rfind(':');
          if (colon == std::string::npos) throw GraphError("part must be FILE:w1,w2,..");
          const Graph h = read_graph(part.substr(0, colon));
          hs.emplace_back(h, validate_weights(h, parse_weight_list(part.substr(colon + 1)), opt.max_sets));
        }
        result = attach_graphs(g, hs);
      } else {
        const auto c = parse_weight_list(c_arg);
        if (profile_mode == "A") {
          if (r_arg.empty()) throw GraphError("mode A needs --r");
          result = realize_clique_profile(c, parse_int_list(r_arg));
        } else if (profile_mode == "B") {
          result = realize_pendant_profile(c);
        } else {
          throw GraphError("profile mode must be A or B");
        }
      }
      std::cout << graph_weights_to_json(result.first, result.second).dump() << "\n";
    }
    return 0;
  } catch (const ParseError& e) {
    std::cerr << error_to_json("parse", e.what()).dump() << "\n";
  } catch (const EnumerationCapExceeded& e) {
    std::cerr << error_to_json("enumeration_cap", e.what()).dump() << "\n";
  } catch (const LpIterationCapExceeded& e) {
    std::cerr << error_to_json("lp_cap", e.what()).dump() << "\n";
  } catch (const MonomialCapExceeded& e) {
    std::cerr << error_to_json("monomial_cap", e.what()).dump() << "\n";
  } catch (const WeightError& e) {
    std::cerr << error_to_json("weights", e.what()).dump() << "\n";
  } catch (const std::exception& e) {
    std::cerr << error_to_json("domain", e.what()).dump() << "\n";
  }
  return 1;
}
