// hike: exact cycle-structure toolbox for small digraphs.
//
// Subcommands cover prime-cycle enumeration, hike (heap-of-cycles)
// enumeration, incidence-algebra series, von Mangoldt values, exact identity
// suites, primitive-orbit counts, the Ihara factorization, the
// number-theory collapse on disjoint cycles, dependence-graph
// reconstruction, cospectral constructions, and the curated worked examples.
//
// Exit codes: 0 success / all checks pass; 1 identity-check failure;
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hikeforge/cospectral.hpp"
#include "hikeforge/fixtures.hpp"
#include "hikeforge/functions.hpp"
#include "hikeforge/identities.hpp"
#include "hikeforge/incidence.hpp"
#include "hikeforge/nt_bridge.hpp"
#include "hikeforge/reconstruct.hpp"
#include "hikeforge/worked_examples.hpp"

using nlohmann::json;
using namespace hikeforge;

namespace {

json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

json rat_to_json(const Rat& v) {
  if (denominator(v) == 1) return int_to_json(numerator(v));
  return v.str();
}

json poly_to_json(const IntPoly& p) {
  json arr = json::array();
  for (const Int& c : p.coeffs()) arr.push_back(int_to_json(c));
  return arr;
}

json hike_to_json(const Hike& h) {
  json layers = json::array();
  for (const auto& layer : h.layers) layers.push_back(layer);
  return layers;
}

std::string hike_display(const Hike& h) {
  if (h.trivial()) return "1";
  std::string s;
  for (std::size_t i = 0; i < h.layers.size(); ++i) {
    if (i) s += " | ";
    for (std::size_t j = 0; j < h.layers[i].size(); ++j) {
      if (j) s += " ";
      s += "p" + std::to_string(h.layers[i][j]);
    }
  }
  return s;
}

json report_to_json(const CheckReport& rep) {
  json j;
  j["name"] = rep.name;
  j["bound"] = rep.bound;
  j["pass"] = rep.pass;
  if (!rep.counterexample.empty()) j["counterexample"] = rep.counterexample;
  if (!rep.conditions.empty()) {
    json conds = json::array();
    for (const auto& [what, ok] : rep.conditions) conds.push_back({{"condition", what}, {"pass", ok}});
    j["conditions"] = conds;
  }
  return j;
}

void print_report(const CheckReport& rep) {
  std::cout << (rep.pass ? "PASS" : "FAIL") << "  " << rep.name;
  if (rep.bound > 0) std::cout << " (bound " << rep.bound << ")";
  std::cout << "\n";
  for (const auto& [what, ok] : rep.conditions)
    std::cout << "      " << (ok ? "ok   " : "FAIL ") << what << "\n";
  if (!rep.pass && !rep.counterexample.empty())
    std::cout << "      counterexample: " << rep.counterexample << "\n";
}

int finish_reports(const std::vector<CheckReport>& reports, bool as_json) {
  bool all = true;
  if (as_json) {
    json arr = json::array();
    for (const auto& r : reports) {
      arr.push_back(report_to_json(r));
      all = all && r.pass;
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      print_report(r);
      all = all && r.pass;
    }
  }
  return all ? 0 : 1;
}

Digraph load_graph_or_die(const std::string& path) { return load_digraph_file(path); }

std::vector<int> parse_vertex_list(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw std::invalid_argument("empty cycle spec");
  return out;
}

Prime prime_from_vertices(const std::vector<int>& vs) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < vs.size(); ++i)
    arcs.push_back({vs[i], vs[(i + 1) % vs.size()]});
  return make_prime(arcs);
}

struct Options {
  std::string graph_path, gamma_path, lengths_path, fn_name = "mobius";
  std::string suite = "all";
  std::vector<std::string> pair_paths;
  std::string expand_path, cycle1, cycle2;
  int max_len = 8;
  int shared = -1;
  int nt_primes = 4;
  bool as_json = false;
  bool full = false;
  bool oracle = false;
};

int cmd_primes(const Options& opt) {
  const Digraph g = load_graph_or_die(opt.graph_path);
  const PrimeCatalog cat = enumerate_primes(g);
  const SimpleGraph gamma = cat.dependence_graph();
  if (opt.as_json) {
    json primes = json::array();
    for (const Prime& p : cat.primes) {
      json arcs = json::array();
      for (const Arc& a : p.arcs) arcs.push_back({a.tail, a.head});
      primes.push_back({{"arcs", arcs}});
    }
    json dep = json::array();
    for (auto [i, j] : gamma.edges()) dep.push_back({i, j});
    std::cout << json{{"count", cat.size()}, {"primes", primes}, {"dependence", dep}}.dump(2)
              << "\n";
  } else {
    std::cout << cat.size() << " primes\n";
    for (int i = 0; i < cat.size(); ++i) {
      std::cout << "p" << i << " (length " << cat.prime_length(i) << "):";
      for (const Arc& a : cat.primes[i].arcs) std::cout << " " << a.tail << ">" << a.head;
      std::cout << "\n";
    }
    std::cout << "dependence edges:";
    for (auto [i, j] : gamma.edges()) std::cout << " (" << i << "," << j << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_hikes(const Options& opt) {
  const Digraph g = load_graph_or_die(opt.graph_path);
  const PrimeCatalog cat = enumerate_primes(g);
  const std::vector<Hike> hikes = enumerate_hikes(cat, opt.max_len);
  std::vector<long long> per_length(opt.max_len + 1, 0);
  for (const Hike& h : hikes) ++per_length[h.length];
  if (opt.as_json) {
    json j;
    j["max_len"] = opt.max_len;
    j["count_per_length"] = per_length;
    j["total"] = hikes.size();
    if (opt.full) {
      json forms = json::array();
      for (const Hike& h : hikes) forms.push_back(hike_to_json(h));
      j["hikes"] = forms;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "hikes up to length " << opt.max_len << ": " << hikes.size() << "\n";
    for (int l = 0; l <= opt.max_len; ++l)
      std::cout << "length " << l << ": " << per_length[l] << "\n";
    if (opt.full)
      for (const Hike& h : hikes) std::cout << "  " << hike_display(h) << "\n";
  }
  return 0;
}

int cmd_series(const Options& opt) {
  const Digraph g = load_graph_or_die(opt.graph_path);
  const PrimeCatalog cat = enumerate_primes(g);
  const HikeSeries s = series_of(cat, named_function(cat, opt.fn_name), opt.max_len);
  if (opt.as_json) {
    json terms = json::array();
    for (const Hike& h : s.support) {
      const Rat c = s.at(h);
      if (c == 0) continue;
      terms.push_back({{"hike", hike_to_json(h)}, {"coeff", rat_to_json(c)}});
    }
    std::cout << json{{"fn", opt.fn_name}, {"max_len", opt.max_len}, {"terms", terms}}.dump(2)
              << "\n";
  } else {
    std::cout << "series of " << opt.fn_name << " to length " << opt.max_len << ":\n";
    for (const Hike& h : s.support) {
      const Rat c = s.at(h);
      if (c == 0) continue;
      std::cout << "  " << c << "  " << hike_display(h) << "\n";
    }
  }
  return 0;
}

int cmd_mangoldt(const Options& opt) {
  const Digraph g = load_graph_or_die(opt.graph_path);
  const PrimeCatalog cat = enumerate_primes(g);
  bool all_match = true;
  json rows = json::array();
  for (const Hike& h : enumerate_hikes(cat, opt.max_len)) {
    const long long lam = mangoldt(cat, h);
    json row;
    row["hike"] = hike_to_json(h);
    row["lambda"] = lam;
    if (opt.oracle) {
      const long long oracle = mangoldt_contiguous(cat, h, std::max(opt.max_len, 10));
      row["contiguous"] = oracle;
      if (oracle != lam) all_match = false;
    }
    if (!opt.as_json) {
      std::cout << "Lambda(" << hike_display(h) << ") = " << lam;
      if (opt.oracle) std::cout << "  [oracle " << row["contiguous"] << "]";
      std::cout << "\n";
    }
    rows.push_back(std::move(row));
  }
  if (opt.as_json)
    std::cout << json{{"max_len", opt.max_len}, {"values", rows}, {"oracle_match", all_match}}
                     .dump(2)
              << "\n";
  else if (opt.oracle)
    std::cout << (all_match ? "oracle agrees on every hike\n" : "ORACLE MISMATCH\n");
  return all_match ? 0 : 1;
}

int cmd_verify(const Options& opt) {
  const Digraph g = load_graph_or_die(opt.graph_path);
  const int L = opt.max_len;
  std::vector<CheckReport> reports;
  auto want = [&](const char* s) { return opt.suite == s || opt.suite == "all"; };
  if (want("mobius")) reports.push_back(check_det_mobius(g, L));
  if (want("liouville")) reports.push_back(check_perm_liouville(g, L));
  if (want("macmahon")) {
    const int degree = std::min(L, 4);
    if (g.vertex_count() <= 8)
      reports.push_back(check_macmahon(g, degree));
    else if (opt.suite == "macmahon")
      throw std::invalid_argument("macmahon: vertex count beyond cap (8)");
  }
  if (want("mangoldt")) reports.push_back(check_trace_mangoldt(g, L));
  if (want("orbits")) reports.push_back(check_orbit_counts(g, std::min(L, 6)));
  if (want("ihara")) {
    if (g.is_bidirected() && !g.has_self_loop()) {
      reports.push_back(check_ihara_factorization(g, L));
    } else if (opt.suite == "ihara") {
      throw std::invalid_argument("ihara: graph must be bidirected and loop-free");
    } else {
      CheckReport skipped{.name = "ihara-factorization", .bound = L};
      skipped.conditions = {{"skipped: graph not bidirected loop-free", true}};
      reports.push_back(std::move(skipped));
    }
  }
  if (want("lambert")) reports.push_back(check_lambert_resolvent(g, L));
  if (reports.empty()) throw CLI::ValidationError("unknown suite: " + opt.suite);
  return finish_reports(reports, opt.as_json);
}

int cmd_orbits(const Options& opt) {
  const Digraph g = load_graph_or_die(opt.graph_path);
  const OrbitCounts pi = primitive_orbit_counts(g, opt.max_len);
  bool match = true;
  json j;
  j["pi"] = json::array();
  for (int l = 1; l <= opt.max_len; ++l) j["pi"].push_back(int_to_json(pi.at(l)));
  if (opt.oracle) {
    const OrbitCounts oracle = brute_force_orbits(g, opt.max_len);
    match = pi == oracle;
    j["oracle"] = json::array();
    for (int l = 1; l <= opt.max_len; ++l) j["oracle"].push_back(int_to_json(oracle.at(l)));
    j["match"] = match;
  }
  if (opt.as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (int l = 1; l <= opt.max_len; ++l)
      std::cout << "pi(" << l << ") = " << pi.at(l) << "\n";
    if (opt.oracle) std::cout << (match ? "oracle agrees\n" : "ORACLE MISMATCH\n");
  }
  return match ? 0 : 1;
}

int cmd_ihara(const Options& opt) {
  const Digraph g = load_graph_or_die(opt.graph_path);
  const CheckReport rep = check_ihara_factorization(g, opt.max_len);
  if (opt.as_json) {
    json j = report_to_json(rep);
    const OrbitCounts all = primitive_orbit_counts(g, opt.max_len);
    json pi_all = json::array(), pi_bt = json::array();
    OrbitCounts bt = brute_force_backtrackless_orbits(g, std::min(opt.max_len, 6));
    for (int l = 1; l <= opt.max_len; ++l) pi_all.push_back(int_to_json(all.at(l)));
    for (int l = 1; l <= bt.max_length(); ++l) pi_bt.push_back(int_to_json(bt.at(l)));
    j["pi_all"] = pi_all;
    j["pi_backtrackless_oracle"] = pi_bt;
    j["zeta_a"] = poly_to_json(char_poly(g).inverse_truncated(opt.max_len));
    std::cout << j.dump(2) << "\n";
    return rep.pass ? 0 : 1;
  }
  return finish_reports({rep}, false);
}

int cmd_nt_check(const Options& opt) {
  const CheckReport rep = check_nt_isomorphism(opt.nt_primes, opt.max_len);
  return finish_reports({rep}, opt.as_json);
}

int cmd_reconstruct(const Options& opt) {
  const SimpleGraph gamma = load_simple_graph_file(opt.gamma_path);
  ReconstructionResult res;
  if (!opt.lengths_path.empty()) {
    std::ifstream in(opt.lengths_path);
    if (!in) throw std::invalid_argument("cannot open " + opt.lengths_path);
    json doc = json::parse(in);
    std::vector<int> lengths = doc.get<std::vector<int>>();
    res = reconstruct_with_lengths(gamma, lengths);
  } else {
    res = reconstruct(gamma);
  }
  const char* status = res.outcome == ReconstructionResult::Outcome::Unique      ? "unique"
                       : res.outcome == ReconstructionResult::Outcome::Ambiguous ? "ambiguous"
                                                                                 : "failed";
  if (opt.as_json) {
    json j;
    j["status"] = status;
    if (!res.reason.empty()) j["reason"] = res.reason;
    json classes = json::array();
    for (const auto& c : res.classes)
      classes.push_back({{"members", c.members},
                         {"clique_neighborhood", c.clique_neighborhood},
                         {"common_neighbors", c.common_neighbors}});
    j["classes"] = classes;
    j["backtracks"] = res.backtracks;
    json graphs = json::array();
    for (const Digraph& g : res.graphs) graphs.push_back(json::parse(digraph_to_json(g)));
    j["graphs"] = graphs;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "status: " << status << "\n";
    if (!res.reason.empty()) std::cout << "reason: " << res.reason << "\n";
    for (const auto& c : res.classes) {
      std::cout << "class {";
      for (std::size_t i = 0; i < c.members.size(); ++i)
        std::cout << (i ? "," : "") << c.members[i];
      std::cout << "} clique-neighborhood=" << (c.clique_neighborhood ? "yes" : "no") << "\n";
    }
    std::cout << "backtracks:";
    for (int b : res.backtracks) std::cout << " " << b;
    std::cout << "\n";
    for (const Digraph& g : res.graphs) std::cout << digraph_to_json(g) << "\n";
  }
  return res.outcome == ReconstructionResult::Outcome::Failed ? 1 : 0;
}

int cmd_cospectral(const Options& opt) {
  if (opt.pair_paths.size() == 2) {
    const Digraph a = load_graph_or_die(opt.pair_paths[0]);
    const Digraph b = load_graph_or_die(opt.pair_paths[1]);
    const CheckReport rep = intersection_slide_check(a, b);
    if (opt.as_json) {
      json j = report_to_json(rep);
      auto fp_json = [](const SpectralFingerprint& fp) {
        json traces = json::array();
        for (const Int& t : fp.traces) traces.push_back(int_to_json(t));
        return json{{"char", poly_to_json(fp.char_poly)},
                    {"perm", poly_to_json(fp.perm_poly)},
                    {"traces", traces}};
      };
      j["fingerprints"] = {{"a", fp_json(fingerprint(a))}, {"b", fp_json(fingerprint(b))}};
      std::cout << j.dump(2) << "\n";
      return rep.pass ? 0 : 1;
    }
    return finish_reports({rep}, false);
  }
  if (opt.expand_path.empty())
    throw std::invalid_argument("cospectral: use --pair A B or --expand F --cycle1 ... --cycle2 ...");
  const Digraph g = load_graph_or_die(opt.expand_path);
  const PrimeCatalog cat = enumerate_primes(g);
  const Prime c1 = prime_from_vertices(parse_vertex_list(opt.cycle1));
  const Prime c2 = prime_from_vertices(parse_vertex_list(opt.cycle2));
  if (cat.find(c1) < 0 || cat.find(c2) < 0)
    throw std::invalid_argument("--cycle1/--cycle2 are not simple cycles of the graph");
  int shared = opt.shared;
  if (shared < 0) {
    const std::uint64_t inter = c1.vertex_mask & c2.vertex_mask;
    if (std::popcount(inter) == 1) shared = std::countr_zero(inter);
  }
  const Digraph expanded = expand_pathsum(g, c1, c2, shared);
  std::cout << digraph_to_json(expanded) << "\n";
  return 0;
}

int cmd_paper_examples(const Options& opt) { return finish_reports(worked_examples(), opt.as_json); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cycle-structure toolbox for small digraphs"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool graph) {
    if (graph) sub->add_option("--graph", opt.graph_path, "graph JSON file")->required();
    sub->add_flag("--json", opt.as_json, "machine-readable output");
    return sub;
  };

  auto* primes = add_common(app.add_subcommand("primes", "enumerate the prime cycles"), true);
  auto* hikes = add_common(app.add_subcommand("hikes", "enumerate hikes up to a length"), true);
  hikes->add_option("--max-len", opt.max_len, "length bound");
  hikes->add_flag("--full", opt.full, "print normal forms");
  auto* series = add_common(app.add_subcommand("series", "truncated incidence-function series"), true);
  series->add_option("--fn", opt.fn_name, "one of mobius|one|tau|lambda|mangoldt|...");
  series->add_option("--max-len", opt.max_len, "length bound");
  auto* mang = add_common(app.add_subcommand("mangoldt", "per-hike von Mangoldt values"), true);
  mang->add_option("--max-len", opt.max_len, "length bound");
  mang->add_flag("--oracle", opt.oracle, "cross-check against the contiguity oracle");
  auto* verify = add_common(app.add_subcommand("verify", "run exact identity suites"), true);
  verify->add_option("--suite", opt.suite,
                     "mobius|liouville|macmahon|mangoldt|orbits|ihara|lambert|all");
  verify->add_option("--max-len", opt.max_len, "length bound");
  auto* orbits = add_common(app.add_subcommand("orbits", "primitive orbit counts"), true);
  orbits->add_option("--max-len", opt.max_len, "length bound");
  orbits->add_flag("--oracle", opt.oracle, "compare against brute-force orbit grouping");
  auto* ihara = add_common(app.add_subcommand("ihara", "Ihara factorization check"), true);
  ihara->add_option("--max-len", opt.max_len, "degree bound");
  auto* nt = add_common(app.add_subcommand("nt-check", "integer-arithmetic collapse check"), false);
  nt->add_option("--primes", opt.nt_primes, "number of disjoint cycles");
  nt->add_option("--max-len", opt.max_len, "length bound");
  auto* rec = add_common(app.add_subcommand("reconstruct", "rebuild a graph from its dependence graph"),
                         false);
  rec->add_option("--gamma", opt.gamma_path, "dependence graph JSON file")->required();
  rec->add_option("--lengths", opt.lengths_path, "JSON array of per-prime lengths");
  auto* cos = add_common(app.add_subcommand("cospectral", "cospectral pair tools"), false);
  cos->add_option("--pair", opt.pair_paths, "two graph JSON files of a claimed pair")
      ->expected(2);
  cos->add_option("--expand", opt.expand_path, "graph to expand");
  cos->add_option("--cycle1", opt.cycle1, "comma-separated vertex cycle");
  cos->add_option("--cycle2", opt.cycle2, "comma-separated vertex cycle");
  cos->add_option("--shared", opt.shared, "shared vertex (inferred when unique)");
  auto* examples = add_common(app.add_subcommand("paper-examples", "run the curated worked examples"),
                              false);
  (void)examples;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (primes->parsed()) return cmd_primes(opt);
    if (hikes->parsed()) return cmd_hikes(opt);
    if (series->parsed()) return cmd_series(opt);
    if (mang->parsed()) return cmd_mangoldt(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (orbits->parsed()) return cmd_orbits(opt);
    if (ihara->parsed()) return cmd_ihara(opt);
    if (nt->parsed()) return cmd_nt_check(opt);
    if (rec->parsed()) return cmd_reconstruct(opt);
    if (cos->parsed()) return cmd_cospectral(opt);
    if (examples->parsed()) return cmd_paper_examples(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "size error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
