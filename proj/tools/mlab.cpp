#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlab/initiality.hpp"
#include "mlab/laws.hpp"
#include "mlab/parse.hpp"

using json = nlohmann::ordered_json;
using namespace mlab;

namespace {

constexpr const char* kVersion = "mlab 0.1.0";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Named registry of parsed structures; one parse per path.
struct Workspace {
  std::map<std::string, ParsedStructure> structures;
  std::map<std::string, std::string> digests;

  const ParsedStructure& load(const std::string& path) {
    auto it = structures.find(path);
    if (it != structures.end()) return it->second;
    std::string text = read_file(path);
    digests[path] = fnv1a64(text);
    return structures.emplace(path, parse_structure(text)).first->second;
  }

  SuccAlgebra alg(const std::string& path) {
    const ParsedStructure& s = load(path);
    if (s.kind != ParsedStructure::Kind::IdsuccAlgebra)
      throw validation_error(path + " is not an idsucc algebra");
    return s.alg;
  }
  SuccCoalgebra coalg(const std::string& path) {
    const ParsedStructure& s = load(path);
    if (s.kind != ParsedStructure::Kind::IdsuccCoalgebra)
      throw validation_error(path + " is not an idsucc coalgebra");
    return s.coalg;
  }
  FinAlgebra fin_alg(const std::string& path) {
    const ParsedStructure& s = load(path);
    if (s.kind == ParsedStructure::Kind::IdsuccAlgebra) return s.alg.to_fin();
    if (s.kind == ParsedStructure::Kind::GenericAlgebra) return s.fin_alg;
    throw validation_error(path + " is not an algebra");
  }
  FinCoalgebra fin_coalg(const std::string& path) {
    const ParsedStructure& s = load(path);
    if (s.kind == ParsedStructure::Kind::IdsuccCoalgebra) return s.coalg.to_fin();
    if (s.kind == ParsedStructure::Kind::GenericCoalgebra) return s.fin_coalg;
    if (s.kind == ParsedStructure::Kind::Automaton) return s.automaton.to_fin();
    throw validation_error(path + " is not a coalgebra");
  }
  MooreCoalgebra automaton(const std::string& path) {
    const ParsedStructure& s = load(path);
    if (s.kind != ParsedStructure::Kind::Automaton)
      throw validation_error(path + " is not an automaton");
    return s.automaton;
  }
  GFAlgebra gf_alg(const std::string& path, const FinSet& alphabet) {
    const ParsedStructure& s = load(path);
    if (s.kind != ParsedStructure::Kind::GenericAlgebra)
      throw validation_error(path + " is not a generic algebra");
    validate_gf(s.fin_alg, alphabet);
    return s.fin_alg;
  }
};

Workspace ws;
bool g_timing = false;
std::chrono::steady_clock::time_point g_start;
std::vector<std::string> g_inputs;  // paths, in load order

void emit(const std::string& command, json result) {
  json doc;
  doc["schema"] = 1;
  doc["tool"] = kVersion;
  doc["command"] = command;
  json inputs = json::array();
  for (const auto& p : g_inputs) {
    json entry;
    entry["path"] = p;
    auto it = ws.digests.find(p);
    entry["digest"] = it == ws.digests.end() ? fnv1a64(read_file(p)) : it->second;
    inputs.push_back(entry);
  }
  doc["inputs"] = inputs;
  doc["result"] = std::move(result);
  if (g_timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - g_start)
                  .count();
    doc["timing_ms"] = ms;
  }
  std::cout << doc.dump(2) << "\n";
}

json json_of_algebra(const SuccAlgebra& a) {
  ParsedStructure s;
  s.kind = ParsedStructure::Kind::IdsuccAlgebra;
  s.alg = a;
  json j;
  j["carrier"] = a.carrier.names();
  j["zero"] = a.name(a.zero);
  json succ;
  for (int i = 0; i < a.size(); ++i) succ[a.name(i)] = a.name(a.succ[i]);
  j["succ"] = succ;
  j["text"] = print_structure(s);
  return j;
}

json json_of_fin_algebra(const FinAlgebra& a) {
  ParsedStructure s;
  s.kind = ParsedStructure::Kind::GenericAlgebra;
  s.fin_alg = a;
  json j;
  j["functor"] = a.functor.to_string();
  j["carrier"] = a.carrier.names();
  j["alpha"] = a.alpha;
  j["text"] = print_structure(s);
  return j;
}

PhiTable read_phi(const std::string& path) {
  std::string text = read_file(path);
  ws.digests[path] = fnv1a64(text);
  g_inputs.push_back(path);
  json j = json::parse(text);
  PhiTable phi;
  for (const auto& [c, row] : j.items())
    for (const auto& [a, b] : row.items()) phi[c][a] = b.get<std::string>();
  return phi;
}

// Measuring JSON: {"C": path, "A": path, "B": path, "phi": {...}}; relative
// structure paths resolve against the JSON file's directory.
Measuring read_measuring(const std::string& path) {
  std::string text = read_file(path);
  ws.digests[path] = fnv1a64(text);
  g_inputs.push_back(path);
  json j = json::parse(text);
  auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    if (fp.is_absolute()) return p;
    return (std::filesystem::path(path).parent_path() / fp).string();
  };
  Measuring m;
  std::string cpath = resolve(j.at("C").get<std::string>());
  std::string apath = resolve(j.at("A").get<std::string>());
  std::string bpath = resolve(j.at("B").get<std::string>());
  g_inputs.push_back(cpath);
  g_inputs.push_back(apath);
  g_inputs.push_back(bpath);
  m.C = ws.fin_coalg(cpath);
  m.A = ws.fin_alg(apath);
  m.B = ws.fin_alg(bpath);
  for (const auto& [c, row] : j.at("phi").items())
    for (const auto& [a, b] : row.items()) m.phi[c][a] = b.get<std::string>();
  return m;
}

json json_of_law_row(const LawRow& r) {
  json j;
  j["law"] = r.law;
  j["instances"] = r.instances;
  j["ok"] = r.ok();
  j["failures"] = r.failures;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  g_start = std::chrono::steady_clock::now();
  CLI::App app{"finite measuring-coalgebra calculator"};
  app.require_subcommand(1);
  long enum_bound = 0;
  app.add_option("--enum-bound", enum_bound,
                 "override the enumeration bound (default 10^6)");
  app.add_flag("--timing", g_timing, "append wall-clock timing to the output");

  std::function<void()> action;
  std::string path1, path2, path3, path4, dot_path;
  bool count_only = false, corrupt = false;
  int family_size = 3, size_bound = 4;
  std::size_t laws_size = 2;

  // index <coalg> <elem>
  auto* c_index = app.add_subcommand("index", "index of a coalgebra state");
  c_index->add_option("coalgebra", path1)->required();
  c_index->add_option("element", path2)->required();
  c_index->callback([&] {
    action = [&] {
      SuccCoalgebra c = ws.coalg(path1);
      g_inputs.push_back(path1);
      int i = c.carrier.at(path2);
      json r;
      r["element"] = path2;
      r["index"] = index_of(c, i).str();
      emit("index", r);
    };
  });

  // poset sub|quot
  auto* c_poset = app.add_subcommand("poset", "sub/quotient structure posets");
  auto* c_sub = c_poset->add_subcommand("sub", "subcoalgebras");
  c_sub->add_option("coalgebra", path1)->required();
  c_sub->callback([&] {
    action = [&] {
      SuccCoalgebra c = ws.coalg(path1);
      g_inputs.push_back(path1);
      SubcoalgebraListing l = subcoalgebras(c);
      json items = json::array();
      for (std::size_t i = 0; i < l.subsets.size(); ++i) {
        json e;
        std::vector<std::string> names;
        for (int s : l.subsets[i]) names.push_back(c.name(s));
        e["states"] = names;
        items.push_back(e);
      }
      emit("poset sub", json{{"count", items.size()}, {"subcoalgebras", items}});
    };
  });
  auto* c_quot = c_poset->add_subcommand("quot", "quotient algebras");
  c_quot->add_option("algebra", path1)->required();
  c_quot->callback([&] {
    action = [&] {
      SuccAlgebra a = ws.alg(path1);
      g_inputs.push_back(path1);
      QuotientListing l = quotient_algebras(a);
      json items = json::array();
      for (const auto& q : l.algebras) items.push_back(json_of_algebra(q));
      emit("poset quot", json{{"count", items.size()}, {"quotients", items}});
    };
  });

  // measure check|enum|compose
  auto* c_measure = app.add_subcommand("measure", "measuring operations");
  auto* c_check = c_measure->add_subcommand("check", "verify a measuring");
  c_check->add_option("C", path1)->required();
  c_check->add_option("A", path2)->required();
  c_check->add_option("B", path3)->required();
  c_check->add_option("phi", path4)->required();
  c_check->callback([&] {
    action = [&] {
      Measuring m;
      m.C = ws.fin_coalg(path1);
      m.A = ws.fin_alg(path2);
      m.B = ws.fin_alg(path3);
      g_inputs.insert(g_inputs.end(), {path1, path2, path3});
      m.phi = read_phi(path4);
      CheckResult r = is_measuring(m);
      json out;
      out["ok"] = r.ok;
      if (!r.ok) out["witness"] = r.witness;
      emit("measure check", out);
    };
  });
  auto* c_enum = c_measure->add_subcommand("enum", "enumerate measurings");
  c_enum->add_option("C", path1)->required();
  c_enum->add_option("A", path2)->required();
  c_enum->add_option("B", path3)->required();
  c_enum->add_flag("--count-only", count_only);
  c_enum->callback([&] {
    action = [&] {
      SuccCoalgebra c = ws.coalg(path1);
      SuccAlgebra a = ws.alg(path2), b = ws.alg(path3);
      g_inputs.insert(g_inputs.end(), {path1, path2, path3});
      EnumResult r = enumerate_measurings(c, a, b);
      json out;
      out["count"] = r.items.size();
      out["truncated"] = r.truncated;
      if (!count_only) {
        json items = json::array();
        for (const auto& phi : r.items) items.push_back(json(phi));
        out["measurings"] = items;
      }
      emit("measure enum", out);
    };
  });
  auto* c_compose = c_measure->add_subcommand("compose", "compose measurings");
  c_compose->add_option("g", path1)->required();
  c_compose->add_option("f", path2)->required();
  c_compose->callback([&] {
    action = [&] {
      Measuring g = read_measuring(path1);
      Measuring f = read_measuring(path2);
      Measuring comp = compose_measurings(g, f);
      json out;
      out["states"] = comp.C.carrier.names();
      out["phi"] = json(comp.phi);
      out["ok"] = is_measuring(comp).ok;
      emit("measure compose", out);
    };
  });

  // conv <C> <B>
  auto* c_conv = app.add_subcommand("conv", "convolution algebra [C,B]");
  c_conv->add_option("C", path1)->required();
  c_conv->add_option("B", path2)->required();
  c_conv->callback([&] {
    action = [&] {
      const ParsedStructure& cs = ws.load(path1);
      const ParsedStructure& bs = ws.load(path2);
      g_inputs.insert(g_inputs.end(), {path1, path2});
      json out;
      if (cs.kind == ParsedStructure::Kind::IdsuccCoalgebra &&
          bs.kind == ParsedStructure::Kind::IdsuccAlgebra) {
        SuccAlgebra conv = convolution_succ(cs.coalg, bs.alg);
        out["algebra"] = json_of_algebra(conv);
      } else {
        FinAlgebra conv = convolution_algebra(ws.fin_coalg(path1), ws.fin_alg(path2));
        out["algebra"] = json_of_fin_algebra(conv);
      }
      emit("conv", out);
    };
  });

  // umeas classify|graph
  auto* c_umeas = app.add_subcommand("umeas", "universal measuring coalgebra");
  auto* c_classify = c_umeas->add_subcommand("classify", "name it");
  c_classify->add_option("A", path1)->required();
  c_classify->add_option("B", path2)->required();
  c_classify->callback([&] {
    action = [&] {
      SuccAlgebra a = ws.alg(path1), b = ws.alg(path2);
      g_inputs.insert(g_inputs.end(), {path1, path2});
      SubterminalName n = classify_universal(a, b);
      json out;
      out["name"] = n.str();
      emit("umeas classify", out);
    };
  });
  auto* c_graph = c_umeas->add_subcommand("graph", "present it as a graph");
  c_graph->add_option("A", path1)->required();
  c_graph->add_option("B", path2)->required();
  c_graph->add_option("--dot", dot_path, "also write DOT to this file");
  c_graph->callback([&] {
    action = [&] {
      SuccAlgebra a = ws.alg(path1), b = ws.alg(path2);
      g_inputs.insert(g_inputs.end(), {path1, path2});
      MeasuringGraph g = measuring_graph(a, b);
      json out;
      json nodes = json::array();
      for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        json n;
        n["map"] = g.nodes[i];
        n["terminal"] = static_cast<bool>(g.terminal[i]);
        nodes.push_back(n);
      }
      out["nodes"] = nodes;
      json edges = json::array();
      for (const auto& [x, y] : g.edges) edges.push_back(json::array({x, y}));
      out["edges"] = edges;
      if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        if (!dot) throw validation_error("cannot write " + dot_path);
        dot << g.to_dot();
        out["dot"] = dot_path;
      }
      emit("umeas graph", out);
    };
  });

  // dual alg|coalg
  auto* c_dual = app.add_subcommand("dual", "dual algebra / dual coalgebra");
  auto* c_dalg = c_dual->add_subcommand("alg", "[C, N]");
  c_dalg->add_option("C", path1)->required();
  c_dalg->callback([&] {
    action = [&] {
      SuccCoalgebra c = ws.coalg(path1);
      g_inputs.push_back(path1);
      LazyAlgebra d = dual_algebra(c);
      SaturationResult r = lazy_saturation(d, c.size() + 3);
      json out;
      out["zero"] = d.zero();
      out["saturates"] = r.saturated;
      if (r.saturated) {
        out["prefix"] = r.prefix;
        out["cycle"] = r.cycle;
      }
      out["chain"] = r.chain;
      emit("dual alg", out);
    };
  });
  auto* c_dcoalg = c_dual->add_subcommand("coalg", "classified A(A, N)");
  c_dcoalg->add_option("A", path1)->required();
  c_dcoalg->callback([&] {
    action = [&] {
      SuccAlgebra a = ws.alg(path1);
      g_inputs.push_back(path1);
      json out;
      out["name"] = dual_coalgebra_classified(a).str();
      emit("dual coalg", out);
    };
  });

  // tensor <C> <A> [--homs-into B]
  auto* c_tensor = app.add_subcommand("tensor", "measuring tensor C |> A");
  c_tensor->add_option("C", path1)->required();
  c_tensor->add_option("A", path2)->required();
  c_tensor->add_option("--homs-into", path3, "also count homs into this algebra");
  c_tensor->callback([&] {
    action = [&] {
      SuccCoalgebra c = ws.coalg(path1);
      SuccAlgebra a = ws.alg(path2);
      g_inputs.insert(g_inputs.end(), {path1, path2});
      PresentedAlgebra t = measuring_tensor(c, a);
      json out;
      json classes = json::array();
      for (int r : t.class_reps()) {
        json e;
        e["name"] = t.class_name(r);
        e["succ"] = t.succ_of[r] < 0 ? json(nullptr)
                                     : json(t.class_name(t.find(t.succ_of[r])));
        classes.push_back(e);
      }
      out["zero"] = t.class_name(t.find(0));
      out["classes"] = classes;
      if (!path3.empty()) {
        SuccAlgebra b = ws.alg(path3);
        g_inputs.push_back(path3);
        out["hom_count"] = t.count_homs_into(b);
      }
      emit("tensor", out);
    };
  });

  // cinitial check|terminal|dualmap
  auto* c_cin = app.add_subcommand("cinitial", "bounded C-initiality");
  auto* c_ccheck = c_cin->add_subcommand("check", "family-relative verdict");
  c_ccheck->add_option("A", path1)->required();
  c_ccheck->add_option("C", path2)->required();
  c_ccheck->add_option("--family-size", family_size);
  c_ccheck->callback([&] {
    action = [&] {
      SuccAlgebra a = ws.alg(path1);
      SuccCoalgebra c = ws.coalg(path2);
      g_inputs.insert(g_inputs.end(), {path1, path2});
      std::vector<SuccAlgebra> family = all_algebras_upto_iso(family_size);
      CInitialReport r = is_C_initial_bounded(a, c, family);
      json out;
      json counts = json::array();
      for (std::size_t i = 0; i < family.size(); ++i) {
        json e;
        e["algebra"] = json_of_algebra(family[i])["text"];
        e["count"] = r.counts[i];
        e["skipped"] = r.counts[i] < 0;
        counts.push_back(e);
      }
      out["verdict"] = r.verdict == CInitialReport::Verdict::OnFamily
                           ? "C-initial-on-family"
                       : r.verdict == CInitialReport::Verdict::Refuted
                           ? "refuted"
                           : "inconclusive";
      if (r.witness >= 0) out["witness"] = r.witness;
      out["counts"] = counts;
      emit("cinitial check", out);
    };
  });
  auto* c_cterm = c_cin->add_subcommand("terminal", "terminal C-initial search");
  c_cterm->add_option("C", path1)->required();
  c_cterm->add_option("--bound", size_bound);
  c_cterm->callback([&] {
    action = [&] {
      SuccCoalgebra c = ws.coalg(path1);
      g_inputs.push_back(path1);
      TerminalSearchResult r = terminal_C_initial_bounded(c, size_bound);
      json out;
      out["found"] = r.found;
      if (r.found) out["algebra"] = json_of_algebra(r.algebra);
      out["candidates"] = r.candidates;
      out["note"] = r.note;
      emit("cinitial terminal", out);
    };
  });
  auto* c_cdual = c_cin->add_subcommand("dualmap", "unique map A -> [C, N]");
  c_cdual->add_option("A", path1)->required();
  c_cdual->add_option("C", path2)->required();
  c_cdual->callback([&] {
    action = [&] {
      SuccAlgebra a = ws.alg(path1);
      SuccCoalgebra c = ws.coalg(path2);
      g_inputs.insert(g_inputs.end(), {path1, path2});
      json out;
      out["map"] = unique_map_to_dual(a, c);
      emit("cinitial dualmap", out);
    };
  });

  // gf conv|count
  auto* c_gf = app.add_subcommand("gf", "mixed GF-algebra operations");
  auto* c_gconv = c_gf->add_subcommand("conv", "GF-algebra on [C, A]");
  c_gconv->add_option("automaton", path1)->required();
  c_gconv->add_option("A", path2)->required();
  c_gconv->callback([&] {
    action = [&] {
      MooreCoalgebra c = ws.automaton(path1);
      g_inputs.push_back(path1);
      GFAlgebra a = ws.gf_alg(path2, c.alphabet);
      g_inputs.push_back(path2);
      emit("gf conv", json{{"algebra", json_of_fin_algebra(gf_convolution(c, a))}});
    };
  });
  auto* c_gcount = c_gf->add_subcommand("count", "|Alg_GF(A, [C, B])|");
  c_gcount->add_option("automaton", path1)->required();
  c_gcount->add_option("A", path2)->required();
  c_gcount->add_option("B", path3)->required();
  c_gcount->callback([&] {
    action = [&] {
      MooreCoalgebra c = ws.automaton(path1);
      g_inputs.push_back(path1);
      GFAlgebra a = ws.gf_alg(path2, c.alphabet);
      GFAlgebra b = ws.gf_alg(path3, c.alphabet);
      g_inputs.insert(g_inputs.end(), {path2, path3});
      emit("gf count", json{{"count", gf_measuring_count(c, a, b)}});
    };
  });

  // laws
  auto* c_laws = app.add_subcommand("laws", "run the law-check suites");
  c_laws->add_option("--max-size", laws_size);
  c_laws->add_flag("--corrupt-nabla", corrupt, "negative control");
  c_laws->callback([&] {
    action = [&] {
      LawsRun r = run_laws(laws_size, corrupt);
      json suites = json::array();
      for (const auto& s : r.suites) {
        json e;
        e["functor"] = s.functor;
        json rows = json::array();
        for (const auto& row : s.lax.rows) rows.push_back(json_of_law_row(row));
        rows.push_back(json_of_law_row(s.naturality));
        rows.push_back(json_of_law_row(s.functoriality));
        e["rows"] = rows;
        e["ok"] = s.ok();
        suites.push_back(e);
      }
      emit("laws", json{{"all_pass", r.all_pass()}, {"suites", suites}});
    };
  });

  // let global flags appear after the subcommand too
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands([](const CLI::App*) { return true; })) {
      sub->fallthrough();
      allow_fallthrough(sub);
    }
  };
  allow_fallthrough(&app);

  CLI11_PARSE(app, argc, argv);
  if (enum_bound > 0)
    setenv("MLAB_ENUM_BOUND", std::to_string(enum_bound).c_str(), 1);
  try {
    action();
  } catch (const bound_exceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const precondition_failed& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const parse_diagnostic& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const mlab_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
