#include "cli.hpp"

#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "arrangeo/compat_graph.hpp"
#include "arrangeo/concurrency.hpp"
#include "arrangeo/errors.hpp"
#include "arrangeo/infinity.hpp"
#include "arrangeo/io.hpp"
#include "arrangeo/isomorphism.hpp"
#include "arrangeo/regions.hpp"

namespace arrangeo {

namespace {

using nlohmann::json;

json subset_json(const Subset& s) { return s.one_based(); }

json subsets_json(const std::vector<Subset>& list) {
  json out = json::array();
  for (const auto& s : list) out.push_back(subset_json(s));
  return out;
}

std::string one_based_list(const std::vector<std::size_t>& zero_based) {
  std::string s;
  for (std::size_t i = 0; i < zero_based.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(zero_based[i] + 1);
  }
  return s;
}

json cpb_json(const AntipodalMap& d) {
  return {{"perm", d.perm.to_string()}, {"flips", d.flips_string()}};
}

struct Output {
  bool json_mode = false;
  std::ostream* out = nullptr;
  std::string command;

  json envelope() const { return {{"schema", 1}, {"command", command}}; }

  // Prints either the JSON document or the text, and returns `code`.
  int emit(json body, const std::string& text, int code) const {
    if (json_mode) {
      json doc = envelope();
      for (auto& [k, v] : body.items()) doc[k] = v;
      *out << doc.dump(2) << "\n";
    } else {
      *out << text;
    }
    return code;
  }
};

Subset parse_subset_option(const std::string& text) { return Subset::parse(text); }

QVector parse_vector_option(const std::string& text) {
  std::vector<Rational> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) entries.push_back(Rational::parse(item));
  if (entries.empty()) throw ParseError("empty vector");
  return QVector(std::move(entries));
}

std::size_t parse_index_option(long index, std::size_t n) {
  if (index < 1 || static_cast<std::size_t>(index) > n) throw ParseError("hyperplane index out of range");
  return static_cast<std::size_t>(index - 1);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on hyperplane arrangements in general position", "arrangeo"};
  app.require_subcommand(1);
  app.fallthrough();
  Output o;
  o.out = &out;
  app.add_flag("--json", o.json_mode, "emit JSON (schema 1)");

  std::function<int()> action;
  std::string file1, file2, perm_text, flips_text, subset_text, direction_text;
  std::size_t k = 1;
  long index = 0;
  bool degrees = false, edge_list = false, dot = false;

  // -------------------------------------------------------------- arrangement
  auto* validate = app.add_subcommand("validate", "check general position");
  validate->add_option("file", file1, "arrangement JSON")->required();
  validate->callback([&] {
    action = [&] {
      o.command = "validate";
      const Arrangement arr = load_arrangement(file1, false);
      const auto v = validate_general_position(arr);
      json body{{"valid", v.valid}, {"n", arr.size()}, {"m", arr.dim()}};
      body["witness"] = v.witness ? subset_json(*v.witness) : json(nullptr);
      if (!v.valid) body["reason"] = v.reason;
      const std::string text = v.valid ? "valid: " + std::to_string(arr.size()) +
                                             " hyperplanes in general position in dimension " +
                                             std::to_string(arr.dim()) + "\n"
                                       : "invalid: " + v.reason + "\n";
      return o.emit(body, text, v.valid ? 0 : 1);
    };
  });

  auto* vertices = app.add_subcommand("vertices", "list the vertices");
  vertices->add_option("file", file1)->required();
  vertices->callback([&] {
    action = [&] {
      o.command = "vertices";
      const Arrangement arr = load_arrangement(file1);
      json list = json::array();
      std::string text;
      if (arr.size() >= arr.dim()) {
        for (const auto& s : subsets_of_size(arr.size(), arr.dim())) {
          const QVector p = vertex_point(arr, s);
          list.push_back({{"subset", subset_json(s)}, {"point", to_json(p)}});
          text += s.to_string() + ": " + p.to_string() + "\n";
        }
      }
      return o.emit({{"vertices", list}}, text, 0);
    };
  });

  auto* skel = app.add_subcommand("skeleton", "list the flats cut out by k hyperplanes");
  skel->add_option("file", file1)->required();
  skel->add_option("-k,--k", k, "number of hyperplanes per flat")->required();
  skel->callback([&] {
    action = [&] {
      o.command = "skeleton";
      const Arrangement arr = load_arrangement(file1);
      json list = json::array();
      std::string text;
      for (const auto& f : skeleton(arr, k)) {
        json dirs = json::array();
        std::string dtext;
        for (const auto& d : f.directions) {
          dirs.push_back(to_json(d));
          dtext += " " + d.to_string();
        }
        list.push_back({{"subset", subset_json(f.subscripts)}, {"point", to_json(f.point)}, {"directions", dirs}});
        text += f.subscripts.to_string() + ": point " + f.point.to_string() +
                (f.directions.empty() ? std::string() : " directions" + dtext) + "\n";
      }
      return o.emit({{"flats", list}}, text, 0);
    };
  });

  auto* regions = app.add_subcommand("regions", "enumerate the open regions");
  regions->add_option("file", file1)->required();
  regions->callback([&] {
    action = [&] {
      o.command = "regions";
      const Arrangement arr = load_arrangement(file1);
      const auto list = enumerate_regions(arr);
      const auto c = tally(list);
      std::string text = std::to_string(c.total) + " regions (" + std::to_string(c.bounded) + " bounded, " +
                         std::to_string(c.unbounded) + " unbounded)\n";
      json items = json::array();
      for (const auto& r : list) {
        text += r.sign.to_string() + " " + (r.bounded ? "bounded" : "unbounded") + " " + r.witness->to_string() + "\n";
        items.push_back({{"sign", r.sign.to_string()}, {"bounded", r.bounded}, {"witness", to_json(*r.witness)}});
      }
      json body{{"total", c.total}, {"bounded", c.bounded}, {"unbounded", c.unbounded}, {"regions", items}};
      return o.emit(body, text, 0);
    };
  });

  // -------------------------------------------------------------- isomorphism
  auto* iso = app.add_subcommand("iso", "decide arrangement isomorphism");
  iso->add_option("first", file1)->required();
  iso->add_option("second", file2)->required();
  iso->add_option("--perm", perm_text, "check this bijection, 1-based images such as 2,1,3");
  iso->callback([&] {
    action = [&] {
      o.command = "iso";
      const Arrangement a1 = load_arrangement(file1);
      const Arrangement a2 = load_arrangement(file2);
      if (!perm_text.empty()) {
        const Permutation phi = Permutation::parse(perm_text);
        const auto v = is_isomorphism(a1, a2, phi);
        json body{{"isomorphic", v.ok}, {"perm", phi.to_string()}};
        if (!v.ok) body["witness"] = v.witness->to_string();
        const std::string text = v.ok ? "isomorphic under " + phi.to_string() + "\n"
                                      : "not isomorphic under " + phi.to_string() + ": " + v.witness->to_string() + "\n";
        return o.emit(body, text, v.ok ? 0 : 1);
      }
      const auto phi = find_isomorphism(a1, a2);
      json body{{"isomorphic", phi.has_value()}};
      body["perm"] = phi ? json(phi->to_string()) : json(nullptr);
      return o.emit(body, phi ? "isomorphic: " + phi->to_string() + "\n" : "not isomorphic\n", phi ? 0 : 1);
    };
  });

  auto* tiso = app.add_subcommand("translation-iso", "isomorphism up to translating hyperplanes");
  tiso->add_option("first", file1)->required();
  tiso->add_option("second", file2)->required();
  tiso->callback([&] {
    action = [&] {
      o.command = "translation-iso";
      const auto v = translation_equivalent(load_arrangement(file1), load_arrangement(file2));
      json body{{"equivalent", v.equivalent}};
      body["cpb"] = v.cpb ? cpb_json(*v.cpb) : json(nullptr);
      const std::string text = v.equivalent ? "equivalent up to translation: perm " + v.cpb->perm.to_string() +
                                                  " flips " + v.cpb->flips_string() + "\n"
                                            : "not equivalent up to translation\n";
      return o.emit(body, text, v.equivalent ? 0 : 1);
    };
  });

  // -------------------------------------------------------------- normal systems
  auto* ns = app.add_subcommand("ns", "normal systems");
  ns->require_subcommand(1);
  auto* ns_extract = ns->add_subcommand("extract", "normal system of an arrangement");
  ns_extract->add_option("file", file1)->required();
  ns_extract->callback([&] {
    action = [&] {
      o.command = "ns extract";
      const NormalSystem sys = extract_normal_system(load_arrangement(file1));
      if (o.json_mode) return o.emit({{"system", to_json(sys)}}, "", 0);
      out << to_json(sys).dump(2) << "\n";
      return 0;
    };
  });
  auto* ns_check = ns->add_subcommand("check-cpb", "check a convex positive bijection");
  ns_check->add_option("first", file1)->required();
  ns_check->add_option("second", file2)->required();
  ns_check->add_option("--perm", perm_text)->required();
  ns_check->add_option("--flips", flips_text, "one +/- per line")->required();
  ns_check->callback([&] {
    action = [&] {
      o.command = "ns check-cpb";
      const AntipodalMap d = AntipodalMap::parse(perm_text, flips_text);
      const auto v = is_cpb(load_normal_system(file1), load_normal_system(file2), d);
      json body{{"cpb", v.ok}};
      std::string text = v.ok ? "convex positive bijection\n" : "not a convex positive bijection";
      if (!v.ok) {
        std::string base;
        json jb = json::array();
        for (const auto& s : v.witness->base) {
          base += (base.empty() ? "" : ",") + s.to_string();
          jb.push_back(s.to_string());
        }
        body["witness"] = {{"base", jb}, {"u", v.witness->u.to_string()}};
        text += ": base {" + base + "}, vector " + v.witness->u.to_string() + "\n";
      }
      return o.emit(body, text, v.ok ? 0 : 1);
    };
  });
  auto* ns_iso = ns->add_subcommand("iso", "search for a convex positive bijection");
  ns_iso->add_option("first", file1)->required();
  ns_iso->add_option("second", file2)->required();
  ns_iso->callback([&] {
    action = [&] {
      o.command = "ns iso";
      const auto d = find_cpb(load_normal_system(file1), load_normal_system(file2));
      json body{{"isomorphic", d.has_value()}};
      body["cpb"] = d ? cpb_json(*d) : json(nullptr);
      const std::string text =
          d ? "isomorphic: perm " + d->perm.to_string() + " flips " + d->flips_string() + "\n" : "not isomorphic\n";
      return o.emit(body, text, d ? 0 : 1);
    };
  });

  // -------------------------------------------------------------- concurrency
  auto* conc = app.add_subcommand("concurrency", "concurrency arrangement of the offsets");
  conc->require_subcommand(1);
  auto* c_normals = conc->add_subcommand("normals", "concurrency hyperplane normals");
  c_normals->add_option("file", file1)->required();
  c_normals->callback([&] {
    action = [&] {
      o.command = "concurrency normals";
      const Arrangement arr = load_arrangement(file1);
      json list = json::array();
      std::string text;
      for (const auto& h : concurrency_arrangement(arr.coefficients())) {
        list.push_back({{"subset", subset_json(h.subset)}, {"normal", to_json(h.normal)}});
        text += h.subset.to_string() + ": " + h.normal.to_string() + "\n";
      }
      return o.emit({{"normals", list}}, text, 0);
    };
  });
  auto* c_sig = conc->add_subcommand("signature", "cone of the offset vector");
  c_sig->add_option("file", file1)->required();
  c_sig->callback([&] {
    action = [&] {
      o.command = "concurrency signature";
      const auto sig = cone_signature(load_arrangement(file1));
      json list = json::array();
      for (const auto& [s, sign] : sig.entries) list.push_back({{"subset", subset_json(s)}, {"sign", std::string(1, to_char(sign))}});
      return o.emit({{"signature", list}}, sig.to_string(), 0);
    };
  });
  auto subset_listing = [&](CLI::App* sub, const std::string& name,
                            std::function<std::vector<Subset>(const Arrangement&)> fn) {
    sub->add_option("file", file1)->required();
    sub->callback([&, name, fn] {
      action = [&, name, fn] {
        o.command = "concurrency " + name;
        const auto list = fn(load_arrangement(file1));
        std::string text;
        for (const auto& s : list) text += s.to_string() + "\n";
        return o.emit({{name, subsets_json(list)}}, text, 0);
      };
    });
  };
  subset_listing(conc->add_subcommand("facets", "facets of the cone of b"), "facets", cone_facets);
  subset_listing(conc->add_subcommand("simplices", "simplex regions"), "simplices", simplex_polyhedralities);
  auto* c_cross = conc->add_subcommand("cross", "move b across a facet");
  c_cross->add_option("file", file1)->required();
  c_cross->add_option("--subset", subset_text, "facet subset, 1-based, e.g. 1,2,3")->required();
  c_cross->callback([&] {
    action = [&] {
      o.command = "concurrency cross";
      const Arrangement next = cross_facet(load_arrangement(file1), parse_subset_option(subset_text));
      if (o.json_mode) return o.emit({{"arrangement", to_json(next)}}, "", 0);
      out << to_json(next).dump(2) << "\n";
      return 0;
    };
  });

  // -------------------------------------------------------------- infinity
  auto* inf = app.add_subcommand("infinity", "hyperplanes at infinity");
  inf->require_subcommand(1);
  auto* i_add = inf->add_subcommand("add", "append a hyperplane at infinity");
  i_add->add_option("file", file1)->required();
  i_add->add_option("--direction", direction_text, "normal such as 2,1")->required();
  i_add->callback([&] {
    action = [&] {
      o.command = "infinity add";
      const Arrangement arr = load_arrangement(file1);
      const Arrangement ext = arr.appended(add_at_infinity(arr, parse_vector_option(direction_text)));
      if (o.json_mode) return o.emit({{"arrangement", to_json(ext)}}, "", 0);
      out << to_json(ext).dump(2) << "\n";
      return 0;
    };
  });
  auto* i_check = inf->add_subcommand("check", "is hyperplane k at infinity for the others?");
  i_check->add_option("file", file1)->required();
  i_check->add_option("--index", index, "1-based hyperplane (default: last)");
  i_check->callback([&] {
    action = [&] {
      o.command = "infinity check";
      const Arrangement arr = load_arrangement(file1);
      const std::size_t h = index == 0 ? arr.size() - 1 : parse_index_option(index, arr.size());
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < arr.size(); ++i)
        if (i != h) rest.push_back(i);
      const bool at = is_at_infinity(arr.restricted(Subset(rest)), arr[h]);
      const std::string text = "hyperplane " + std::to_string(h + 1) + (at ? " is" : " is not") + " at infinity\n";
      return o.emit({{"index", h + 1}, {"at_infinity", at}}, text, at ? 0 : 1);
    };
  });
  auto* i_order = inf->add_subcommand("order", "find an infinity build order");
  i_order->add_option("file", file1)->required();
  i_order->callback([&] {
    action = [&] {
      o.command = "infinity order";
      const auto order = is_infinity_arrangement(load_arrangement(file1));
      json body{{"order", order ? json(one_based_list(*order)) : json(nullptr)}};
      return o.emit(body, order ? one_based_list(*order) + "\n" : "none\n", order ? 0 : 1);
    };
  });
  auto* i_induce = inf->add_subcommand("induce", "arrangement induced on hyperplane k");
  i_induce->add_option("file", file1)->required();
  i_induce->add_option("--index", index, "1-based hyperplane (default: last)");
  i_induce->callback([&] {
    action = [&] {
      o.command = "infinity induce";
      const Arrangement arr = load_arrangement(file1);
      const std::size_t h = index == 0 ? arr.size() - 1 : parse_index_option(index, arr.size());
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < arr.size(); ++i)
        if (i != h) rest.push_back(i);
      const Arrangement induced = induced_arrangement(arr.restricted(Subset(rest)), arr[h]);
      if (o.json_mode) return o.emit({{"arrangement", to_json(induced)}}, "", 0);
      out << to_json(induced).dump(2) << "\n";
      return 0;
    };
  });

  // -------------------------------------------------------------- compat graph
  auto* compat = app.add_subcommand("compat", "graph of compatible pairs (m = 3)");
  compat->require_subcommand(1);
  auto* graph = compat->add_subcommand("graph", "build the graph");
  graph->add_option("file", file1, "normal system JSON")->required();
  auto* mode = graph->add_option_group("mode");
  mode->add_flag("--degrees", degrees, "degree of every vertex");
  mode->add_flag("--edges", edge_list, "list the edges");
  mode->add_flag("--dot", dot, "Graphviz output");
  mode->require_option(0, 1);
  graph->callback([&] {
    action = [&] {
      o.command = "compat graph";
      const CompatGraph g = build_graph(load_normal_system(file1));
      if (dot) {
        if (o.json_mode) return o.emit({{"dot", g.to_dot()}}, "", 0);
        out << g.to_dot();
        return 0;
      }
      json body{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
      std::string text = std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges\n";
      if (degrees) {
        json list = json::array();
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
          list.push_back({{"vertex", g.vertex(v).to_string()}, {"degree", g.degree(v)}});
          text += g.vertex(v).to_string() + ": " + std::to_string(g.degree(v)) + "\n";
        }
        body["degrees"] = list;
      }
      if (edge_list) {
        json list = json::array();
        for (const auto& [a, b] : g.edges()) {
          list.push_back({g.vertex(a).to_string(), g.vertex(b).to_string()});
          text += g.vertex(a).to_string() + " -- " + g.vertex(b).to_string() + "\n";
        }
        body["edge_list"] = list;
      }
      return o.emit(body, text, 0);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace arrangeo
