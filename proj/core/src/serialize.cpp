#include "pathcrystal/serialize.hpp"

#include <algorithm>

#include <json.hpp>

namespace pathcrystal {

namespace {

using nlohmann::json;

json weight_json(const Weight& w) {
  json a = json::array();
  for (const auto& x : w.c) a.push_back(x.str());
  return a;
}

Weight weight_from(const json& a, int rank) {
  if (!a.is_array() || static_cast<int>(a.size()) != rank)
    throw std::invalid_argument("weight: expected " + std::to_string(rank) +
                                " coordinates");
  Weight w;
  for (const auto& x : a) w.c.push_back(Rational::parse(x.get<std::string>()));
  return w;
}

json step_json(const AffineWeight& s) {
  return json::array({s.level.str(), weight_json(s.finite)});
}

AffineWeight step_from(const json& a, int rank) {
  if (!a.is_array() || a.size() != 2)
    throw std::invalid_argument("step: expected [level, coords]");
  return {Rational::parse(a[0].get<std::string>()), weight_from(a[1], rank)};
}

json path_json(const Path& p) {
  json steps = json::array();
  for (const auto& s : p.steps()) steps.push_back(step_json(s));
  return json{{"steps", steps}};
}

Path path_from(const json& j, int rank) {
  std::vector<AffineWeight> steps;
  for (const auto& s : j.at("steps")) steps.push_back(step_from(s, rank));
  return Path::of(std::move(steps));
}

}  // namespace

std::string path_to_json(const Path& p) { return path_json(p).dump(2); }

Path path_from_json(const RootSystem& rs, const std::string& text) {
  return path_from(json::parse(text), rs.rank());
}

std::string crystal_to_json(const Crystal& c) {
  json nodes = json::array();
  for (const auto& n : c.nodes) nodes.push_back(path_json(n));
  json edges = json::array();
  for (const auto& e : c.edges)
    edges.push_back(json{{"from", e.from},
                         {"to", e.to},
                         {"color", e.color},
                         {"dir", e.lowering ? "f" : "e"}});
  return json{{"nodes", nodes}, {"edges", edges}}.dump(2);
}

Crystal crystal_from_json(const RootSystem& rs, const std::string& text) {
  json j = json::parse(text);
  Crystal c;
  for (const auto& n : j.at("nodes")) c.nodes.push_back(path_from(n, rs.rank()));
  for (const auto& e : j.at("edges"))
    c.edges.push_back({e.at("from").get<int>(), e.at("to").get<int>(),
                       e.at("color").get<int>(),
                       e.at("dir").get<std::string>() == "f"});
  return c;
}

std::string crystal_to_dot(const Crystal& c) {
  std::string out = "digraph crystal {\n  rankdir=TB;\n";
  for (size_t k = 0; k < c.nodes.size(); ++k) {
    out += "  n" + std::to_string(k) + " [label=\"" +
           c.nodes[k].weight().str() + "\"];\n";
  }
  for (const auto& e : c.edges) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) +
           " [label=\"" + std::to_string(e.color) + "\", style=" +
           (e.lowering ? "solid" : "dashed") + "];\n";
  }
  out += "}\n";
  return out;
}

std::string root_system_to_json(const RootSystem& rs) {
  json cart = json::array();
  for (const auto& row : rs.cartan()) cart.push_back(row);
  json roots = json::array();
  for (const auto& pr : rs.positive_roots())
    roots.push_back(json{{"root", pr.root}, {"coroot", pr.coroot}});
  json sigma = json::array();
  for (const auto& aut : rs.minuscule())
    sigma.push_back(json{{"node", aut.node},
                         {"perm", aut.node_perm},
                         {"order", aut.order},
                         {"bar_sigma_word", aut.finite_word}});
  return json{{"type", std::string(1, rs.type())},
              {"rank", rs.rank()},
              {"cartan", cart},
              {"positive_roots", roots},
              {"marks", rs.marks()},
              {"minuscule_nodes", rs.minuscule_nodes()},
              {"sigma", sigma}}
      .dump(2);
}

std::string skein_to_json(const Skein& s) {
  return json{{"endpoint", step_json(s.endpoint)},
              {"coil", path_json(s.coil)},
              {"tail", path_json(s.tail)},
              {"expanded", s.expanded}}
      .dump(2);
}

std::string report_to_json(const VerifyReport& r) {
  json dom = json::array();
  for (const auto& p : r.dominant_paths) dom.push_back(path_json(p));
  json dec = json::array();
  for (const auto& [w, mult] : r.decomposition)
    dec.push_back(json::array({weight_json(w), mult}));
  return json{{"theorem", r.theorem},
              {"type", std::string(1, r.type)},
              {"rank", r.rank},
              {"nodes", r.nodes},
              {"lhs_count", r.lhs_count},
              {"rhs_count", r.rhs_count},
              {"equal", r.equal},
              {"status", to_string(r.status)},
              {"dominant_paths", dom},
              {"decomposition", dec},
              {"elapsed_ms", r.elapsed_ms},
              {"notes", r.notes}}
      .dump(2);
}

std::string path_set_to_json(const PathSet& set) {
  std::vector<Path> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  json paths = json::array();
  for (const auto& p : sorted) paths.push_back(path_json(p));
  return json{{"paths", paths}}.dump(2);
}

PathSet path_set_from_json(const RootSystem& rs, const std::string& text) {
  json j = json::parse(text);
  PathSet out;
  for (const auto& p : j.at("paths")) out.insert(path_from(p, rs.rank()));
  return out;
}

}  // namespace pathcrystal
