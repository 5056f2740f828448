#include "feynhopf/graph_io.hpp"

#include <sstream>

#include "feynhopf/error.hpp"

namespace feynhopf::graph {

using nlohmann::json;

json to_json(const FeynmanGraph &g) {
  json inv = json::array();
  for (auto [a, b] : g.edges()) inv.push_back(json::array({a, b}));
  json ext = json::object();
  for (int l = 0; l < g.external_count(); ++l)
    ext[std::to_string(l + 1)] = g.external_vertices()[l];
  return json{{"darts", g.dart_count()},
              {"involution", std::move(inv)},
              {"vertices", g.vertices()},
              {"external", std::move(ext)}};
}

namespace {

int as_index(const json &j, const std::string &pointer) {
  if (!j.is_number_integer() || j.get<long>() < 0)
    throw ValidationError(pointer, "expected a non-negative integer");
  return j.get<int>();
}

}  // namespace

FeynmanGraph from_json(const json &j, const std::string &pointer) {
  if (!j.is_object()) throw ValidationError(pointer, "expected a graph object");
  for (const char *key : {"darts", "involution", "vertices", "external"})
    if (!j.contains(key)) throw ValidationError(pointer + "/" + key, "missing field");
  const int n = as_index(j["darts"], pointer + "/darts");

  const json &inv = j["involution"];
  if (!inv.is_array()) throw ValidationError(pointer + "/involution", "expected a list");
  std::vector<int> partner(n, -1);
  for (std::size_t i = 0; i < inv.size(); ++i) {
    const std::string at = pointer + "/involution/" + std::to_string(i);
    if (!inv[i].is_array() || inv[i].size() != 2)
      throw ValidationError(at, "expected a dart pair [a, b]");
    const int a = as_index(inv[i][0], at + "/0"), b = as_index(inv[i][1], at + "/1");
    if (a >= n || b >= n) throw ValidationError(at, "dart out of range");
    if (a == b) throw ValidationError(at, "a dart cannot pair with itself");
    if (partner[a] != -1 || partner[b] != -1)
      throw ValidationError(at, "dart paired twice");
    partner[a] = b;
    partner[b] = a;
  }
  for (int a = 0; a < n; ++a)
    if (partner[a] == -1)
      throw ValidationError(pointer + "/involution",
                            "dart " + std::to_string(a) + " is unpaired");

  const json &vs = j["vertices"];
  if (!vs.is_array()) throw ValidationError(pointer + "/vertices", "expected a list");
  std::vector<std::vector<int>> vertices;
  for (std::size_t v = 0; v < vs.size(); ++v) {
    const std::string at = pointer + "/vertices/" + std::to_string(v);
    if (!vs[v].is_array()) throw ValidationError(at, "expected a list of darts");
    vertices.emplace_back();
    for (std::size_t k = 0; k < vs[v].size(); ++k)
      vertices.back().push_back(as_index(vs[v][k], at + "/" + std::to_string(k)));
  }

  const json &ext = j["external"];
  if (!ext.is_object()) throw ValidationError(pointer + "/external", "expected an object");
  std::vector<int> external(ext.size(), -1);
  for (const auto &[label, vertex] : ext.items()) {
    const std::string at = pointer + "/external/" + label;
    std::size_t l = 0;
    try {
      l = std::stoul(label);
    } catch (const std::exception &) {
      throw ValidationError(at, "external labels must be integers 1..N");
    }
    if (l < 1 || l > external.size() || std::to_string(l) != label)
      throw ValidationError(at, "external labels must be exactly 1..N");
    external[l - 1] = as_index(vertex, at);
  }

  try {
    return FeynmanGraph(std::move(partner), std::move(vertices), std::move(external));
  } catch (const DomainError &e) {
    throw ValidationError(pointer, e.what());
  }
}

std::string to_dot(const FeynmanGraph &g, const std::string &name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.is_external(v))
      os << "  v" << v << " [shape=box, label=\"" << g.label_of(v) << "\"];\n";
    else
      os << "  v" << v << " [shape=circle, label=\"" << g.valence(v) << "\"];\n";
  }
  for (auto [a, b] : g.edges())
    os << "  v" << g.vertex_of(a) << " -- v" << g.vertex_of(b) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace feynhopf::graph
