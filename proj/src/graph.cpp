#include "feynhopf/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "feynhopf/error.hpp"

namespace feynhopf::graph {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

FeynmanGraph::FeynmanGraph(std::vector<int> partner,
                           std::vector<std::vector<int>> vertices,
                           std::vector<int> external)
    : partner_(std::move(partner)),
      vertices_(std::move(vertices)),
      external_(std::move(external)) {
  const int d = dart_count();
  for (int a = 0; a < d; ++a) {
    const int b = partner_[a];
    if (b < 0 || b >= d)
      throw DomainError("involution maps dart " + std::to_string(a) +
                        " outside the dart set");
    if (b == a)
      throw DomainError("involution has a fixed point at dart " + std::to_string(a));
    if (partner_[b] != a)
      throw DomainError("involution is not an involution at dart " +
                        std::to_string(a));
  }
  dart_vertex_.assign(d, -1);
  for (int v = 0; v < vertex_count(); ++v) {
    if (vertices_[v].empty())
      throw DomainError("vertex " + std::to_string(v) + " has no darts");
    for (int a : vertices_[v]) {
      if (a < 0 || a >= d)
        throw DomainError("vertex " + std::to_string(v) + " lists unknown dart " +
                          std::to_string(a));
      if (dart_vertex_[a] != -1)
        throw DomainError("dart " + std::to_string(a) + " belongs to two vertices");
      dart_vertex_[a] = v;
    }
  }
  for (int a = 0; a < d; ++a)
    if (dart_vertex_[a] == -1)
      throw DomainError("dart " + std::to_string(a) + " belongs to no vertex");
  label_.assign(vertex_count(), 0);
  for (std::size_t l = 0; l < external_.size(); ++l) {
    const int v = external_[l];
    if (v < 0 || v >= vertex_count())
      throw DomainError("external label " + std::to_string(l + 1) +
                        " points outside the vertex set");
    if (label_[v] != 0)
      throw DomainError("vertex " + std::to_string(v) + " carries two labels");
    if (vertices_[v].size() != 1)
      throw DomainError("external vertex " + std::to_string(v) +
                        " is not univalent");
    label_[v] = static_cast<int>(l + 1);
  }
}

FeynmanGraph FeynmanGraph::from_edges(int externals,
                                      const std::vector<int> &internal_valences,
                                      const std::vector<std::pair<int, int>> &edges) {
  const int n = externals + static_cast<int>(internal_valences.size());
  std::vector<std::vector<int>> vertices(n);
  std::vector<int> partner;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw DomainError("edge endpoint outside the vertex set");
    const int a = static_cast<int>(partner.size());
    partner.push_back(a + 1);
    partner.push_back(a);
    vertices[u].push_back(a);
    vertices[v].push_back(a + 1);
  }
  for (int i = 0; i < static_cast<int>(internal_valences.size()); ++i)
    if (static_cast<int>(vertices[externals + i].size()) != internal_valences[i])
      throw DomainError("internal vertex " + std::to_string(externals + i) +
                        " has valence " +
                        std::to_string(vertices[externals + i].size()) +
                        ", declared " + std::to_string(internal_valences[i]));
  std::vector<int> ext(externals);
  std::iota(ext.begin(), ext.end(), 0);
  return FeynmanGraph(std::move(partner), std::move(vertices), std::move(ext));
}

int FeynmanGraph::internal_vertex_count() const {
  return vertex_count() - external_count();
}

int FeynmanGraph::internal_line_count() const {
  int lines = 0;
  for (int a = 0; a < dart_count(); ++a)
    if (a < partner_[a] && !is_external(dart_vertex_[a]) &&
        !is_external(dart_vertex_[partner_[a]]))
      ++lines;
  return lines;
}

std::map<int, int> FeynmanGraph::valence_profile() const {
  std::map<int, int> profile;
  for (int v = 0; v < vertex_count(); ++v)
    if (!is_external(v)) ++profile[valence(v)];
  return profile;
}

std::vector<std::pair<int, int>> FeynmanGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < dart_count(); ++a)
    if (a < partner_[a]) out.emplace_back(a, partner_[a]);
  return out;
}

std::vector<std::vector<int>> FeynmanGraph::components() const {
  DisjointSets sets(vertex_count());
  for (int a = 0; a < dart_count(); ++a)
    sets.unite(dart_vertex_[a], dart_vertex_[partner_[a]]);
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < vertex_count(); ++v) by_root[sets.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto &[root, vs] : by_root) out.push_back(std::move(vs));
  return out;
}

bool FeynmanGraph::has_vacuum_component() const {
  for (const auto &c : components())
    if (std::none_of(c.begin(), c.end(), [&](int v) { return is_external(v); }))
      return true;
  return false;
}

FeynmanGraph contract(const FeynmanGraph &g, const Subgraph &sub) {
  std::vector<char> selected(g.vertex_count(), 0);
  for (int v : sub.vertices) {
    if (v < 0 || v >= g.vertex_count())
      throw DomainError("selected vertex " + std::to_string(v) + " does not exist");
    if (g.is_external(v))
      throw DomainError("selection contains external vertex " + std::to_string(v));
    if (selected[v]) throw DomainError("vertex " + std::to_string(v) + " selected twice");
    selected[v] = 1;
  }
  auto inside = [&](int dart) {
    return selected[g.vertex_of(dart)] && selected[g.vertex_of(g.partner(dart))];
  };

  if (sub.edges) {
    std::set<int> given, induced;
    for (int a : *sub.edges) {
      if (a < 0 || a >= g.dart_count())
        throw DomainError("selected edge dart " + std::to_string(a) + " does not exist");
      given.insert(std::min(a, g.partner(a)));
    }
    for (int a = 0; a < g.dart_count(); ++a)
      if (a < g.partner(a) && inside(a)) induced.insert(a);
    if (given != induced)
      throw DomainError("subgraph selection is not vertex-induced");
  }

  DisjointSets sets(g.vertex_count());
  for (int a = 0; a < g.dart_count(); ++a)
    if (inside(a)) sets.unite(g.vertex_of(a), g.vertex_of(g.partner(a)));

  // surviving darts keep their relative order
  std::vector<int> new_id(g.dart_count(), -1);
  int next = 0;
  for (int a = 0; a < g.dart_count(); ++a)
    if (!inside(a)) new_id[a] = next++;
  std::vector<int> partner(next);
  for (int a = 0; a < g.dart_count(); ++a)
    if (new_id[a] >= 0) partner[new_id[a]] = new_id[g.partner(a)];

  std::vector<std::vector<int>> vertices;
  std::vector<int> vertex_map(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (selected[v]) continue;
    vertex_map[v] = static_cast<int>(vertices.size());
    vertices.emplace_back();
    for (int a : g.darts_at(v)) vertices.back().push_back(new_id[a]);
  }
  std::map<int, int> component_vertex;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!selected[v]) continue;
    const int root = sets.find(v);
    auto [it, fresh] =
        component_vertex.try_emplace(root, static_cast<int>(vertices.size()));
    if (fresh) vertices.emplace_back();
    for (int a : g.darts_at(v))
      if (new_id[a] >= 0) vertices[it->second].push_back(new_id[a]);
  }
  for (const auto &[root, idx] : component_vertex) {
    if (vertices[idx].empty())
      throw DomainError("contracted component containing vertex " +
                        std::to_string(root) + " has no leaving darts");
    std::sort(vertices[idx].begin(), vertices[idx].end());
  }

  std::vector<int> external;
  for (int v : g.external_vertices()) external.push_back(vertex_map[v]);
  return FeynmanGraph(std::move(partner), std::move(vertices), std::move(external));
}

FeynmanGraph induced_subgraph(const FeynmanGraph &g, std::span<const int> vertices) {
  std::vector<int> order(vertices.begin(), vertices.end());
  std::sort(order.begin(), order.end());
  if (std::adjacent_find(order.begin(), order.end()) != order.end())
    throw DomainError("vertex selected twice");
  std::vector<int> pos(g.vertex_count(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    if (v < 0 || v >= g.vertex_count() || g.is_external(v))
      throw DomainError("induced subgraph must select existing internal vertices");
    pos[v] = static_cast<int>(i);
  }

  std::vector<int> new_id(g.dart_count(), -1);
  int next = 0;
  for (int v : order)
    for (int a : g.darts_at(v)) new_id[a] = next++;
  std::vector<int> partner(next, -1);
  std::vector<std::vector<int>> out_vertices(order.size());
  std::vector<int> external;
  std::vector<int> leaving;
  for (int v : order)
    for (int a : g.darts_at(v)) {
      out_vertices[pos[v]].push_back(new_id[a]);
      if (pos[g.vertex_of(g.partner(a))] >= 0)
        partner[new_id[a]] = new_id[g.partner(a)];
      else
        leaving.push_back(a);
    }
  std::sort(leaving.begin(), leaving.end());
  for (int a : leaving) {
    const int leg = static_cast<int>(partner.size());
    partner.push_back(new_id[a]);
    partner[new_id[a]] = leg;
    external.push_back(static_cast<int>(out_vertices.size()));
    out_vertices.push_back({leg});
  }
  return FeynmanGraph(std::move(partner), std::move(out_vertices), std::move(external));
}

namespace {

bool internal_part_connected(const FeynmanGraph &g, int skip_dart) {
  DisjointSets sets(g.vertex_count());
  for (int a = 0; a < g.dart_count(); ++a) {
    const int b = g.partner(a);
    if (a == skip_dart || b == skip_dart) continue;
    if (!g.is_external(g.vertex_of(a)) && !g.is_external(g.vertex_of(b)))
      sets.unite(g.vertex_of(a), g.vertex_of(b));
  }
  int root = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.is_external(v)) continue;
    if (root == -1)
      root = sets.find(v);
    else if (sets.find(v) != root)
      return false;
  }
  return root != -1;
}

}  // namespace

bool is_one_particle_irreducible(const FeynmanGraph &g) {
  if (!internal_part_connected(g, -1)) return false;
  for (int a = 0; a < g.dart_count(); ++a) {
    const int b = g.partner(a);
    if (a > b || g.vertex_of(a) == g.vertex_of(b)) continue;
    if (g.is_external(g.vertex_of(a)) || g.is_external(g.vertex_of(b))) continue;
    if (!internal_part_connected(g, a)) return false;
  }
  return true;
}

GradedDegree gradings(const FeynmanGraph &g) {
  const int nu = g.internal_vertex_count() - 1;
  return {nu, g.internal_line_count() - nu};
}

}  // namespace feynhopf::graph
