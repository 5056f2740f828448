// Canonical labelling of half-edge graphs.
//
// Two dart structures are isomorphic iff their vertex multigraphs (with loop
// counts) are, so the search runs on vertices: colour refinement to an
// equitable partition, then individualization of each vertex of the first
// non-singleton cell, recursively. Every leaf is a vertex ordering; the
// lexicographically smallest certificate wins, and the number of leaves
// reaching it is the order of the vertex automorphism group. Components are
// labelled separately, which keeps the search small for disconnected graphs.

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "feynhopf/error.hpp"
#include "feynhopf/graph.hpp"
#include "feynhopf/rational.hpp"
#include "feynhopf/wick.hpp"

namespace feynhopf::graph {

namespace {

using Certificate = std::vector<int>;

struct Multigraph {
  int n = 0;
  std::vector<int> adj;                   // n x n edge multiplicities
  std::vector<std::pair<int, int>> kind;  // (0, label) external, (1, valence)

  int at(int u, int v) const { return adj[u * n + v]; }
};

Multigraph component_multigraph(const FeynmanGraph &g, const std::vector<int> &vs,
                                ExternalMode mode) {
  Multigraph m;
  m.n = static_cast<int>(vs.size());
  m.adj.assign(m.n * m.n, 0);
  std::map<int, int> local;
  for (int i = 0; i < m.n; ++i) local[vs[i]] = i;
  for (int i = 0; i < m.n; ++i) {
    const int v = vs[i];
    if (g.is_external(v))
      m.kind.emplace_back(0, mode == ExternalMode::Labeled ? g.label_of(v) : 0);
    else
      m.kind.emplace_back(1, g.valence(v));
  }
  for (int v : vs)
    for (int a : g.darts_at(v)) {
      const int b = g.partner(a);
      if (a > b) continue;
      const int u = local.at(v), w = local.at(g.vertex_of(b));
      ++m.adj[u * m.n + w];
      if (u != w) ++m.adj[w * m.n + u];
    }
  return m;
}

// Replaces arbitrary sortable keys by their ranks 0..k-1.
template <class Key>
std::vector<int> rank(const std::vector<Key> &keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) -
                              sorted.begin());
  return out;
}

int colour_count(const std::vector<int> &c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

std::vector<int> refine(const Multigraph &m, std::vector<int> colours) {
  using Signature = std::tuple<int, int, std::vector<std::pair<int, int>>>;
  for (;;) {
    std::vector<Signature> sig(m.n);
    for (int v = 0; v < m.n; ++v) {
      std::vector<std::pair<int, int>> nb;
      for (int w = 0; w < m.n; ++w)
        if (w != v && m.at(v, w) > 0) nb.emplace_back(colours[w], m.at(v, w));
      std::sort(nb.begin(), nb.end());
      sig[v] = {colours[v], m.at(v, v), std::move(nb)};
    }
    std::vector<int> next = rank(sig);
    if (colour_count(next) == colour_count(colours)) return next;
    colours = std::move(next);
  }
}

struct SearchResult {
  Certificate best;
  std::vector<int> order;  // position -> local vertex
  mpz_class leaves_at_best = 0;
};

Certificate certificate(const Multigraph &m, const std::vector<int> &order) {
  Certificate c;
  c.reserve(1 + 2 * m.n + m.n * (m.n + 1) / 2);
  c.push_back(m.n);
  for (int v : order) {
    c.push_back(m.kind[v].first);
    c.push_back(m.kind[v].second);
  }
  for (int i = 0; i < m.n; ++i)
    for (int j = i; j < m.n; ++j) c.push_back(m.at(order[i], order[j]));
  return c;
}

void search(const Multigraph &m, const std::vector<int> &colours, SearchResult &res) {
  const std::vector<int> eq = refine(m, colours);
  const int k = colour_count(eq);
  if (k == m.n) {
    std::vector<int> order(m.n);
    for (int v = 0; v < m.n; ++v) order[eq[v]] = v;
    Certificate c = certificate(m, order);
    if (res.leaves_at_best == 0 || c < res.best) {
      res.best = std::move(c);
      res.order = std::move(order);
      res.leaves_at_best = 1;
    } else if (c == res.best) {
      ++res.leaves_at_best;
    }
    return;
  }
  std::vector<int> size(k, 0);
  for (int c : eq) ++size[c];
  const int target = static_cast<int>(
      std::find_if(size.begin(), size.end(), [](int s) { return s > 1; }) - size.begin());
  for (int v = 0; v < m.n; ++v) {
    if (eq[v] != target) continue;
    std::vector<int> keyed(m.n);
    for (int w = 0; w < m.n; ++w)
      keyed[w] = 2 * eq[w] + (eq[w] == target && w != v ? 1 : 0);
    search(m, rank(keyed), res);
  }
}

struct ComponentLabel {
  Certificate cert;
  std::vector<int> vertices;  // global vertex ids in canonical order
  mpz_class vertex_automorphisms;
};

ComponentLabel label_component(const FeynmanGraph &g, const std::vector<int> &vs,
                               ExternalMode mode) {
  const Multigraph m = component_multigraph(g, vs, mode);
  SearchResult res;
  search(m, rank(m.kind), res);
  ComponentLabel out{res.best, {}, res.leaves_at_best};
  for (int local : res.order) out.vertices.push_back(vs[local]);
  return out;
}

std::string encode(const Certificate &c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(c[i]);
  }
  return s;
}

}  // namespace

CanonicalForm canonical_form(const FeynmanGraph &g, ExternalMode mode) {
  std::vector<ComponentLabel> parts;
  for (const auto &comp : g.components())
    parts.push_back(label_component(g, comp, mode));
  std::sort(parts.begin(), parts.end(),
            [](const ComponentLabel &a, const ComponentLabel &b) { return a.cert < b.cert; });

  CanonicalForm out;
  out.automorphisms = 1;
  std::vector<int> order;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.key += '|';
    out.key += encode(parts[i].cert);
    out.automorphisms *= parts[i].vertex_automorphisms;
    order.insert(order.end(), parts[i].vertices.begin(), parts[i].vertices.end());
  }
  // identical components can be permuted wholesale
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j].cert == parts[i].cert) ++j;
    out.automorphisms *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }

  // Rebuild darts in canonical order: for positions i <= j, the edges
  // between order[i] and order[j], each getting two consecutive darts.
  const int n = g.vertex_count();
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<int> mult(n * n, 0);
  for (auto [a, b] : g.edges()) {
    int u = position[g.vertex_of(a)], w = position[g.vertex_of(b)];
    if (u > w) std::swap(u, w);
    ++mult[u * n + w];
  }
  std::vector<int> partner;
  std::vector<std::vector<int>> vertices(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const int k = mult[i * n + j];
      out.automorphisms *= factorial(static_cast<unsigned>(k));
      if (i == j) out.automorphisms <<= static_cast<unsigned>(k);  // loop flips
      for (int e = 0; e < k; ++e) {
        const int a = static_cast<int>(partner.size());
        partner.push_back(a + 1);
        partner.push_back(a);
        vertices[i].push_back(a);
        vertices[j].push_back(a + 1);
      }
    }
  std::vector<int> external(g.external_count());
  if (mode == ExternalMode::Labeled) {
    for (int l = 0; l < g.external_count(); ++l)
      external[l] = position[g.external_vertices()[l]];
  } else {
    int l = 0;
    for (int i = 0; i < n; ++i)
      if (g.is_external(order[i])) external[l++] = i;
  }
  out.graph = FeynmanGraph(std::move(partner), std::move(vertices), std::move(external));
  return out;
}

mpz_class automorphism_order(const FeynmanGraph &g) {
  return canonical_form(g).automorphisms;
}

mpz_class relabelling_group_order(const std::map<int, int> &profile) {
  mpz_class order = 1;
  for (auto [m, n] : profile) {
    if (m < 1 || n < 0) throw DomainError("invalid valence profile entry");
    mpz_class mf = factorial(static_cast<unsigned>(m)), p;
    mpz_pow_ui(p.get_mpz_t(), mf.get_mpz_t(), static_cast<unsigned>(n));
    order *= factorial(static_cast<unsigned>(n)) * p;
  }
  return order;
}

std::vector<EnumeratedGraph> enumerate_graphs(int externals,
                                              const std::map<int, int> &profile,
                                              bool include_vacuum) {
  if (externals < 0) throw DomainError("negative external count");
  std::vector<int> valences;
  int darts = externals;
  for (auto [m, n] : profile) {
    if (m < 1) throw DomainError("internal valence must be >= 1, got " + std::to_string(m));
    if (n < 0) throw DomainError("negative vertex count for valence " + std::to_string(m));
    for (int i = 0; i < n; ++i) valences.push_back(m);
    darts += m * n;
  }
  if (darts % 2 != 0)
    throw DomainError("odd dart total " + std::to_string(darts) +
                      ": no perfect matching exists");

  std::vector<std::vector<int>> vertices;
  std::vector<int> external;
  for (int l = 0; l < externals; ++l) {
    external.push_back(l);
    vertices.push_back({l});
  }
  int next = externals;
  for (int m : valences) {
    vertices.emplace_back();
    for (int i = 0; i < m; ++i) vertices.back().push_back(next++);
  }

  std::map<std::string, EnumeratedGraph> classes;
  std::vector<int> partner(darts);
  wick::for_each_pairing(darts, [&](const wick::Pairing &p) {
    for (auto [a, b] : p) {
      partner[a] = b;
      partner[b] = a;
    }
    CanonicalForm cf = canonical_form(FeynmanGraph(partner, vertices, external));
    auto [it, fresh] = classes.try_emplace(cf.key);
    if (fresh)
      it->second = EnumeratedGraph{std::move(cf.graph), cf.key, cf.automorphisms, 0};
    ++it->second.matchings;
  });

  std::vector<EnumeratedGraph> out;
  for (auto &[key, e] : classes)
    if (include_vacuum || !e.graph.has_vacuum_component()) out.push_back(std::move(e));
  return out;
}

}  // namespace feynhopf::graph
