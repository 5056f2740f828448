#ifndef FEYNHOPF_GRAPH_HPP
#define FEYNHOPF_GRAPH_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace feynhopf::graph {

/// Feynman graph as a half-edge structure.
///
/// Darts are 0..D-1. `partner` is a fixed-point-free involution (pairs of
/// darts are edges), `vertices` partitions the darts, and `external[l-1]` is
/// the vertex carrying external label l. External vertices are univalent;
/// internal vertices carry only their valence. Parallel edges and self-loops
/// are allowed.
class FeynmanGraph {
 public:
  FeynmanGraph() = default;

  /// Validating constructor; throws DomainError on a malformed involution,
  /// partition or labelling.
  FeynmanGraph(std::vector<int> partner, std::vector<std::vector<int>> vertices,
               std::vector<int> external);

  /// Convenience builder. Vertices 0..externals-1 are the external vertices
  /// with labels 1..externals; vertex externals+i is internal with valence
  /// internal_valences[i]. Each edge (u, v) allocates one dart at u and one
  /// at v; the resulting valences must match the declared ones.
  static FeynmanGraph from_edges(int externals,
                                 const std::vector<int> &internal_valences,
                                 const std::vector<std::pair<int, int>> &edges);

  int dart_count() const { return static_cast<int>(partner_.size()); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int partner(int dart) const { return partner_[dart]; }
  int vertex_of(int dart) const { return dart_vertex_[dart]; }
  const std::vector<int> &darts_at(int v) const { return vertices_[v]; }
  int valence(int v) const { return static_cast<int>(vertices_[v].size()); }

  const std::vector<int> &partners() const { return partner_; }
  const std::vector<std::vector<int>> &vertices() const { return vertices_; }
  const std::vector<int> &external_vertices() const { return external_; }

  /// 0 for internal vertices, the label (1..N) for external ones.
  int label_of(int v) const { return label_[v]; }
  bool is_external(int v) const { return label_[v] != 0; }

  /// N: number of external vertices.
  int external_count() const { return static_cast<int>(external_.size()); }
  /// v(G): number of internal vertices.
  int internal_vertex_count() const;
  /// I(G): edges with both darts at internal vertices.
  int internal_line_count() const;
  /// m -> n_m over internal vertices.
  std::map<int, int> valence_profile() const;

  /// Edges as dart pairs (a, partner(a)) with a < partner(a), by a.
  std::vector<std::pair<int, int>> edges() const;

  /// Connected components as sorted vertex lists, ordered by first vertex.
  std::vector<std::vector<int>> components() const;
  bool is_connected() const { return components().size() <= 1; }
  /// True if some component has no external vertex.
  bool has_vacuum_component() const;

  friend bool operator==(const FeynmanGraph &a, const FeynmanGraph &b) {
    return a.partner_ == b.partner_ && a.vertices_ == b.vertices_ &&
           a.external_ == b.external_;
  }

 private:
  std::vector<int> partner_;
  std::vector<std::vector<int>> vertices_;
  std::vector<int> external_;
  std::vector<int> dart_vertex_;
  std::vector<int> label_;
};

/// How external vertices enter isomorphism: fixed pointwise by label (the
/// Feynman-rule notion), or interchangeable (used for Hopf generators, whose
/// legs are amputated and carry no labels).
enum class ExternalMode { Labeled, Unlabeled };

struct CanonicalForm {
  /// Equal iff the graphs are isomorphic under the chosen mode.
  std::string key;
  /// The graph relabelled into canonical dart and vertex order.
  FeynmanGraph graph;
  /// Order of the dart automorphism group (fixing external vertices in
  /// Labeled mode).
  mpz_class automorphisms;
};

CanonicalForm canonical_form(const FeynmanGraph &g,
                             ExternalMode mode = ExternalMode::Labeled);

/// |Aut(G)|: permutations of darts commuting with the involution, preserving
/// the vertex partition and fixing every external vertex.
mpz_class automorphism_order(const FeynmanGraph &g);

/// One isomorphism class of G(N, n).
struct EnumeratedGraph {
  FeynmanGraph graph;  // canonical representative
  std::string key;
  mpz_class automorphisms;
  /// Number of perfect matchings of the labelled dart set landing in this
  /// class.
  mpz_class matchings;
};

/// Product over m of n_m! (m!)^{n_m}: the size of the relabelling group of
/// internal vertices and their darts.
mpz_class relabelling_group_order(const std::map<int, int> &profile);

/// All isomorphism classes with `externals` labelled external vertices and
/// internal valence profile `profile` (m -> n_m), one canonical
/// representative each, sorted by key. DomainError if the dart total is odd
/// or a valence is < 1.
std::vector<EnumeratedGraph> enumerate_graphs(int externals,
                                              const std::map<int, int> &profile,
                                              bool include_vacuum = true);

/// Subgraph selection for contraction: a set of internal vertices. If
/// `edges` is given (as darts, one per edge) it must be exactly the set of
/// edges among those vertices.
struct Subgraph {
  std::vector<int> vertices;
  std::optional<std::vector<int>> edges;
};

/// G/g: every connected component of the induced subgraph is shrunk to one
/// internal vertex carrying the darts that leave it. DomainError if the
/// selection contains an external vertex, is not vertex-induced, or a
/// component has no leaving darts.
FeynmanGraph contract(const FeynmanGraph &g, const Subgraph &sub);

/// The induced subgraph on `vertices` (internal only), with every dart
/// leaving the selection turned into an edge to a fresh external vertex;
/// the new labels follow dart order.
FeynmanGraph induced_subgraph(const FeynmanGraph &g, std::span<const int> vertices);

/// True if the internal part (internal vertices and internal lines) is
/// nonempty, connected and stays connected after removing any one line.
bool is_one_particle_irreducible(const FeynmanGraph &g);

struct GradedDegree {
  int nu;     // v(G) - 1
  int loops;  // I(G) - nu
};

GradedDegree gradings(const FeynmanGraph &g);

}  // namespace feynhopf::graph

#endif  // FEYNHOPF_GRAPH_HPP
