#ifndef FEYNHOPF_AMPLITUDES_HPP
#define FEYNHOPF_AMPLITUDES_HPP

#include <map>
#include <string>
#include <vector>

#include "feynhopf/graph.hpp"
#include "feynhopf/rational.hpp"
#include "feynhopf/wick.hpp"
#include "json.hpp"

namespace feynhopf::amp {

using MultiIndex = std::vector<int>;

/// Symmetric m-tensor on a d-dimensional space, stored by sorted
/// multi-index. `arrangements()` lists every (unsorted) index tuple with a
/// nonzero component, which is what contraction iterates over.
class SymmetricTensor {
 public:
  SymmetricTensor() = default;
  /// `components` must already be symmetric; keys may be in any order and
  /// are sorted here. Use `symmetrize` for arbitrary input.
  SymmetricTensor(int rank, int dimension, const std::map<MultiIndex, Rational> &components);

  int rank() const { return rank_; }
  int dimension() const { return dimension_; }
  /// Component at an arbitrary multi-index.
  Rational at(MultiIndex index) const;
  const std::map<MultiIndex, Rational> &entries() const { return entries_; }
  const std::vector<std::pair<MultiIndex, Rational>> &arrangements() const {
    return arrangements_;
  }

 private:
  int rank_ = 0;
  int dimension_ = 0;
  std::map<MultiIndex, Rational> entries_;
  std::vector<std::pair<MultiIndex, Rational>> arrangements_;
};

/// Averages an arbitrary coefficient map over index permutations (missing
/// entries count as 0). `was_symmetric` reports whether the input already
/// was.
SymmetricTensor symmetrize(int rank, int dimension,
                           const std::map<MultiIndex, Rational> &raw,
                           bool *was_symmetric = nullptr);

struct InteractionModel {
  wick::BilinearForm bilinear;
  std::vector<wick::Covector> external;       // f_1 .. f_N
  std::map<int, SymmetricTensor> vertices;   // m -> Q_m

  int dimension() const { return static_cast<int>(bilinear.dimension()); }
};

struct IngestWarning {
  std::string pointer;
  std::string message;
};

/// {"dimension": d, "bilinear": [[...]], "external": [[...],...],
///  "vertices": {"3": {"(0,0,0)": "1", ...}, ...}}. Asymmetric tensors are
/// symmetrized and reported in `warnings`; anything else malformed raises
/// ValidationError.
InteractionModel model_from_json(const nlohmann::json &j,
                                 std::vector<IngestWarning> *warnings = nullptr);
nlohmann::json model_to_json(const InteractionModel &model);

/// Multidegree n: m -> n_m (zero entries are dropped).
using Multidegree = std::map<int, int>;

struct SeriesCoefficient {
  Multidegree degree;
  Rational value;
};

/// Feynman rules: f_j at external vertex j, Q_m at each m-valent internal
/// vertex, B^{-1} along every edge, summed over all index assignments.
Rational feynman_amplitude(const graph::FeynmanGraph &g, const InteractionModel &model);

/// Sum over G(N, n) of F / |Aut| for one multidegree.
Rational series_coefficient(const InteractionModel &model, const Multidegree &n);

/// All multidegrees over the model's valences with sum of n_m at most
/// `max_total_order`, in lexicographic order of (total order, degree).
std::vector<SeriesCoefficient> correlator_series(const InteractionModel &model,
                                                 int max_total_order);

/// <f_1 ... f_N prod Q_m^{n_m}> / prod n_m! (m!)^{n_m}, evaluated directly
/// from Wick pairings of the expanded monomial, without graphs. Throws
/// DomainError when the slot total exceeds `max_slots`.
Rational oracle_coefficient(const InteractionModel &model, const Multidegree &n,
                            int max_slots = 14);

/// Total number of slots N + sum m n_m.
int slot_total(const InteractionModel &model, const Multidegree &n);

std::string multidegree_str(const Multidegree &n);

}  // namespace feynhopf::amp

#endif  // FEYNHOPF_AMPLITUDES_HPP
