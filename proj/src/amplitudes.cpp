#include "feynhopf/amplitudes.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "feynhopf/error.hpp"
#include "feynhopf/laurent_json.hpp"

namespace feynhopf::amp {

using nlohmann::json;

SymmetricTensor::SymmetricTensor(int rank, int dimension,
                                 const std::map<MultiIndex, Rational> &components)
    : rank_(rank), dimension_(dimension) {
  if (rank < 1) throw DomainError("tensor rank must be >= 1");
  if (dimension < 1) throw DomainError("tensor dimension must be >= 1");
  for (const auto &[index, value] : components) {
    if (static_cast<int>(index.size()) != rank)
      throw ShapeError("multi-index of length " + std::to_string(index.size()) +
                       " for a rank-" + std::to_string(rank) + " tensor");
    for (int i : index)
      if (i < 0 || i >= dimension)
        throw ShapeError("index " + std::to_string(i) + " outside dimension " +
                         std::to_string(dimension));
    if (value.is_zero()) continue;
    MultiIndex key = index;
    std::sort(key.begin(), key.end());
    auto [it, fresh] = entries_.try_emplace(key, value);
    if (!fresh && it->second != value)
      throw DomainError("components are not symmetric; symmetrize first");
  }
  for (const auto &[key, value] : entries_) {
    MultiIndex perm = key;
    do {
      arrangements_.emplace_back(perm, value);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

Rational SymmetricTensor::at(MultiIndex index) const {
  std::sort(index.begin(), index.end());
  auto it = entries_.find(index);
  return it == entries_.end() ? Rational(0) : it->second;
}

SymmetricTensor symmetrize(int rank, int dimension,
                           const std::map<MultiIndex, Rational> &raw,
                           bool *was_symmetric) {
  // group the given arrangements by orbit (sorted key)
  std::map<MultiIndex, std::map<MultiIndex, Rational>> orbits;
  for (const auto &[index, value] : raw) {
    if (static_cast<int>(index.size()) != rank)
      throw ShapeError("multi-index of length " + std::to_string(index.size()) +
                       " for a rank-" + std::to_string(rank) + " tensor");
    MultiIndex key = index;
    std::sort(key.begin(), key.end());
    orbits[key][index] += value;
  }
  bool symmetric = true;
  std::map<MultiIndex, Rational> averaged;
  for (const auto &[key, given] : orbits) {
    long orbit_size = 0;
    MultiIndex perm = key;
    Rational total;
    std::vector<Rational> values;
    do {
      ++orbit_size;
      auto it = given.find(perm);
      values.push_back(it == given.end() ? Rational(0) : it->second);
      total += values.back();
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto &v : values) symmetric = symmetric && v == values.front();
    averaged[key] = total / Rational(orbit_size);
  }
  if (was_symmetric) *was_symmetric = symmetric;
  return SymmetricTensor(rank, dimension, averaged);
}

namespace {

std::string escape_pointer(const std::string &token) {
  std::string out;
  for (char c : token) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

MultiIndex parse_multi_index(const std::string &text, const std::string &pointer) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ValidationError(pointer, "multi-index must look like \"(i,j,...)\"");
  MultiIndex out;
  std::stringstream ss(s.substr(1, s.size() - 2));
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw ValidationError(pointer, "multi-index entries must be non-negative integers");
    out.push_back(std::stoi(part));
  }
  return out;
}

wick::Covector parse_covector(const json &j, int d, const std::string &pointer) {
  if (!j.is_array() || static_cast<int>(j.size()) != d)
    throw ValidationError(pointer, "expected a list of " + std::to_string(d) + " rationals");
  wick::Covector out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(rational_from_json(j[i], pointer + "/" + std::to_string(i)));
  return out;
}

}  // namespace

InteractionModel model_from_json(const json &j, std::vector<IngestWarning> *warnings) {
  if (!j.is_object()) throw ValidationError("", "expected a model object");
  for (const char *key : {"dimension", "bilinear", "external", "vertices"})
    if (!j.contains(key)) throw ValidationError(std::string("/") + key, "missing field");
  if (!j["dimension"].is_number_integer() || j["dimension"].get<long>() < 1)
    throw ValidationError("/dimension", "expected a positive integer");
  const int d = j["dimension"].get<int>();

  const json &bj = j["bilinear"];
  if (!bj.is_array() || static_cast<int>(bj.size()) != d)
    throw ValidationError("/bilinear", "expected a " + std::to_string(d) + "x" +
                                           std::to_string(d) + " matrix");
  wick::Matrix b(d);
  for (int r = 0; r < d; ++r) {
    const auto row = parse_covector(bj[r], d, "/bilinear/" + std::to_string(r));
    for (int c = 0; c < d; ++c) b(r, c) = row[c];
  }
  std::optional<wick::BilinearForm> form;
  try {
    form.emplace(std::move(b));
  } catch (const DomainError &e) {
    throw ValidationError("/bilinear", e.what());
  }

  const json &ej = j["external"];
  if (!ej.is_array()) throw ValidationError("/external", "expected a list of covectors");
  std::vector<wick::Covector> external;
  for (std::size_t i = 0; i < ej.size(); ++i)
    external.push_back(parse_covector(ej[i], d, "/external/" + std::to_string(i)));

  const json &vj = j["vertices"];
  if (!vj.is_object()) throw ValidationError("/vertices", "expected an object");
  std::map<int, SymmetricTensor> vertices;
  for (const auto &[mkey, comps] : vj.items()) {
    const std::string at = "/vertices/" + escape_pointer(mkey);
    if (mkey.empty() || mkey.find_first_not_of("0123456789") != std::string::npos ||
        std::stoi(mkey) < 1 || std::to_string(std::stoi(mkey)) != mkey)
      throw ValidationError(at, "valence keys must be positive integers");
    const int m = std::stoi(mkey);
    if (!comps.is_object()) throw ValidationError(at, "expected a coefficient map");
    std::map<MultiIndex, Rational> raw;
    for (const auto &[ikey, value] : comps.items()) {
      const std::string iat = at + "/" + escape_pointer(ikey);
      MultiIndex index = parse_multi_index(ikey, iat);
      if (static_cast<int>(index.size()) != m)
        throw ValidationError(iat, "multi-index length differs from the valence " + mkey);
      for (int i : index)
        if (i >= d) throw ValidationError(iat, "index outside the dimension");
      if (raw.count(index)) throw ValidationError(iat, "duplicate multi-index");
      raw[index] = rational_from_json(value, iat);
    }
    bool symmetric = true;
    vertices[m] = symmetrize(m, d, raw, &symmetric);
    if (!symmetric && warnings)
      warnings->push_back({at, "coefficient map was not symmetric; symmetrized"});
  }
  return InteractionModel{std::move(*form), std::move(external), std::move(vertices)};
}

json model_to_json(const InteractionModel &model) {
  const int d = model.dimension();
  json b = json::array();
  for (int r = 0; r < d; ++r) {
    json row = json::array();
    for (int c = 0; c < d; ++c) row.push_back(model.bilinear.matrix()(r, c).str());
    b.push_back(std::move(row));
  }
  json ext = json::array();
  for (const auto &f : model.external) {
    json row = json::array();
    for (const auto &x : f) row.push_back(x.str());
    ext.push_back(std::move(row));
  }
  json vs = json::object();
  for (const auto &[m, q] : model.vertices) {
    json comps = json::object();
    for (const auto &[index, value] : q.arrangements()) {
      std::string key = "(";
      for (std::size_t i = 0; i < index.size(); ++i)
        key += (i ? "," : "") + std::to_string(index[i]);
      comps[key + ")"] = value.str();
    }
    vs[std::to_string(m)] = std::move(comps);
  }
  return json{{"dimension", d}, {"bilinear", std::move(b)}, {"external", std::move(ext)},
              {"vertices", std::move(vs)}};
}

Rational feynman_amplitude(const graph::FeynmanGraph &g, const InteractionModel &model) {
  const int d = model.dimension();
  if (g.external_count() != static_cast<int>(model.external.size()))
    throw ShapeError("graph has " + std::to_string(g.external_count()) +
                     " external vertices, model has " +
                     std::to_string(model.external.size()) + " external forms");
  for (const auto &f : model.external)
    if (static_cast<int>(f.size()) != d) throw ShapeError("external form of wrong length");

  const int nv = g.vertex_count();
  // per-vertex options: index tuple for its darts (in darts_at order) and weight
  std::vector<std::vector<std::pair<MultiIndex, Rational>>> options(nv);
  for (int v = 0; v < nv; ++v) {
    if (g.is_external(v)) {
      const auto &f = model.external[g.label_of(v) - 1];
      for (int i = 0; i < d; ++i)
        if (!f[i].is_zero()) options[v].push_back({{i}, f[i]});
      continue;
    }
    auto it = model.vertices.find(g.valence(v));
    if (it == model.vertices.end())
      throw DomainError("model has no tensor for valence " + std::to_string(g.valence(v)));
    if (it->second.dimension() != d) throw ShapeError("tensor dimension mismatch");
    options[v] = it->second.arrangements();
  }

  // greedy order: most edges back into the processed set, then fewest options
  std::vector<int> order;
  std::vector<char> done(nv, 0);
  for (int step = 0; step < nv; ++step) {
    int best = -1;
    long best_links = -1;
    for (int v = 0; v < nv; ++v) {
      if (done[v]) continue;
      long links = 0;
      for (int a : g.darts_at(v)) links += done[g.vertex_of(g.partner(a))];
      if (best == -1 || links > best_links ||
          (links == best_links && options[v].size() < options[best].size())) {
        best = v;
        best_links = links;
      }
    }
    done[best] = 1;
    order.push_back(best);
  }

  // edges closed when vertex order[k] is placed
  std::vector<int> position(nv);
  for (int k = 0; k < nv; ++k) position[order[k]] = k;
  std::vector<std::vector<std::pair<int, int>>> closing(nv);
  for (auto [a, b] : g.edges()) {
    const int k = std::max(position[g.vertex_of(a)], position[g.vertex_of(b)]);
    closing[k].emplace_back(a, b);
  }

  const wick::Matrix &inv = model.bilinear.inverse_matrix();
  std::vector<int> index(g.dart_count(), -1);
  Rational total;
  std::function<void(int, const Rational &)> place = [&](int k, const Rational &acc) {
    if (k == nv) {
      total += acc;
      return;
    }
    const int v = order[k];
    const auto &darts = g.darts_at(v);
    for (const auto &[tuple, weight] : options[v]) {
      for (std::size_t i = 0; i < darts.size(); ++i) index[darts[i]] = tuple[i];
      Rational term = acc * weight;
      for (auto [a, b] : closing[k]) {
        const Rational &x = inv(index[a], index[b]);
        if (x.is_zero()) {
          term = 0;
          break;
        }
        term *= x;
      }
      if (!term.is_zero()) place(k + 1, term);
    }
  };
  place(0, Rational(1));
  return total;
}

int slot_total(const InteractionModel &model, const Multidegree &n) {
  int slots = static_cast<int>(model.external.size());
  for (auto [m, k] : n) {
    if (m < 1 || k < 0) throw DomainError("invalid multidegree entry");
    slots += m * k;
  }
  return slots;
}

Rational series_coefficient(const InteractionModel &model, const Multidegree &n) {
  if (slot_total(model, n) % 2 != 0) return Rational(0);
  Rational sum;
  for (const auto &e : graph::enumerate_graphs(static_cast<int>(model.external.size()), n))
    sum += feynman_amplitude(e.graph, model) / Rational(e.automorphisms);
  return sum;
}

std::vector<SeriesCoefficient> correlator_series(const InteractionModel &model,
                                                 int max_total_order) {
  if (max_total_order < 0) throw DomainError("negative order bound");
  std::vector<int> valences;
  for (const auto &[m, q] : model.vertices) valences.push_back(m);
  std::vector<SeriesCoefficient> out;
  for (int total = 0; total <= max_total_order; ++total) {
    Multidegree n;
    std::function<void(std::size_t, int)> go = [&](std::size_t i, int left) {
      if (i == valences.size()) {
        if (left == 0) out.push_back({n, series_coefficient(model, n)});
        return;
      }
      for (int k = left; k >= 0; --k) {
        if (k)
          n[valences[i]] = k;
        else
          n.erase(valences[i]);
        go(i + 1, left - k);
      }
      n.erase(valences[i]);
    };
    go(0, total);
  }
  return out;
}

Rational oracle_coefficient(const InteractionModel &model, const Multidegree &n,
                            int max_slots) {
  const int slots = slot_total(model, n);
  if (slots > max_slots)
    throw DomainError("slot total " + std::to_string(slots) + " exceeds the oracle cap " +
                      std::to_string(max_slots));
  if (slots % 2 != 0) return Rational(0);
  const int d = model.dimension();

  // Expanding every Q copy over its components leaves basis covectors in the
  // slots; the free correlator then depends only on how many slots carry
  // each basis index. Aggregate component weights by that count vector.
  std::map<std::vector<int>, Rational> weights{{std::vector<int>(d, 0), Rational(1)}};
  Rational norm = 1;
  for (auto [m, k] : n) {
    if (k == 0) continue;
    auto it = model.vertices.find(m);
    if (it == model.vertices.end())
      throw DomainError("model has no tensor for valence " + std::to_string(m));
    std::map<std::vector<int>, Rational> per_copy;
    for (const auto &[index, value] : it->second.arrangements()) {
      std::vector<int> counts(d, 0);
      for (int i : index) ++counts[i];
      per_copy[counts] += value;
    }
    for (int copy = 0; copy < k; ++copy) {
      std::map<std::vector<int>, Rational> next;
      for (const auto &[c1, w1] : weights)
        for (const auto &[c2, w2] : per_copy) {
          std::vector<int> c = c1;
          for (int i = 0; i < d; ++i) c[i] += c2[i];
          next[c] += w1 * w2;
        }
      weights = std::move(next);
    }
    norm *= Rational(factorial(static_cast<unsigned>(k)));
    norm *= pow(Rational(factorial(static_cast<unsigned>(m))), static_cast<unsigned>(k));
  }

  Rational total;
  for (const auto &[counts, w] : weights) {
    if (w.is_zero()) continue;
    std::vector<wick::Covector> forms = model.external;
    for (int i = 0; i < d; ++i)
      for (int c = 0; c < counts[i]; ++c) {
        wick::Covector e(d, Rational(0));
        e[i] = 1;
        forms.push_back(std::move(e));
      }
    total += w * wick::free_correlator(forms, model.bilinear);
  }
  return total / norm;
}

std::string multidegree_str(const Multidegree &n) {
  std::string s = "{";
  bool first = true;
  for (auto [m, k] : n) {
    if (k == 0) continue;
    s += (first ? "" : ",") + std::to_string(m) + ":" + std::to_string(k);
    first = false;
  }
  return s + "}";
}

}  // namespace feynhopf::amp
