#include "feynhopf/hopf.hpp"

#include <algorithm>

#include "feynhopf/error.hpp"
#include "feynhopf/graph_io.hpp"

namespace feynhopf::hopf {

using nlohmann::json;

Monomial make_monomial(std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  return ids;
}

Monomial operator*(const Monomial &a, const Monomial &b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// ---------------------------------------------------------------- NestingSpec

NestingSpec::NestingSpec(std::vector<Generator> generators)
    : generators_(std::move(generators)) {
  auto at = [](std::size_t i) { return "/generators/" + std::to_string(i); };
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto &g = generators_[i];
    if (g.id.empty()) throw ValidationError(at(i) + "/id", "empty generator id");
    if (!index_.emplace(g.id, i).second)
      throw ValidationError(at(i) + "/id", "duplicate generator id \"" + g.id + "\"");
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto &g = generators_[i];
    if (g.degree < 1)
      throw ValidationError(at(i) + "/degree", "generator degree must be >= 1");
    for (std::size_t s = 0; s < g.subdivergences.size(); ++s) {
      const auto &sd = g.subdivergences[s];
      const std::string p = at(i) + "/subdivergences/" + std::to_string(s);
      if (sd.sub.empty()) throw ValidationError(p + "/sub", "empty subdivergence");
      for (std::size_t k = 0; k < sd.sub.size(); ++k)
        if (!contains(sd.sub[k]))
          throw ValidationError(p + "/sub/" + std::to_string(k),
                                "unknown generator \"" + sd.sub[k] + "\"");
      if (!contains(sd.cograph))
        throw ValidationError(p + "/cograph", "unknown generator \"" + sd.cograph + "\"");
    }
  }

  // cycle check before degrees, so a cyclic spec gets the right diagnosis
  std::vector<int> state(generators_.size(), 0);  // 0 new, 1 on stack, 2 done
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    state[i] = 1;
    const auto &g = generators_[i];
    for (std::size_t s = 0; s < g.subdivergences.size(); ++s) {
      std::vector<std::string> refs = g.subdivergences[s].sub;
      refs.push_back(g.subdivergences[s].cograph);
      for (const auto &r : refs) {
        const std::size_t j = index_.at(r);
        if (state[j] == 1)
          throw ValidationError(at(i) + "/subdivergences/" + std::to_string(s),
                                "cyclic nesting through \"" + r + "\"");
        if (state[j] == 0) visit(j);
      }
    }
    state[i] = 2;
  };
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (state[i] == 0) visit(i);

  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto &g = generators_[i];
    for (std::size_t s = 0; s < g.subdivergences.size(); ++s) {
      const auto &sd = g.subdivergences[s];
      const int total = degree(sd.sub) + degree(sd.cograph);
      if (total != g.degree)
        throw ValidationError(at(i) + "/subdivergences/" + std::to_string(s),
                              "deg(sub) + deg(cograph) = " + std::to_string(total) +
                                  " differs from the generator degree " +
                                  std::to_string(g.degree));
    }
  }

  for (const auto &g : generators_) by_degree_.push_back(g.id);
  std::stable_sort(by_degree_.begin(), by_degree_.end(),
                   [&](const std::string &a, const std::string &b) {
                     return degree(a) < degree(b);
                   });
}

const Generator &NestingSpec::generator(const std::string &id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw DomainError("unknown generator \"" + id + "\"");
  return generators_[it->second];
}

int NestingSpec::degree(const Monomial &m) const {
  int d = 0;
  for (const auto &id : m) d += degree(id);
  return d;
}

NestingSpec nesting_from_json(const json &j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
    throw ValidationError("/generators", "expected a list of generators");
  std::vector<Generator> gens;
  const json &list = j["generators"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = "/generators/" + std::to_string(i);
    const json &g = list[i];
    if (!g.is_object()) throw ValidationError(at, "expected a generator object");
    Generator out;
    if (!g.contains("id") || !g["id"].is_string())
      throw ValidationError(at + "/id", "expected a string id");
    out.id = g["id"].get<std::string>();
    if (!g.contains("degree") || !g["degree"].is_number_integer())
      throw ValidationError(at + "/degree", "expected an integer degree");
    out.degree = g["degree"].get<int>();
    if (g.contains("subdivergences")) {
      const json &subs = g["subdivergences"];
      if (!subs.is_array()) throw ValidationError(at + "/subdivergences", "expected a list");
      for (std::size_t s = 0; s < subs.size(); ++s) {
        const std::string sp = at + "/subdivergences/" + std::to_string(s);
        const json &sd = subs[s];
        if (!sd.is_object()) throw ValidationError(sp, "expected {\"sub\", \"cograph\"}");
        if (!sd.contains("sub") || !sd["sub"].is_array())
          throw ValidationError(sp + "/sub", "expected a list of generator ids");
        std::vector<std::string> ids;
        for (std::size_t k = 0; k < sd["sub"].size(); ++k) {
          if (!sd["sub"][k].is_string())
            throw ValidationError(sp + "/sub/" + std::to_string(k), "expected a string id");
          ids.push_back(sd["sub"][k].get<std::string>());
        }
        if (!sd.contains("cograph") || !sd["cograph"].is_string())
          throw ValidationError(sp + "/cograph", "expected a string id");
        out.subdivergences.push_back({make_monomial(ids), sd["cograph"].get<std::string>()});
      }
    }
    if (g.contains("graph")) out.graph = graph::from_json(g["graph"], at + "/graph");
    gens.push_back(std::move(out));
  }
  return NestingSpec(std::move(gens));
}

json nesting_to_json(const NestingSpec &spec) {
  json list = json::array();
  for (const auto &g : spec.generators()) {
    json subs = json::array();
    for (const auto &sd : g.subdivergences)
      subs.push_back(json{{"sub", sd.sub}, {"cograph", sd.cograph}});
    json out{{"id", g.id}, {"degree", g.degree}, {"subdivergences", std::move(subs)}};
    if (g.graph) out["graph"] = graph::to_json(*g.graph);
    list.push_back(std::move(out));
  }
  return json{{"generators", std::move(list)}};
}

// ------------------------------------------------------------ Element/Tensor

Rational Element::coeff(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add(const Monomial &m, const Rational &c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator-() const {
  Element r = *this;
  for (auto &[m, c] : r.terms_) c = -c;
  return r;
}

Element operator+(Element a, const Element &b) {
  for (const auto &[m, c] : b.terms_) a.add(m, c);
  return a;
}

Element operator*(const Element &a, const Element &b) {
  Element r;
  for (const auto &[m1, c1] : a.terms_)
    for (const auto &[m2, c2] : b.terms_) r.add(m1 * m2, c1 * c2);
  return r;
}

Element operator*(const Rational &s, const Element &a) {
  Element r;
  for (const auto &[m, c] : a.terms_) r.add(m, s * c);
  return r;
}

void Tensor::add(const Monomial &l, const Monomial &r, const Rational &c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(Key{l, r}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Tensor operator+(Tensor a, const Tensor &b) {
  for (const auto &[k, c] : b.terms_) a.add(k.first, k.second, c);
  return a;
}

Tensor operator*(const Tensor &a, const Tensor &b) {
  Tensor r;
  for (const auto &[k1, c1] : a.terms_)
    for (const auto &[k2, c2] : b.terms_)
      r.add(k1.first * k2.first, k1.second * k2.second, c1 * c2);
  return r;
}

Tensor operator*(const Rational &s, const Tensor &a) {
  Tensor r;
  for (const auto &[k, c] : a.terms_) r.add(k.first, k.second, s * c);
  return r;
}

// ---------------------------------------------------------------- HopfAlgebra

void HopfAlgebra::check_known(const Monomial &m) const {
  for (const auto &id : m)
    if (!spec_.contains(id)) throw DomainError("unknown generator \"" + id + "\"");
}

const Tensor &HopfAlgebra::coproduct(const Monomial &m) const {
  auto it = coproduct_memo_.find(m);
  if (it != coproduct_memo_.end()) return it->second;
  check_known(m);
  Tensor t;
  if (m.empty()) {
    t.add({}, {}, 1);
  } else if (m.size() == 1) {
    t.add(m, {}, 1);
    t.add({}, m, 1);
    for (const auto &sd : spec_.generator(m[0]).subdivergences)
      t.add(sd.sub, {sd.cograph}, 1);
  } else {
    t = coproduct(Monomial{m[0]}) * coproduct(Monomial(m.begin() + 1, m.end()));
  }
  return coproduct_memo_.emplace(m, std::move(t)).first->second;
}

Tensor HopfAlgebra::coproduct(const Element &x) const {
  Tensor out;
  for (const auto &[m, c] : x.terms()) out = out + c * coproduct(m);
  return out;
}

Tensor HopfAlgebra::reduced_coproduct(const Monomial &m) const {
  Tensor t = coproduct(m);
  if (!m.empty()) {
    t.add(m, {}, -1);
    t.add({}, m, -1);
  }
  return t;
}

const Element &HopfAlgebra::antipode_recursive(const Monomial &m) const {
  auto it = antipode_memo_.find(m);
  if (it != antipode_memo_.end()) return it->second;
  check_known(m);
  Element s;
  if (m.empty()) {
    s = Element::unit();
  } else if (m.size() == 1) {
    s = -Element(m);
    for (const auto &sd : spec_.generator(m[0]).subdivergences)
      s = s - antipode_recursive(sd.sub) * Element::generator(sd.cograph);
  } else {
    s = antipode_recursive(Monomial{m[0]}) *
        antipode_recursive(Monomial(m.begin() + 1, m.end()));
  }
  return antipode_memo_.emplace(m, std::move(s)).first->second;
}

Element HopfAlgebra::antipode_recursive(const Element &x) const {
  Element out;
  for (const auto &[m, c] : x.terms()) out += c * antipode_recursive(m);
  return out;
}

const Element &HopfAlgebra::geometric_term(int k, const Monomial &m) const {
  if (k < 0) throw DomainError("negative geometric index");
  const auto key = std::make_pair(k, m);
  auto it = geometric_memo_.find(key);
  if (it != geometric_memo_.end()) return it->second;
  check_known(m);
  Element u;
  if (k == 0) {
    if (m.empty()) u = Element::unit();
  } else {
    // (eta eps - id)(l) vanishes on the unit and is -l otherwise
    for (const auto &[lr, c] : coproduct(m).terms())
      if (!lr.first.empty()) u += (-c) * (Element(lr.first) * geometric_term(k - 1, lr.second));
  }
  return geometric_memo_.emplace(key, std::move(u)).first->second;
}

Element HopfAlgebra::antipode_geometric(const Element &x) const {
  Element out;
  for (const auto &[m, c] : x.terms())
    for (int k = 0; k <= degree(m); ++k) out += c * geometric_term(k, m);
  return out;
}

Triple HopfAlgebra::coassociativity_left(const Element &x) const {
  Triple out;
  for (const auto &[m, c] : x.terms())
    for (const auto &[lr, k] : coproduct(m).terms())
      for (const auto &[ll, k2] : coproduct(lr.first).terms()) {
        auto &v = out[{ll.first, ll.second, lr.second}];
        v += c * k * k2;
      }
  std::erase_if(out, [](const auto &kv) { return kv.second.is_zero(); });
  return out;
}

Triple HopfAlgebra::coassociativity_right(const Element &x) const {
  Triple out;
  for (const auto &[m, c] : x.terms())
    for (const auto &[lr, k] : coproduct(m).terms())
      for (const auto &[rr, k2] : coproduct(lr.second).terms()) {
        auto &v = out[{lr.first, rr.first, rr.second}];
        v += c * k * k2;
      }
  std::erase_if(out, [](const auto &kv) { return kv.second.is_zero(); });
  return out;
}

bool AxiomReport::all() const {
  return coassociative && counit_left && counit_right && antipode_left && antipode_right &&
         geometric_left && geometric_right && antipodes_agree && graded && reduced_shape &&
         involution && terminates;
}

AxiomReport check_axioms(const HopfAlgebra &h, const Element &x) {
  AxiomReport r;
  r.coassociative = h.coassociativity_left(x) == h.coassociativity_right(x);

  const Tensor dx = h.coproduct(x);
  Element el, er;
  for (const auto &[lr, c] : dx.terms()) {
    if (lr.first.empty()) el.add(lr.second, c);
    if (lr.second.empty()) er.add(lr.first, c);
  }
  r.counit_left = el == x;
  r.counit_right = er == x;

  const Element unit_eps = HopfAlgebra::counit(x) * Element::unit();
  auto antipode_law = [&](auto &&s, bool left) {
    Element acc;
    for (const auto &[lr, c] : dx.terms())
      acc += left ? c * (s(lr.first) * Element(lr.second))
                  : c * (Element(lr.first) * s(lr.second));
    return acc == unit_eps;
  };
  auto rec = [&](const Monomial &m) { return h.antipode_recursive(m); };
  auto geo = [&](const Monomial &m) { return h.antipode_geometric(Element(m)); };
  r.antipode_left = antipode_law(rec, true);
  r.antipode_right = antipode_law(rec, false);
  r.geometric_left = antipode_law(geo, true);
  r.geometric_right = antipode_law(geo, false);
  r.antipodes_agree = h.antipode_recursive(x) == h.antipode_geometric(x);

  r.graded = true;
  r.reduced_shape = true;
  r.terminates = true;
  for (const auto &[m, c] : x.terms()) {
    const int d = h.degree(m);
    for (const auto &[lr, k] : h.coproduct(m).terms())
      r.graded = r.graded && h.degree(lr.first) + h.degree(lr.second) == d;
    const Tensor reduced = h.reduced_coproduct(m);
    if (d >= 1)
      for (const auto &[lr, k] : reduced.terms()) {
        const int a = h.degree(lr.first), b = h.degree(lr.second);
        r.reduced_shape = r.reduced_shape && a >= 1 && a <= d - 1 && b >= 1 && b <= d - 1;
      }
    r.terminates = r.terminates && h.geometric_term(d + 1, m).is_zero();
  }
  r.involution = h.antipode_recursive(h.antipode_recursive(x)) == x;
  return r;
}

json element_to_json(const Element &x) {
  json out = json::array();
  for (const auto &[m, c] : x.terms())
    out.push_back(json{{"coeff", c.str()}, {"monomial", m}});
  return out;
}

json tensor_to_json(const Tensor &t) {
  json out = json::array();
  for (const auto &[k, c] : t.terms())
    out.push_back(json{{"coeff", c.str()}, {"left", k.first}, {"right", k.second}});
  return out;
}

// ------------------------------------------------------- graph-derived specs

NestingSpec nesting_from_graphs(
    const std::vector<graph::FeynmanGraph> &graphs,
    const std::function<bool(const graph::FeynmanGraph &)> &divergent) {
  std::vector<Generator> gens;
  std::map<std::string, std::string> id_of_key;
  auto intern = [&](const graph::FeynmanGraph &g) {
    auto cf = graph::canonical_form(g, graph::ExternalMode::Unlabeled);
    auto it = id_of_key.find(cf.key);
    if (it != id_of_key.end()) return it->second;
    const std::string id = "G" + std::to_string(gens.size() + 1);
    id_of_key.emplace(cf.key, id);
    gens.push_back(Generator{id, graph::gradings(g).loops, {}, std::move(cf.graph)});
    return id;
  };

  for (const auto &g : graphs) {
    if (!graph::is_one_particle_irreducible(g) || !g.is_connected())
      throw DomainError("generators must be connected 1PI graphs");
    if (graph::gradings(g).loops < 1) throw DomainError("generators need loop number >= 1");
    intern(g);
  }

  for (std::size_t next = 0; next < gens.size(); ++next) {
    const graph::FeynmanGraph g = *gens[next].graph;
    std::vector<int> internal;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!g.is_external(v)) internal.push_back(v);
    const int k = static_cast<int>(internal.size());
    if (k > 12) throw DomainError("graphs with more than 12 internal vertices are unsupported");
    std::vector<Subdivergence> subs;
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
      std::vector<int> selected;
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1) selected.push_back(internal[i]);
      const auto induced = graph::induced_subgraph(g, selected);
      std::vector<std::string> ids;
      bool ok = true;
      for (const auto &comp : induced.components()) {
        std::vector<int> original;
        for (int v : comp)
          if (!induced.is_external(v)) original.push_back(selected[v]);
        const auto piece = graph::induced_subgraph(g, original);
        if (!graph::is_one_particle_irreducible(piece) || graph::gradings(piece).loops < 1 ||
            !divergent(piece)) {
          ok = false;
          break;
        }
        ids.push_back(intern(piece));
      }
      if (!ok) continue;
      const auto cograph = graph::contract(g, {selected, std::nullopt});
      if (graph::gradings(cograph).loops < 1) continue;
      subs.push_back({make_monomial(std::move(ids)), intern(cograph)});
    }
    gens[next].subdivergences = std::move(subs);
  }
  return NestingSpec(std::move(gens));
}

}  // namespace feynhopf::hopf
