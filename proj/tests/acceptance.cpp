// Acceptance run: one PASS/FAIL line per criterion, each with its runtime
// limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "feynhopf/amplitudes.hpp"
#include "feynhopf/graph.hpp"
#include "feynhopf/hopf.hpp"
#include "feynhopf/renorm.hpp"
#include "feynhopf/rg.hpp"
#include "feynhopf/wick.hpp"
#include "support/characters.hpp"
#include "support/graphs.hpp"
#include "support/local.hpp"

using namespace feynhopf;
using namespace feynhopf::testgen;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string &what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int number, const char *title, double limit_seconds,
               const std::function<void(Outcome &)> &body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception &e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(seconds < limit_seconds, "over the time limit");
  if (!out.ok) ++failures;
  std::printf("%s  %d. %s (%.3f s, limit %g s)%s%s\n", out.ok ? "PASS" : "FAIL", number, title,
              seconds, limit_seconds, out.detail.empty() ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
}

mpz_class double_factorial_formula(int n) {
  const int p = n / 2;
  mpz_class num, two_p, p_fact;
  mpz_fac_ui(num.get_mpz_t(), n);
  mpz_ui_pow_ui(two_p.get_mpz_t(), 2, p);
  mpz_fac_ui(p_fact.get_mpz_t(), p);
  return num / (two_p * p_fact);
}

void gaussian_moments(Outcome &out) {
  const wick::BilinearForm b(wick::Matrix{{Rational(1)}});
  for (int n = 0; n <= 16; ++n) {
    const std::vector<wick::Covector> forms(n, wick::Covector{Rational(1)});
    const Rational m = wick::moment_1d(n);
    if (n % 2) {
      out.require(m == Rational(0), "odd moment " + std::to_string(n) + " is not 0");
      continue;
    }
    out.require(m == wick::free_correlator(forms, b),
                "moment_1d(" + std::to_string(n) + ") differs from the pairing sum");
    out.require(m == Rational(double_factorial_formula(n)),
                "moment_1d(" + std::to_string(n) + ") differs from N!/(2^p p!)");
  }
  out.require(wick::moment_1d(4) == Rational(3), "<x^4> != 3");
  out.require(wick::moment_1d(6) == Rational(15), "<x^6> != 15");
  out.require(wick::moment_1d(8) == Rational(105), "<x^8> != 105");
}

void pairing_counts(Outcome &out) {
  for (int n = 2; n <= 14; n += 2) {
    const auto all = wick::enumerate_pairings(n);
    out.require(mpz_class(all.size()) == double_factorial_formula(n),
                "pairing count for N = " + std::to_string(n));
  }
}

void oracle_equivalence(Outcome &out) {
  const auto corpus = fixture_models();
  out.require(corpus.size() >= 10, "fewer than 10 fixture models");
  int compared = 0;
  for (const auto &[name, model] : corpus) {
    out.require(model.dimension() <= 3, name + " has dimension above 3");
    for (const auto &[m, q] : model.vertices)
      out.require(m >= 1 && m <= 4, name + " has a valence outside 1..4");
    for (const auto &n : multidegrees_within(model, 12)) {
      ++compared;
      out.require(amp::series_coefficient(model, n) == amp::oracle_coefficient(model, n),
                  name + " " + amp::multidegree_str(n));
    }
  }
  out.require(compared > 0, "nothing compared");
}

void symmetry_factors(Outcome &out) {
  out.require(graph::automorphism_order(theta()) == 12, "|Aut(theta)| != 12");
  out.require(graph::automorphism_order(dumbbell()) == 8, "|Aut(dumbbell)| != 8");
  for (const auto &[n, profile] : small_profiles(10, 10)) {
    const mpz_class group = graph::relabelling_group_order(profile);
    int darts = n;
    for (auto [m, k] : profile) darts += m * k;
    mpz_class total = 0;
    for (const auto &e : graph::enumerate_graphs(n, profile)) {
      out.require(group % e.automorphisms == 0 && e.matchings == group / e.automorphisms,
                  "matchings != prod n_m!(m!)^n_m / |Aut| for " + e.key);
      total += e.matchings;
    }
    out.require(total == wick::pairing_count(darts), "class matchings do not sum to (N-1)!!");
  }
}

void hopf_axioms(Outcome &out) {
  const auto corpus = fixture_nestings();
  out.require(corpus.size() >= 8, "fewer than 8 nesting specs");
  int max_depth = 0;
  bool product_sub = false, multi_sub = false;
  Engine rng(2);
  for (const auto &[name, spec] : corpus) {
    std::map<std::string, int> depth;
    for (const auto &id : spec.by_degree()) {
      int d = 0;
      for (const auto &sd : spec.generator(id).subdivergences) {
        product_sub |= sd.sub.size() > 1;
        for (const auto &s : sd.sub) d = std::max(d, depth[s] + 1);
      }
      multi_sub |= spec.generator(id).subdivergences.size() > 1;
      max_depth = std::max(max_depth, depth[id] = d);
    }
    const hopf::HopfAlgebra h(spec);
    std::vector<hopf::Element> samples;
    for (const auto &g : spec.generators()) samples.push_back(hopf::Element::generator(g.id));
    for (int i = 0; i < 10; ++i) samples.emplace_back(random_monomial(rng, spec, 6));
    for (int i = 0; i < 5; ++i) samples.push_back(random_element(rng, spec, 5));
    for (const auto &x : samples) {
      const auto r = hopf::check_axioms(h, x);
      out.require(r.coassociative, name + ": coassociativity");
      out.require(r.counit_left && r.counit_right, name + ": counit law");
      out.require(r.antipode_left && r.antipode_right, name + ": antipode law");
      out.require(r.geometric_left && r.geometric_right && r.antipodes_agree,
                  name + ": geometric antipode");
      out.require(r.all(), name + ": grading or termination");
    }
  }
  out.require(max_depth >= 3 && product_sub && multi_sub, "corpus misses a required shape");

  // S(G) = -G - S(g) G/g is the corrected sign; the opposite one breaks the law
  const hopf::HopfAlgebra h(hopf::NestingSpec(
      {{"g1", 1, {}, {}}, {"c1", 1, {}, {}}, {"G2", 2, {{{"g1"}, "c1"}}, {}}}));
  const auto g = hopf::Element::generator("g1"), c = hopf::Element::generator("c1"),
             big = hopf::Element::generator("G2");
  out.require(h.antipode_recursive(big) == -big + g * c, "antipode sign");
  hopf::Element lhs;
  for (const auto &[lr, k] : h.coproduct(hopf::Monomial{"G2"}).terms()) {
    const hopf::Element s =
        lr.first == hopf::Monomial{"G2"} ? -big - g * c : h.antipode_recursive(lr.first);
    lhs += k * (s * hopf::Element(lr.second));
  }
  out.require(!lhs.is_zero(), "the uncorrected sign unexpectedly satisfies the law");
}

void birkhoff(Outcome &out) {
  const auto corpus = fixture_characters();
  out.require(corpus.size() >= 5, "fewer than 5 characters");
  Engine rng(3);
  for (const auto &fx : corpus) {
    const hopf::HopfAlgebra h(fx.spec);
    renorm::require_complete(fx.character, fx.spec);
    const auto bp = renorm::bogoliubov(h, fx.character);
    const auto report = renorm::check_bp(h, fx.character, bp, random_pairs(rng, fx.spec, 6, 3));
    for (const auto &[id, ck] : report.per_generator) {
      const std::string at = fx.name + " " + id + ": ";
      out.require(ck.counterterm_pure_pole, at + "C not pure pole");
      out.require(ck.renormalized_regular, at + "R not regular");
      out.require(ck.convolution, at + "C * F != R");
      out.require(ck.birkhoff, at + "(C o S) * R != F");
      out.require(ck.subtraction_vanishes, at + "T(R) != 0");
      out.require(ck.idempotent, at + "renormalization not idempotent");
    }
    for (const auto &m : report.multiplicativity)
      out.require(m.counterterm && m.renormalized, fx.name + ": multiplicativity");
  }
}

void renormalization_group(Outcome &out) {
  const hopf::HopfAlgebra prim(hopf::NestingSpec({{"g", 1, {}, {}}}));
  renorm::RCharacter f;
  f.values["g"] = RSeries::monomial(Rational(1), -1);
  const auto rg = rg::rg_element(prim, f);
  out.require(rg.values.at("g") == TPoly(std::vector<Rational>{0, 1}), "rg_t(g) != t");
  out.require(rg::beta(rg).at("g") == Rational(1), "beta(g) != 1");

  auto check = [&](const std::string &name, const hopf::HopfAlgebra &h,
                   const renorm::RCharacter &x) {
    const auto r = rg::analyze(h, x);
    out.require(r.scale.all(), name + ": counterterm depends on t");
    for (const auto &[id, g] : r.group_law) out.require(g.holds, name + " " + id + ": group law");
    for (const auto &[id, g] : r.flow_law) out.require(g.holds, name + " " + id + ": flow law");
    out.require(r.all(), name + ": identity or first-order check");
    const auto bp = renorm::bogoliubov(h, x);
    for (const auto &g : h.spec().generators())
      if (g.subdivergences.empty())
        out.require(r.beta.at(g.id) == -Rational(g.degree) * bp.counterterm.at(g.id).coeff(-1),
                    name + " " + g.id + ": beta is not -L Res C");
  };
  for (const auto &fx : fixture_characters())
    if (fx.name.rfind("l0", 0) == 0) check(fx.name, hopf::HopfAlgebra(fx.spec), fx.character);
  Engine rng(4);
  for (const auto &[name, spec] : fixture_nestings()) {
    const hopf::HopfAlgebra h(spec);
    check(name, h, local_character(rng, h).f);
  }
}

void rota_baxter(Outcome &out) {
  Engine rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_rseries(rng, 3, 8), b = random_rseries(rng, 3, 8);
    const auto lhs = ms_project(a) * ms_project(b) + ms_project(a * b);
    const auto rhs = ms_project(ms_project(a) * b) + ms_project(a * ms_project(b));
    out.require(lhs.agrees_with(rhs), "pair " + std::to_string(i));
  }
}

}  // namespace

int main() {
  criterion(1, "Gaussian moments", 1, gaussian_moments);
  criterion(2, "Pairing combinatorics", 5, pairing_counts);
  criterion(3, "Feynman expansion equals the Wick oracle", 60, oracle_equivalence);
  criterion(4, "Symmetry-factor identity", 30, symmetry_factors);
  criterion(5, "Hopf axioms", 10, hopf_axioms);
  criterion(6, "BP recursion and Birkhoff decomposition", 10, birkhoff);
  criterion(7, "Renormalization group", 10, renormalization_group);
  criterion(8, "Rota-Baxter property of minimal subtraction", 2, rota_baxter);
  return failures == 0 ? 0 : 1;
}
