#include <gtest/gtest.h>

#include "feynhopf/error.hpp"
#include "feynhopf/rg.hpp"
#include "support/local.hpp"

using namespace feynhopf;
using namespace feynhopf::rg;
using namespace feynhopf::testgen;
using hopf::NestingSpec;
using renorm::RCharacter;

namespace {

const TPoly t(std::vector<Rational>{Rational(0), Rational(1)});

TPoly poly(std::vector<Rational> c) { return TPoly(std::move(c)); }

NestingSpec two_level() {
  return NestingSpec({{"g1", 1, {}, {}}, {"c1", 1, {}, {}}, {"G2", 2, {{{"g1"}, "c1"}}, {}}});
}

RSeries series(std::map<int, Rational> terms, int truncation = 12, int pole_bound = 8) {
  return RSeries(std::move(terms), truncation, pole_bound);
}

RCharacter character(std::map<std::string, RSeries> values) {
  RCharacter f;
  f.truncation = 12;
  f.pole_bound = 8;
  f.values = std::move(values);
  return f;
}

// F = C o S for C(g1) = C(c1) = -1/e, C(G2) = 1/(2e^2) - 1/(2e)
RCharacter local_two_level() {
  return character({{"g1", series({{-1, 1}})},
                    {"c1", series({{-1, 1}})},
                    {"G2", series({{-2, Rational(1, 2)}, {-1, Rational(1, 2)}})}});
}

std::string failures(const RGReport &r) {
  std::string s;
  for (const auto &[id, ok] : r.scale.t_free)
    if (!ok) s += id + ":t_free ";
  for (const auto &[id, g] : r.group_law)
    if (!g.holds) s += id + ":group ";
  for (const auto &[id, g] : r.flow_law)
    if (!g.holds) s += id + ":flow ";
  for (const auto &[id, ok] : r.identity_at_zero)
    if (!ok) s += id + ":identity ";
  for (const auto &[id, ok] : r.first_order)
    if (!ok) s += id + ":first_order ";
  return s;
}

}  // namespace

TEST(ScaleCharacter, Examples) {
  const hopf::HopfAlgebra h(NestingSpec({{"g", 1, {}, {}}, {"G", 2, {}, {}}}));
  const auto f = character({{"g", series({{-1, 1}})}, {"G", series({{-2, 1}})}});
  const auto scaled = scale_character(h, f);
  const TSeries g = scaled.at("g");
  EXPECT_EQ(g.coeff(-1), TPoly(Rational(1)));
  EXPECT_EQ(g.coeff(0), t);
  EXPECT_EQ(g.coeff(1), poly({0, 0, Rational(1, 2)}));
  const TSeries big = scaled.at("G");
  EXPECT_EQ(big.coeff(-2), TPoly(Rational(1)));
  EXPECT_EQ(big.coeff(-1), poly({0, 2}));
  EXPECT_EQ(big.coeff(0), poly({0, 0, 2}));
  for (const auto &[id, s] : f.values)
    EXPECT_TRUE(evaluate_t(scaled.at(id), Rational(0)).agrees_with(s)) << id;
}

TEST(RG, PrimitiveExample) {
  const hopf::HopfAlgebra h(NestingSpec({{"g", 1, {}, {}}}));
  const auto pure = character({{"g", series({{-1, 1}})}});
  const auto rg = rg_element(h, pure);
  EXPECT_EQ(rg.values.at("g"), t);
  EXPECT_EQ(beta(rg).at("g"), Rational(1));

  const auto scale = pole_part_scale_independence(h, pure);
  EXPECT_TRUE(scale.all());
  EXPECT_TRUE(scale.scaled.counterterm.at("g").agrees_with(lift_to_t(series({{-1, -1}}))));

  const Rational a0(-3, 4);
  const auto with_finite = character({{"g", series({{-1, 1}, {0, a0}, {2, 5}})}});
  const auto flow = flow_consistency_check(h, with_finite, rg_element(h, with_finite));
  EXPECT_EQ(flow.at("g").scaled, poly({a0, 1}));
  EXPECT_TRUE(flow.at("g").holds);
}

TEST(RG, RegularCharacterIsTrivial) {
  const hopf::HopfAlgebra h(two_level());
  const auto f = character({{"g1", series({{0, 2}, {1, 1}})},
                            {"c1", series({{0, -1}})},
                            {"G2", series({{0, Rational(1, 3)}})}});
  const auto r = analyze(h, f);
  for (const auto &[id, p] : r.rg.values) EXPECT_TRUE(p.is_zero()) << id;
  for (const auto &[id, b] : r.beta) EXPECT_EQ(b, Rational(0)) << id;
  for (const auto &[id, c] : r.scale.scaled.counterterm.values) EXPECT_TRUE(c.is_zero()) << id;
  EXPECT_EQ(r.flow_law.at("G2").scaled, TPoly(Rational(1, 3)));
  EXPECT_TRUE(r.all()) << failures(r);
}

TEST(RG, TwoLevelHandExample) {
  const hopf::HopfAlgebra h(two_level());
  const auto r = analyze(h, local_two_level());
  EXPECT_TRUE(r.all()) << failures(r);
  EXPECT_TRUE(r.scale.scaled.counterterm.at("G2").agrees_with(
      lift_to_t(series({{-2, Rational(1, 2)}, {-1, Rational(-1, 2)}}))));
  EXPECT_EQ(r.rg.values.at("g1"), t);
  EXPECT_EQ(r.rg.values.at("G2"), poly({0, 1, Rational(1, 2)}));
  EXPECT_EQ(r.beta.at("G2"), Rational(1));
  EXPECT_EQ(r.flow_law.at("G2").scaled, poly({0, 1, Rational(1, 2)}));

  // (t+s) + (t+s)^2/2 = rg_t(G2) + rg_s(G2) + rg_t(g1) rg_s(c1)
  const auto &g = r.group_law.at("G2");
  EXPECT_EQ(g.shifted, g.convolved);
  EXPECT_EQ(g.shifted.coefficients().at(1), TPoly(std::vector<Rational>{1, 1}));
}

TEST(RG, GroupAndFlowLawsOnLocalCharacters) {
  Engine rng(31);
  for (const auto &[name, spec] : fixture_nestings()) {
    const hopf::HopfAlgebra h(spec);
    for (int trial = 0; trial < 2; ++trial) {
      const auto local = local_character(rng, h);
      const auto r = analyze(h, local.f);
      EXPECT_TRUE(r.all()) << name << ": " << failures(r);
      const auto bp = renorm::bogoliubov(h, local.f);
      for (const auto &g : spec.generators()) {
        EXPECT_TRUE(bp.counterterm.at(g.id).agrees_with(local.counterterm.at(g.id)))
            << name << " " << g.id;
        EXPECT_TRUE(bp.renormalized.at(g.id).agrees_with(local.renormalized.at(g.id)))
            << name << " " << g.id;
        EXPECT_EQ(r.rg.values.at(g.id).degree() <= g.degree, true) << name << " " << g.id;
      }
    }
  }
}

TEST(RG, BetaIsTheResidueOnPrimitives) {
  Engine rng(8);
  for (const auto &[name, spec] : fixture_nestings()) {
    const hopf::HopfAlgebra h(spec);
    const auto local = local_character(rng, h);
    const auto b = beta(rg_element(h, local.f));
    for (const auto &g : spec.generators()) {
      if (!g.subdivergences.empty()) continue;
      // rg_t(g) = -L Res C(g) t for a primitive
      EXPECT_EQ(b.at(g.id), -Rational(g.degree) * local.counterterm.at(g.id).coeff(-1))
          << name << " " << g.id;
    }
  }
}

TEST(RG, NonLocalCharacterBreaksScaleIndependence) {
  const hopf::HopfAlgebra h(two_level());
  const auto f = character({{"g1", series({{-1, 1}})},
                            {"c1", series({{-1, 1}})},
                            {"G2", series({{-2, 1}})}});
  const auto scale = pole_part_scale_independence(h, f);
  EXPECT_TRUE(scale.t_free.at("g1"));
  EXPECT_FALSE(scale.t_free.at("G2"));
  EXPECT_EQ(scale.scaled.counterterm.at("G2").coeff(-1), poly({0, -1}));
  EXPECT_THROW(rg_element(h, f), DomainError);
}

TEST(RG, ReportJson) {
  const hopf::HopfAlgebra h(two_level());
  const auto j = report_to_json(analyze(h, local_two_level()), 1);
  EXPECT_EQ(j["all_checks"], "pass");
  EXPECT_EQ(j["generators"]["G2"]["rg"], nlohmann::json({"0", "1"}));
  EXPECT_EQ(j["generators"]["G2"]["rg_degree"], 2);
  EXPECT_EQ(j["generators"]["G2"]["beta"], "1");
  EXPECT_EQ(j["generators"]["g1"]["checks"]["first_order"], "pass");
}
