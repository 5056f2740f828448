#include <gtest/gtest.h>

#include "feynhopf/amplitudes.hpp"
#include "feynhopf/error.hpp"
#include "support/graphs.hpp"
#include "support/models.hpp"

using namespace feynhopf;
using namespace feynhopf::amp;
using namespace feynhopf::testgen;

namespace {

InteractionModel one_dim(int externals, std::map<int, Rational> couplings) {
  std::map<int, SymmetricTensor> tensors;
  for (auto [m, c] : couplings)
    tensors[m] = SymmetricTensor(m, 1, {{MultiIndex(m, 0), c}});
  return InteractionModel{wick::BilinearForm(wick::Matrix::identity(1)),
                          std::vector<wick::Covector>(externals, wick::Covector{1}),
                          std::move(tensors)};
}

}  // namespace

TEST(Tensor, SymmetrizeAveragesOverArrangements) {
  bool sym = true;
  const auto q = symmetrize(3, 2, {{{0, 0, 1}, Rational(3)}}, &sym);
  EXPECT_FALSE(sym);
  EXPECT_EQ(q.at({0, 1, 0}), Rational(1));
  EXPECT_EQ(q.at({1, 0, 0}), Rational(1));
  EXPECT_EQ(q.arrangements().size(), 3u);

  const auto p = symmetrize(2, 2, {{{0, 1}, Rational(2)}, {{1, 0}, Rational(2)}}, &sym);
  EXPECT_TRUE(sym);
  EXPECT_EQ(p.at({1, 0}), Rational(2));
  EXPECT_THROW(SymmetricTensor(2, 2, {{{0, 1}, Rational(1)}, {{1, 0}, Rational(2)}}),
               DomainError);
  EXPECT_THROW(SymmetricTensor(2, 1, {{{0, 1}, Rational(1)}}), ShapeError);
}

TEST(Amplitude, Examples) {
  const auto free2 = one_dim(2, {});
  EXPECT_EQ(feynman_amplitude(edge12(), free2), Rational(1));
  EXPECT_EQ(feynman_amplitude(path4(), one_dim(2, {{4, 1}})), Rational(1));
  EXPECT_EQ(feynman_amplitude(theta(), one_dim(0, {{3, 1}})), Rational(1));
  // weights multiply: couplings and propagators
  auto m = one_dim(2, {{4, Rational(2)}});
  m.bilinear = wick::BilinearForm(wick::Matrix{{Rational(4)}});
  // 3 internal lines + 2 legs, each 1/4; two vertices of weight 2
  EXPECT_EQ(feynman_amplitude(path4(), m), Rational(4, 1024));
}

TEST(Amplitude, Errors) {
  EXPECT_THROW(feynman_amplitude(path4(), one_dim(2, {{3, 1}})), DomainError);
  EXPECT_THROW(feynman_amplitude(path4(), one_dim(1, {{4, 1}})), ShapeError);
}

TEST(Amplitude, InvariantUnderRelabelling) {
  Engine rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto model = random_model(rng, 4, {3, 4});
    for (const auto &g : {fish()}) {
      const Rational f = feynman_amplitude(g, model);
      for (int k = 0; k < 5; ++k) EXPECT_EQ(feynman_amplitude(shuffled(g, rng), model), f);
    }
  }
  Engine rng2(6);
  for (int trial = 0; trial < 10; ++trial) {
    const auto model = random_model(rng2, 0, {3});
    for (const auto &g : {theta(), dumbbell()}) {
      const Rational f = feynman_amplitude(g, model);
      EXPECT_EQ(feynman_amplitude(shuffled(g, rng2), model), f);
    }
  }
}

TEST(Amplitude, MultiplicativeOverDisjointUnions) {
  Engine rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto model = random_model(rng, 4, {3, 4});
    // legs 1,2 on a quartic tadpole path; legs 3,4 on a cubic bubble
    const auto a = graph::FeynmanGraph::from_edges(2, {4}, {{0, 2}, {2, 1}, {2, 2}});
    const auto b =
        graph::FeynmanGraph::from_edges(2, {3, 3}, {{0, 2}, {2, 3}, {2, 3}, {3, 1}});
    const auto u = graph::FeynmanGraph::from_edges(
        4, {4, 3, 3}, {{0, 4}, {4, 1}, {4, 4}, {2, 5}, {5, 6}, {5, 6}, {6, 3}});
    InteractionModel left{model.bilinear, {model.external[0], model.external[1]},
                          model.vertices};
    InteractionModel right{model.bilinear, {model.external[2], model.external[3]},
                           model.vertices};
    EXPECT_EQ(feynman_amplitude(u, model),
              feynman_amplitude(a, left) * feynman_amplitude(b, right));
  }
}

TEST(Series, Examples) {
  const auto cubic = one_dim(0, {{3, 1}});
  EXPECT_EQ(series_coefficient(cubic, {{3, 2}}), Rational(5, 24));
  EXPECT_EQ(series_coefficient(cubic, {{3, 2}}) * Rational(72), Rational(15));
  EXPECT_EQ(series_coefficient(cubic, {{3, 1}}), Rational(0));
  EXPECT_EQ(series_coefficient(one_dim(2, {}), {}), Rational(1));
  EXPECT_EQ(series_coefficient(one_dim(2, {{4, 1}}), {{4, 1}}), Rational(5, 8));

  const auto s = correlator_series(one_dim(2, {{3, 1}, {4, 1}}), 2);
  ASSERT_EQ(s.size(), 6u);
  EXPECT_TRUE(s[0].degree.empty());
  EXPECT_EQ(s[0].value, Rational(1));
  for (const auto &c : s)
    if (slot_total(one_dim(2, {{3, 1}, {4, 1}}), c.degree) % 2) EXPECT_TRUE(c.value.is_zero());
}

TEST(Series, FreeTermIsTheFreeCorrelator) {
  for (const auto &[name, model] : fixture_models())
    EXPECT_EQ(series_coefficient(model, {}), wick::free_correlator(model.external, model.bilinear))
        << name;
}

TEST(Oracle, Examples) {
  EXPECT_EQ(oracle_coefficient(one_dim(0, {{3, 1}}), {{3, 2}}), Rational(5, 24));
  EXPECT_EQ(oracle_coefficient(one_dim(2, {{4, 1}}), {{4, 1}}), Rational(5, 8));
  EXPECT_EQ(oracle_coefficient(one_dim(2, {}), {}), Rational(1));
  EXPECT_EQ(oracle_coefficient(one_dim(1, {{4, 1}}), {{4, 1}}), Rational(0));
  EXPECT_THROW(oracle_coefficient(one_dim(2, {{4, 1}}), {{4, 4}}), DomainError);
  EXPECT_THROW(oracle_coefficient(one_dim(2, {{4, 1}}), {{3, 2}}), DomainError);
  EXPECT_EQ(oracle_coefficient(one_dim(2, {{4, 1}}), {{3, 1}}), Rational(0));
}

TEST(Oracle, AgreesWithGraphSumOnFixtures) {
  int checked = 0;
  for (const auto &[name, model] : fixture_models())
    for (const auto &n : multidegrees_within(model, 10)) {
      EXPECT_EQ(series_coefficient(model, n), oracle_coefficient(model, n))
          << name << " " << multidegree_str(n);
      ++checked;
    }
  EXPECT_GT(checked, 100);
}

TEST(Oracle, AgreesWithGraphSumOnRandomModels) {
  Engine rng(21);
  const std::vector<std::vector<int>> valence_sets{{1, 3}, {2, 4}, {3}, {4}, {1, 2, 3, 4}};
  for (int trial = 0; trial < 20; ++trial) {
    const int externals = trial % 4;
    const auto model = random_model(rng, externals, valence_sets[trial % valence_sets.size()]);
    for (const auto &n : multidegrees_within(model, 8))
      EXPECT_EQ(series_coefficient(model, n), oracle_coefficient(model, n))
          << "trial " << trial << " " << multidegree_str(n);
  }
}

TEST(ModelJson, IngestsFixturesAndWarnsOnAsymmetry) {
  std::vector<IngestWarning> warnings;
  const auto j = read_json(fixture_dir() / "models" / "m04_2d_o2_quartic.json");
  const auto m = model_from_json(j, &warnings);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_EQ(warnings[0].pointer, "/vertices/4");
  EXPECT_EQ(m.vertices.at(4).at({1, 0, 1, 0}), Rational(1, 3));

  warnings.clear();
  const auto sym = model_from_json(model_to_json(m), &warnings);
  EXPECT_TRUE(warnings.empty());
  EXPECT_EQ(model_to_json(sym).dump(), model_to_json(m).dump());
}

TEST(ModelJson, ErrorsCarryPointers) {
  const auto good = read_json(fixture_dir() / "models" / "m05_2d_coupled_cubic.json");
  auto expect_pointer = [](const nlohmann::json &j, const std::string &pointer) {
    try {
      model_from_json(j);
      ADD_FAILURE() << "accepted " << j.dump();
    } catch (const ValidationError &e) {
      EXPECT_EQ(e.pointer(), pointer) << e.what();
    }
  };
  auto j = good;
  j["bilinear"][0][1] = "5";
  expect_pointer(j, "/bilinear");
  j = good;
  j["bilinear"] = {{"-1", "0"}, {"0", "1"}};
  expect_pointer(j, "/bilinear");
  j = good;
  j["external"][1] = {"1"};
  expect_pointer(j, "/external/1");
  j = good;
  j["vertices"]["3"]["(0,0,7)"] = "1";
  expect_pointer(j, "/vertices/3/(0,0,7)");
  j = good;
  j["vertices"]["3"]["(0,0)"] = "1";
  expect_pointer(j, "/vertices/3/(0,0)");
  j = good;
  j["vertices"]["3"]["(0,0,0)"] = "1/0";
  expect_pointer(j, "/vertices/3/(0,0,0)");
  j = good;
  j["vertices"]["x"] = nlohmann::json::object();
  expect_pointer(j, "/vertices/x");
  j = good;
  j.erase("dimension");
  expect_pointer(j, "/dimension");
}
