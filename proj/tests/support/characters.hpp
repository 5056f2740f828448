#ifndef FEYNHOPF_TESTS_CHARACTERS_HPP
#define FEYNHOPF_TESTS_CHARACTERS_HPP

#include "feynhopf/renorm.hpp"
#include "support/nesting.hpp"

namespace feynhopf::testgen {

struct CharacterFixture {
  std::string name;
  hopf::NestingSpec spec;
  renorm::RCharacter character;
};

/// Character fixtures paired with their nesting specs through
/// fixtures/characters/manifest.json.
inline std::vector<CharacterFixture> fixture_characters() {
  const auto dir = fixture_dir() / "characters";
  std::vector<CharacterFixture> out;
  for (const auto &entry : read_json(dir / "manifest.json")) {
    const std::string file = entry.at("character");
    out.push_back({std::filesystem::path(file).stem().string(),
                   hopf::nesting_from_json(
                       read_json(fixture_dir() / "nesting" / entry.at("nesting").get<std::string>())),
                   renorm::character_from_json(read_json(dir / file))});
  }
  return out;
}

/// Random character: each generator gets poles down to eps^-degree.
inline renorm::RCharacter random_character(Engine &rng, const hopf::NestingSpec &spec,
                                           int truncation = 8, int pole_bound = 8) {
  renorm::RCharacter x;
  x.truncation = truncation;
  x.pole_bound = pole_bound;
  for (const auto &g : spec.generators())
    x.values[g.id] = random_rseries(rng, g.degree, 3, truncation, pole_bound);
  return x;
}

inline std::vector<std::pair<hopf::Monomial, hopf::Monomial>> random_pairs(
    Engine &rng, const hopf::NestingSpec &spec, int count, int max_degree) {
  std::vector<std::pair<hopf::Monomial, hopf::Monomial>> out;
  while (static_cast<int>(out.size()) < count) {
    auto a = random_monomial(rng, spec, max_degree), b = random_monomial(rng, spec, max_degree);
    if (!a.empty() && !b.empty()) out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

}  // namespace feynhopf::testgen

#endif  // FEYNHOPF_TESTS_CHARACTERS_HPP
