#ifndef FEYNHOPF_GRAPH_IO_HPP
#define FEYNHOPF_GRAPH_IO_HPP

#include <string>

#include "feynhopf/graph.hpp"
#include "json.hpp"

namespace feynhopf::graph {

/// {"darts": n, "involution": [[a,b],...], "vertices": [[darts...],...],
///  "external": {"1": vertexIndex, ...}}. Involution pairs are written with
/// a < b in increasing a; vertex dart lists keep their stored order.
nlohmann::json to_json(const FeynmanGraph &g);

/// Inverse of to_json. Schema problems raise ValidationError with a JSON
/// pointer relative to `pointer`.
FeynmanGraph from_json(const nlohmann::json &j, const std::string &pointer = "");

/// Graphviz rendering: external vertices as boxes labelled 1..N, internal
/// vertices as circles labelled by valence.
std::string to_dot(const FeynmanGraph &g, const std::string &name = "G");

}  // namespace feynhopf::graph

#endif  // FEYNHOPF_GRAPH_IO_HPP
