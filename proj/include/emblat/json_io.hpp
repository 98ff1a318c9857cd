#pragma once

#include <string>

#include <json.hpp>

#include "emblat/embedded.hpp"
#include "emblat/games.hpp"
#include "emblat/lattice.hpp"
#include "emblat/partition.hpp"

namespace emblat {

// Wire formats:
//   Partition        [[1,2],[3]]                      (canonical block order)
//   EmbeddedSubset   {"s":[1,2],"pi":[[1,2],[3]]}     bottom: {"bottom":true}
//   Game             {"n":3,"values":[{"s":..,"pi":..,"v":"2"},...]}
//   MoebiusVector    same shape with key "m"
// Rationals are strings "p/q" or integer strings; plain JSON integers are
// accepted on input. Bottom entries are omitted (implied zero).

nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j, int n);

nlohmann::json embedded_to_json(const EmbeddedSubset& x);
EmbeddedSubset embedded_from_json(const nlohmann::json& j, int n);

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json game_to_json(const Game& g);
Game game_from_json(const nlohmann::json& j);
Game game_from_json(const nlohmann::json& j, LatticePtr lat);

nlohmann::json moebius_to_json(const MoebiusVector& m);
MoebiusVector moebius_from_json(const nlohmann::json& j);
MoebiusVector moebius_from_json(const nlohmann::json& j, LatticePtr lat);

// Lattice export: elements (with heights) plus the cover edges.
nlohmann::json lattice_to_json(const EmbeddedLattice& L);

// Hasse diagram in DOT, one rank per height, node order = element index.
std::string lattice_to_dot(const EmbeddedLattice& L);

}  // namespace emblat
