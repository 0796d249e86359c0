#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ofg/game.hpp"

namespace ofg {

// Canonical JSON form:
//
//   { "nodes": [ {"id": <int>, "s": <real>, "self_weight": <real>}, ... ],
//     "edges": [ {"from": <int>, "to": <int>, "weight": <real>}, ... ] }
//
// Node ids may be any distinct integers; they are remapped to dense indices
// in ascending id order and kept as the instance's labels. Edge weights must
// be strictly positive (an absent edge is the only way to say "zero").
// Unknown top-level keys such as "levels" are ignored.

/// Throws ParseError on malformed JSON, missing fields, duplicate node ids,
/// duplicate edges, undeclared endpoints, self edges, or non-positive edge
/// weights.
GameInstance parse_instance(std::string_view text);

/// Reals are written in shortest round-trip form (at most 17 significant
/// digits), so parse_instance(serialize_instance(g)) reproduces g bit for
/// bit. `levels`, when non-empty, is written as a per-node "levels" array.
std::string serialize_instance(const GameInstance& instance,
                               std::span<const std::size_t> levels = {});

/// Reads the optional "levels" sidecar; empty when absent.
std::vector<std::size_t> parse_levels(std::string_view text);

GameInstance load_instance(const std::string& path);

}  // namespace ofg
