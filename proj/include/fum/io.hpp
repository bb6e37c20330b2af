#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fum/coloring.hpp"
#include "fum/plane_graph.hpp"

namespace fum {

inline constexpr char kPlanarCodeHeader[] = ">>planar_code<<";

/// Decodes a planar_code byte stream: the 15-byte header, then per graph one
/// byte n (1..255; the wide format is rejected) and n zero-terminated
/// neighbor lists in rotation order, 1-based. The outer dart of each decoded
/// graph defaults to (0, first neighbor of 0).
std::vector<PlaneGraph> parse_planar_code(const std::vector<uint8_t>& bytes);

/// Encodes graphs (each with at most 255 and at least 1 vertex) in the same
/// format; parse(serialize(gs)) reproduces the rotations byte-exactly.
std::vector<uint8_t> serialize_planar_code(const std::vector<PlaneGraph>& graphs);

/// Line-oriented text: `n <count>`, per-vertex lines `<v>: <n1> <n2> ...`
/// in clockwise order, an optional `outer <u> <v>` line per component, and
/// `#` comments.
PlaneGraph parse_rotation_text(const std::string& text);
std::string serialize_rotation_text(const PlaneGraph& g);

std::vector<uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const std::vector<uint8_t>& bytes);

/// Auto-detects planar_code (by header) vs rotation text; applies the outer
/// override (u, v) when given.
std::vector<PlaneGraph> load_graphs(const std::vector<uint8_t>& bytes,
                                    std::optional<Dart> outer_override);

nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const VertexColoring& c);
nlohmann::json to_json(const EdgeColoring& c);
nlohmann::json to_json(const Classification& c);

/// DOT document with vertices filled from a fixed six-color palette and/or
/// edge color labels.
std::string export_dot(const PlaneGraph& g, const VertexColoring* vc, const EdgeColoring* ec);

}  // namespace fum
