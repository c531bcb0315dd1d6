#pragma once

#include <optional>
#include <string>

#include "visguard/oracle.hpp"
#include "visguard/slicer.hpp"

namespace visguard {

/// Raw scene file contents before polygon validation.
struct SceneFile {
  std::string name;  // empty when absent
  std::vector<Point> polygon;
  Point source[2];
  Point target[2];
};

SceneFile parse_scene_json(const std::string& text);
SceneFile read_scene_file(const std::string& path);

/// Validates the polygon and both segments (inside the closure, interiors in
/// the open interior).  Throws the underlying validation errors.
Scene to_scene(const SceneFile& file);

/// Serializers are hand-rolled so output bytes are deterministic, with
/// numbers at 9 significant digits.
std::string write_scene_json(const SceneFile& file);

std::string write_guards_json(const GuardSet& gs,
                              std::optional<double> covered_fraction,
                              bool include_trace);

std::string format_number(double v);  // %.9g

}  // namespace visguard
