#include "visguard/scene_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace visguard {

namespace {

Point parse_point(const nlohmann::json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::ParseError,
                std::string(where) + ": expected [x, y] number pair");
  }
  const Point p{j[0].get<double>(), j[1].get<double>()};
  if (!finite(p)) {
    throw Error(ErrorCode::ParseError,
                std::string(where) + ": coordinates must be finite");
  }
  return p;
}

}  // namespace

SceneFile parse_scene_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorCode::ParseError, "scene file must be a JSON object");
  }

  SceneFile file;
  if (j.contains("name")) {
    if (!j["name"].is_string()) {
      throw Error(ErrorCode::ParseError, "\"name\" must be a string");
    }
    file.name = j["name"].get<std::string>();
  }
  for (const char* key : {"polygon", "source", "target"}) {
    if (!j.contains(key) || !j[key].is_array()) {
      throw Error(ErrorCode::ParseError,
                  std::string("missing or invalid \"") + key + "\" array");
    }
  }
  for (const auto& entry : j["polygon"]) {
    file.polygon.push_back(parse_point(entry, "polygon"));
  }
  if (j["source"].size() != 2 || j["target"].size() != 2) {
    throw Error(ErrorCode::ParseError,
                "\"source\" and \"target\" must hold exactly two points");
  }
  file.source[0] = parse_point(j["source"][0], "source");
  file.source[1] = parse_point(j["source"][1], "source");
  file.target[0] = parse_point(j["target"][0], "target");
  file.target[1] = parse_point(j["target"][1], "target");
  return file;
}

SceneFile read_scene_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open scene file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene_json(buf.str());
}

Scene to_scene(const SceneFile& file) {
  Scene scene;
  scene.polygon = Polygon::validate(file.polygon);
  scene.source = Segment{file.source[0], file.source[1]};
  scene.target = Segment{file.target[0], file.target[1]};
  require_segment_inside(scene.polygon, scene.source, "source");
  require_segment_inside(scene.polygon, scene.target, "target");
  return scene;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

namespace {

void append_point(std::string& out, Point p) {
  out += '[';
  out += format_number(p.x);
  out += ", ";
  out += format_number(p.y);
  out += ']';
}

void append_optional_point(std::string& out, const char* key,
                           const std::optional<Point>& p) {
  if (!p) return;
  out += ", \"";
  out += key;
  out += "\": ";
  append_point(out, *p);
}

}  // namespace

std::string write_scene_json(const SceneFile& file) {
  std::string out = "{\n";
  if (!file.name.empty()) {
    out += "  \"name\": \"" + file.name + "\",\n";
  }
  out += "  \"polygon\": [";
  for (std::size_t i = 0; i < file.polygon.size(); ++i) {
    if (i) out += ", ";
    append_point(out, file.polygon[i]);
  }
  out += "],\n  \"source\": [";
  append_point(out, file.source[0]);
  out += ", ";
  append_point(out, file.source[1]);
  out += "],\n  \"target\": [";
  append_point(out, file.target[0]);
  out += ", ";
  append_point(out, file.target[1]);
  out += "]\n}\n";
  return out;
}

std::string write_guards_json(const GuardSet& gs,
                              std::optional<double> covered_fraction,
                              bool include_trace) {
  std::string out = "{\n  \"guards\": [";
  for (std::size_t i = 0; i < gs.guards.size(); ++i) {
    if (i) out += ", ";
    append_point(out, gs.guards[i]);
  }
  out += "],\n";
  out += "  \"iterations\": " + std::to_string(gs.termination_iteration) + ",\n";
  out += "  \"ar\": " + format_number(gs.aspect_ratio) + ",\n";
  out += "  \"bound\": " + std::to_string(gs.guard_bound) + ",\n";
  out += "  \"reason\": \"" + std::string(to_string(gs.reason)) + "\"";
  if (covered_fraction) {
    out += ",\n  \"coveredFraction\": " + format_number(*covered_fraction);
  }
  if (include_trace) {
    out += ",\n  \"trace\": [";
    for (std::size_t i = 0; i < gs.trace.size(); ++i) {
      const IterationRecord& r = gs.trace[i];
      if (i) out += ", ";
      out += "{\"i\": " + std::to_string(r.index) + ", \"x\": ";
      append_point(out, r.x_point);
      out += ", \"y\": ";
      append_point(out, r.y_point);
      append_optional_point(out, "lbvX", r.lbv_x.vertex);
      append_optional_point(out, "rbvY", r.rbv_y.vertex);
      append_optional_point(out, "tX", r.t_x);
      append_optional_point(out, "tY", r.t_y);
      append_optional_point(out, "nextX", r.next_x);
      append_optional_point(out, "nextY", r.next_y);
      out += '}';
    }
    out += ']';
  }
  out += "\n}\n";
  return out;
}

}  // namespace visguard
