#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "visguard/render.hpp"
#include "visguard/scene_io.hpp"

namespace {

using namespace visguard;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::NotWeaklyVisible:
    case ErrorCode::NoTargetView:
      return 3;
    case ErrorCode::IterationCapExceeded:
    case ErrorCode::StalledWithoutProgress:
      return 4;
    case ErrorCode::GenerationBudgetExceeded:
      return 5;
    default:
      return 2;
  }
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot write output file: " + path);
  }
  out << content;
  if (!out) {
    throw Error(ErrorCode::IoError, "failed writing output file: " + path);
  }
}

const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::CompletelyVisible: return "completely-visible";
    case PairClass::PartiallyInvisible: return "partially-invisible";
    case PairClass::WeaklyVisible: return "weakly-visible";
  }
  return "unknown";
}

int cmd_classify(const std::string& path) {
  const Scene scene = to_scene(read_scene_file(path));
  std::cout << to_string(classify_pair(scene.polygon, scene.source,
                                       scene.target))
            << "\n";
  return 0;
}

int cmd_guards(const std::string& path, const std::string& out_path,
               bool with_trace, int samples) {
  const Scene scene = to_scene(read_scene_file(path));
  const GuardSet gs = slice(scene.polygon, scene.source, scene.target);
  std::optional<double> fraction;
  if (samples > 0) {
    fraction = coverage_report(scene.polygon, gs.guards, scene.target, samples)
                   .covered_fraction;
  }
  write_output(out_path, write_guards_json(gs, fraction, with_trace));
  return 0;
}

int cmd_ar(const std::string& path) {
  const Scene scene = to_scene(read_scene_file(path));
  const LineAspect la = line_aspect_ratio(scene.polygon);
  const DiskAspect da = disk_aspect_ratio(scene.polygon);
  std::printf("LW = %.6f\n", la.lw);
  std::printf("SW = %.6f\n", la.sw);
  std::printf("AR_line = %.6f\n", la.ar);
  std::printf("LD = %.6f\n", da.ld);
  std::printf("SD = %.6f\n", da.sd);
  std::printf("AR_disk = %.6f\n", da.ar);
  if (la.sw_witness) {
    std::printf("SW witness: (%.6f, %.6f) and (%.6f, %.6f), normal (%.6f, %.6f)\n",
                la.sw_witness->vertex_a.x, la.sw_witness->vertex_a.y,
                la.sw_witness->vertex_b.x, la.sw_witness->vertex_b.y,
                la.sw_witness->strip_normal.x, la.sw_witness->strip_normal.y);
  } else {
    std::printf("SW witness: absent (fallback SW = LW)\n");
  }
  return 0;
}

int cmd_render(const std::string& path, const std::string& svg_path,
               bool with_trace) {
  const Scene scene = to_scene(read_scene_file(path));
  std::optional<GuardSet> gs;
  if (with_trace) {
    gs = slice(scene.polygon, scene.source, scene.target);
  }
  write_output(svg_path, render_svg(scene, gs ? &*gs : nullptr));
  return 0;
}

int cmd_gen(std::uint64_t seed, int vertices, const std::string& out_path) {
  const Scene scene = random_scene(seed, vertices);
  SceneFile file;
  file.name = "random-scene-" + std::to_string(seed);
  file.polygon = scene.polygon.vertices();
  file.source[0] = scene.source.a;
  file.source[1] = scene.source.b;
  file.target[0] = scene.target.a;
  file.target[1] = scene.target.b;
  write_output(out_path, write_scene_json(file));
  return 0;
}

int cmd_verify(const std::string& path, int samples,
               const std::string& guards_path) {
  const Scene scene = to_scene(read_scene_file(path));
  std::vector<Point> guards;
  if (!guards_path.empty()) {
    // Verify an external guard list (JSON with a "guards" array) instead of
    // the freshly sliced one.
    std::ifstream in(guards_path, std::ios::binary);
    if (!in) {
      throw Error(ErrorCode::IoError, "cannot open guards file: " + guards_path);
    }
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("guards") || !j["guards"].is_array()) {
      throw Error(ErrorCode::ParseError,
                  "guards file must contain a \"guards\" array");
    }
    for (const auto& g : j["guards"]) {
      guards.push_back({g[0].get<double>(), g[1].get<double>()});
    }
  } else {
    guards = slice(scene.polygon, scene.source, scene.target).guards;
  }

  const CoverageReport report =
      coverage_report(scene.polygon, guards, scene.target, samples);
  if (report.covered_fraction == 1.0) {
    std::printf("covered: %d/%d samples\n", report.samples, report.samples);
    return 0;
  }
  std::fprintf(stderr, "uncovered: %zu of %d samples\n",
               report.uncovered.size(), report.samples);
  int listed = 0;
  for (const auto& [tau, p] : report.uncovered) {
    if (listed++ >= 10) break;
    std::fprintf(stderr, "  t=%.6f at (%.9g, %.9g)\n", tau, p.x, p.y);
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Guard placement on weakly visible segments in simple polygons"};
  app.require_subcommand(1);

  std::string scene_path, out_path, svg_path, guards_path;
  bool with_trace = false;
  int samples = 0;
  std::uint64_t seed = 1;
  int vertices = 12;

  auto* classify = app.add_subcommand("classify", "Classify the segment pair");
  classify->add_option("scene", scene_path, "Scene JSON file")->required();

  auto* guards = app.add_subcommand("guards", "Compute the guard set");
  guards->add_option("scene", scene_path)->required();
  guards->add_option("--out", out_path, "Output JSON path (default stdout)");
  guards->add_flag("--trace", with_trace, "Include the iteration trace");
  guards->add_option("--samples", samples, "Also report coverage at N samples");

  auto* ar = app.add_subcommand("ar", "Print aspect-ratio quantities");
  ar->add_option("scene", scene_path)->required();

  auto* render = app.add_subcommand("render", "Render the scene as SVG");
  render->add_option("scene", scene_path)->required();
  render->add_option("--svg", svg_path, "SVG output path")->required();
  render->add_flag("--with-trace", with_trace, "Draw guards and sight lines");

  auto* gen = app.add_subcommand("gen", "Generate a random weakly visible scene");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--vertices", vertices, "Polygon vertex count (>= 4)")
      ->check(CLI::Range(4, 1000));
  gen->add_option("--out", out_path, "Scene output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Slice and verify coverage");
  verify->add_option("scene", scene_path)->required();
  verify->add_option("--samples", samples, "Sample count (default 10000)");
  verify->add_option("--guards", guards_path,
                     "Verify this guard JSON instead of slicing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(classify)) return cmd_classify(scene_path);
    if (app.got_subcommand(guards)) {
      return cmd_guards(scene_path, out_path, with_trace, samples);
    }
    if (app.got_subcommand(ar)) return cmd_ar(scene_path);
    if (app.got_subcommand(render)) {
      return cmd_render(scene_path, svg_path, with_trace);
    }
    if (app.got_subcommand(gen)) return cmd_gen(seed, vertices, out_path);
    if (app.got_subcommand(verify)) {
      return cmd_verify(scene_path, samples > 0 ? samples : 10000, guards_path);
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
