// Writes fixtures/: curve inputs for the named families plus the expected
// outputs, which come from closed forms rather than from running the code.
//
//   make_fixtures DIR

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>

#include "hyperlines/commands.hpp"
#include "hyperlines/sampling.hpp"

using namespace hyperlines;
namespace fs = std::filesystem;

namespace {

const Grid kGrid{1e-3, 41};

Json vec(const Vector& v) { return Json(std::vector<double>(v.data(), v.data() + v.size())); }

Json curve_json(const CurveInG& c) {
  Json samples = Json::array();
  for (const auto& l : c.lifts()) samples.push_back({{"p", vec(l.point.x)}, {"v", vec(l.dir)}});
  return {{"h", c.step()}, {"samples", samples}};
}

void write(const fs::path& p, const Json& j) {
  std::ofstream f(p);
  f << dump(j);
  if (!f) throw std::runtime_error("cannot write " + p.string());
}

// Expected classify output. Norms are constant along an orbit of a
// one-parameter group; offset is f(t) relative to the lift.
Json expected_classify(const std::string& metric, const char* label, double norm, double norm_mss,
                       double (*offset)(double)) {
  Json samples = Json::array();
  const std::size_t origin = kGrid.count / 2;
  for (std::size_t i = 1; i + 1 < kGrid.count; ++i) {
    const double t = kGrid.t(i);
    samples.push_back({{"index", i}, {"t", t}, {"label", label}, {"norm", norm}, {"norm_mss", norm_mss},
                       {"offset", offset(t)}});
  }
  Json counts = {{"Spacelike", 0}, {"Timelike", 0}, {"Null", 0}};
  counts[label] = kGrid.count - 2;
  return {{"command", "classify"}, {"metric", metric}, {"origin", origin}, {"counts", counts}, {"samples", samples},
          // FD stencils are O(h^2); the offset ODE is integrated to O(h^4).
          {"tolerance", 1e-5}};
}

double zero(double) { return 0.0; }
double minus_sin(double t) { return -std::sin(t); }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures DIR\n";
    return 2;
  }
  const fs::path dir = argv[1];
  fs::create_directories(dir / "expected");

  Vector u(2);
  u << 0.6, 0.8;
  Vector e1 = Vector::Unit(2, 0), e2 = Vector::Unit(2, 1);

  struct Family {
    const char* name;
    CurveInG curve;
    Json expected;
  };
  // |u| = 1: rotation -|y|^2, translation |x|^2, x = y null.
  const Family families[] = {
      {"rotation", rotation_family(u, kGrid), expected_classify("g1", "Timelike", -1.0, -1.0, zero)},
      {"relifted_rotation", relifted_rotation_family(u, kGrid),
       expected_classify("g1", "Timelike", -1.0, -1.0, minus_sin)},
      {"translation", translation_family(u, kGrid), expected_classify("g1", "Spacelike", 1.0, 1.0, zero)},
      {"g1_orbit", null_family(u, kGrid), expected_classify("g1", "Null", 0.0, 0.0, zero)},
      // x = e1, y = e2: null for g1, <ix, y> = 1 for g0.
      {"h_orbit_g0", h_family(e1, e2, kGrid), expected_classify("g0", "Spacelike", 1.0, 0.0, zero)},
  };
  for (const auto& f : families) {
    write(dir / (std::string(f.name) + ".json"), curve_json(f.curve));
    write(dir / "expected" / (std::string(f.name) + ".json"), f.expected);
  }

  const double pi = std::numbers::pi;
  write(dir / "geodesic_rotation.json", {{"x", {0.0, 0.0}}, {"y", {0.6, 0.8}}, {"s_max", 2 * pi}, {"steps", 16}});
  write(dir / "expected" / "geodesic_rotation.json",
        {{"periodic", true}, {"period", 2 * pi}, {"closure", 0.0}, {"tolerance", 1e-8}});
  write(dir / "geodesic_half.json", {{"x", {0.3, 0.4}}, {"y", {0.6, 0.8}}, {"steps", 16}});
  write(dir / "expected" / "geodesic_half.json",
        {{"periodic", true}, {"period", 2 * pi / std::sqrt(0.75)}, {"closure", 0.0}, {"tolerance", 1e-8}});
  write(dir / "geodesic_null.json", {{"x", {0.6, 0.8}}, {"y", {0.6, 0.8}}, {"steps", 16}});
  write(dir / "expected" / "geodesic_null.json", {{"periodic", false}, {"period", nullptr}, {"tolerance", 1e-8}});

  write(dir / "convert_point_dir.json", {{"p", {1.0, 0.0, 0.0, 0.0}}, {"v", {0.0, 1.0, 0.0, 0.0}}});
  write(dir / "expected" / "convert_point_dir.json",
        {{"pair", {{"minus", {-1.0, 0.0, 0.0}}, {"plus", {1.0, 0.0, 0.0}}}},
         {"minitwistor", {{"v", {1.0, 0.0, 0.0}}, {"x", {0.0, 0.0, 0.0}}}},
         {"tolerance", 1e-8}});
  write(dir / "convert_pair.json", {{"minus", {0.0, -1.0, 0.0}}, {"plus", {0.0, 1.0, 0.0}}});
  write(dir / "expected" / "convert_pair.json",
        {{"point_dir", {{"p", {1.0, 0.0, 0.0, 0.0}}, {"v", {0.0, 0.0, 1.0, 0.0}}}}, {"tolerance", 1e-8}});
  std::cout << "fixtures written to " << dir << "\n";
  return 0;
}
