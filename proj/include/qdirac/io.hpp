#pragma once

// JSON schema (schema_version 1) for solution specs, grids, wave packets and
// run configurations, plus report serialisation.
//
// Config layout:
//   {
//     "schema_version": 1,
//     "seed": 7,                                  optional
//     "sample_points": 32,                        optional
//     "tolerances": {"algebraic": 1e-12, "quadrature": 1e-10},
//     "solution": {"massless": false, "m": 1, "kvec0": [0,0,1], "kvec1": [0,0,1],
//                  "theta0": 0.5, "norm_choice": "E_over_m", "spin_basis": "z"},
//     "theta_family": {"theta": [1,0,0,1], "kappa0": 3, "kappa1": 1, "theta0": 0,
//                      "chirality0": "R", "chirality1": "L", "m": 0},
//     "grid": {"origin": [0,0,0,0], "spacing": [..4], "counts": [..4], "periodic": [..4]},
//     "packet": {"m": 1, "theta0": 0, "norm_choice": "E_over_m", "spin_basis": "z",
//                "samples": [{"alpha": 0, "kvec": [0,0,1], "amplitude": 1,
//                             "spin": "up", "esign": "+", "k0": -1.414}]},
//     "continuity": {"levels": 3, "field": "packet", "b": [[0,0],[0,0],[0,0],[0,0]]}
//   }
//
// Angles are radians, momenta 3-arrays, four-vectors [t, x, y, z], complex
// numbers [re, im]. Parse failures throw ConfigError naming the field path.

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qdirac/errors.hpp"
#include "qdirac/grid.hpp"
#include "qdirac/solutions.hpp"
#include "qdirac/verify.hpp"

namespace qdirac {

inline constexpr int kSchemaVersion = 1;

using nlohmann::json;

/// Base parameters of a solution catalog.
struct SolutionConfig {
  bool massless = false;
  double m = 1.0;
  Vec3 kvec0{0.0, 0.0, 1.0};
  Vec3 kvec1{0.0, 0.0, 1.0};
  double theta0 = 0.0;
  NormChoice norm_choice = NormChoice::E_over_m;
  SpinBasis spin_basis = SpinBasis::z;
};

struct ThetaFamilyConfig {
  MasslessThetaSpec spec;
  double m = 0.0;
};

struct ContinuityConfig {
  std::size_t levels = 3;
  std::string field;  // "packet", "solution" or "theta"; empty picks packet when present
  std::array<Complex, 4> b{};
};

struct RunConfig {
  unsigned long long seed = 1;
  std::size_t sample_points = 32;
  Tolerances tolerances;
  std::optional<SolutionConfig> solution;
  std::optional<ThetaFamilyConfig> theta_family;
  std::optional<SpacetimeGrid> grid;
  std::optional<WavePacketSpec> packet;
  ContinuityConfig continuity;
};

RunConfig parse_run_config(const json& j);
json to_json(const RunConfig& c);

SolutionConfig parse_solution_config(const json& j, const std::string& path);
MassiveSpec parse_massive_spec(const json& j, const std::string& path);
MasslessThetaSpec parse_massless_theta_spec(const json& j, const std::string& path);
SpacetimeGrid parse_grid(const json& j, const std::string& path);
WavePacketSpec parse_wave_packet(const json& j, const std::string& path);

json to_json(const SolutionConfig& c);
json to_json(const MassiveSpec& s);
json to_json(const MasslessThetaSpec& s);
json to_json(const SpacetimeGrid& g);
json to_json(const WavePacketSpec& p);
json to_json(const FourVector& v);
json to_json(const CSpinor4& u);
json to_json(const PlaneWaveSolution& s);
json to_json(const GramReport& g);
json to_json(const ContinuityReport& r);

std::string to_string(NormChoice n);
std::string to_string(SpinBasis b);

}  // namespace qdirac
