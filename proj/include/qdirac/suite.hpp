#pragma once

// Batch drivers behind the command-line front-end: solution catalogs, the
// verification suite, continuity convergence studies and packet density slices.

#include <optional>
#include <string>
#include <vector>

#include "qdirac/io.hpp"

namespace qdirac {

struct CheckResult {
  std::string name;
  std::string subject;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool informational = false;  // reported, never counted as a failure
};

struct VerifyReport {
  unsigned long long seed = 0;
  std::size_t sample_points = 0;
  Tolerances tolerances;
  std::vector<CheckResult> checks;
  std::optional<GramReport> gram;

  bool passed() const;
  std::size_t failures() const;
};

/// The eight massive solutions, or the four constant-Theta massless ones.
std::vector<PlaneWaveSolution> build_catalog(const SolutionConfig& c);

struct CatalogRecord {
  PlaneWaveSolution solution;
  double residual = 0.0;  // relative Dirac residual
  double density = 0.0;   // Psi^dagger Psi at the origin
  std::optional<double> adjoint_norm;
};

std::vector<CatalogRecord> run_catalog(const RunConfig& cfg);

/// Expected Gram matrix entry from the solution tags: components must agree
/// in every label they carry.
double expected_gram_entry(const PlaneWaveSolution& a, const PlaneWaveSolution& b, double volume);

VerifyReport run_verify(const RunConfig& cfg);

struct ContinuityLevel {
  double h = 0.0;
  ContinuityReport report;
};

struct ContinuityStudy {
  std::string field;
  std::vector<ContinuityLevel> levels;
  double order = 0.0;  // least-squares slope of log defect against log h
  bool source_free = true;
  bool converged = false;  // finest defect within tolerance, or order in [1.8, 2.2]
};

/// Least-squares slope of log(y) against log(x); NaN when any y is not positive.
double fitted_order(const std::vector<double>& x, const std::vector<double>& y);

ContinuityStudy run_continuity(const RunConfig& cfg);

struct PacketRow {
  FourVector x;
  double density = 0.0;
  double norm = 0.0;  // integral of the density over the slice at x.t
};

std::vector<PacketRow> run_packet(const RunConfig& cfg);

json to_json(const VerifyReport& r);
json to_json(const ContinuityStudy& s);

}  // namespace qdirac
