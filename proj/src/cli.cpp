#include "qdirac/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "qdirac/suite.hpp"

namespace qdirac {

namespace {

struct Options {
  std::string command;
  std::string config;
  std::string out;
  std::string format;
  std::optional<double> tol;
  std::optional<unsigned long long> seed;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

RunConfig load_config(const Options& o) {
  std::ifstream in(o.config, std::ios::binary);
  if (!in) throw ConfigError("--config: cannot read " + o.config);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config: malformed JSON (" + std::string(e.what()) + ")");
  }
  RunConfig cfg = parse_run_config(j);
  if (o.seed) cfg.seed = *o.seed;
  if (o.tol) {
    if (!(*o.tol > 0.0) || !std::isfinite(*o.tol)) throw ConfigError("--tol: must be a positive number");
    cfg.tolerances.algebraic = *o.tol;
    cfg.tolerances.quadrature = *o.tol;
  }
  return cfg;
}

std::string header(const std::string& command, const RunConfig& cfg) {
  return "# qdirac " + command + " schema_version=" + std::to_string(kSchemaVersion) +
         " seed=" + std::to_string(cfg.seed) + "\n";
}

json header_json(const std::string& command, const RunConfig& cfg) {
  return json{{"command", command}, {"schema_version", kSchemaVersion}, {"seed", cfg.seed}};
}

std::string catalog_report(const std::vector<CatalogRecord>& recs, const RunConfig& cfg, const std::string& fmt) {
  if (fmt == "json") {
    json j = header_json("catalog", cfg);
    json arr = json::array();
    for (const auto& r : recs) {
      json rj = to_json(r.solution);
      rj["residual"] = r.residual;
      rj["density"] = r.density;
      if (r.adjoint_norm) rj["adjoint_norm"] = *r.adjoint_norm;
      arr.push_back(std::move(rj));
    }
    j["records"] = std::move(arr);
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  if (fmt == "csv") {
    s << header("catalog", cfg);
    s << "label,theta0,mass";
    for (const char* k : {"k0", "k1", "theta"})
      for (const char* c : {"t", "x", "y", "z"}) s << ',' << k << '_' << c;
    for (const char* u : {"u0", "u1"})
      for (int i = 0; i < 4; ++i) s << ',' << u << '_' << i << "_re," << u << '_' << i << "_im";
    s << ",residual,density,adjoint_norm\n";
    for (const auto& r : recs) {
      const PlaneWaveSolution& p = r.solution;
      s << p.label() << ',' << num(p.theta0()) << ',' << num(p.mass());
      for (const FourVector* v : {&p.k0(), &p.k1(), &p.theta()})
        for (std::size_t mu = 0; mu < 4; ++mu) s << ',' << num((*v)[mu]);
      for (const CSpinor4* u : {&p.u0(), &p.u1()})
        for (std::size_t i = 0; i < 4; ++i) s << ',' << num((*u)[i].real()) << ',' << num((*u)[i].imag());
      s << ',' << num(r.residual) << ',' << num(r.density) << ',' << (r.adjoint_norm ? num(*r.adjoint_norm) : "");
      s << '\n';
    }
    return s.str();
  }
  s << header("catalog", cfg);
  s << std::left << std::setw(12) << "label" << std::setw(12) << "residual" << std::setw(22) << "density"
    << "adjoint_norm\n";
  for (const auto& r : recs) {
    s << std::left << std::setw(12) << r.solution.label() << std::setw(12) << sci(r.residual) << std::setw(22)
      << num(r.density) << (r.adjoint_norm ? num(*r.adjoint_norm) : "-") << '\n';
  }
  return s.str();
}

std::string gram_csv(const GramReport& g) {
  std::ostringstream s;
  for (std::size_t i = 0; i < g.n; ++i) s << (i ? "," : "") << g.labels[i];
  s << '\n';
  for (std::size_t r = 0; r < g.n; ++r) {
    for (std::size_t c = 0; c < g.n; ++c) s << (c ? "," : "") << num(g(r, c));
    s << '\n';
  }
  return s.str();
}

std::string gram_path(const std::string& out) {
  std::filesystem::path p(out);
  return (p.parent_path() / (p.stem().string() + ".gram.csv")).string();
}

std::string verify_report(const VerifyReport& rep, const RunConfig& cfg, const std::string& fmt,
                          const std::string& out) {
  if (fmt == "json") {
    json j = to_json(rep);
    j["schema_version"] = kSchemaVersion;
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  if (fmt == "csv") {
    s << header("verify", cfg);
    s << "name,subject,measured,tolerance,passed,informational\n";
    for (const auto& c : rep.checks) {
      s << c.name << ',' << c.subject << ',' << num(c.measured) << ',' << num(c.tolerance) << ','
        << (c.passed ? 1 : 0) << ',' << (c.informational ? 1 : 0) << '\n';
    }
    if (rep.gram) {
      if (out.empty()) {
        s << '\n' << gram_csv(*rep.gram);
      } else {
        write_atomic(gram_path(out), gram_csv(*rep.gram));
      }
    }
    return s.str();
  }
  s << header("verify", cfg);
  for (const auto& c : rep.checks) {
    const char* tag = c.informational ? "INFO" : c.passed ? "PASS" : "FAIL";
    s << std::left << std::setw(5) << tag << std::setw(20) << c.name << std::setw(14) << c.subject << sci(c.measured)
      << " <= " << sci(c.tolerance) << '\n';
  }
  s << (rep.passed() ? "all checks passed" : std::to_string(rep.failures()) + " check(s) failed") << '\n';
  return s.str();
}

std::string continuity_report(const ContinuityStudy& st, const RunConfig& cfg, const std::string& fmt) {
  if (fmt == "json") {
    json j = to_json(st);
    j["seed"] = cfg.seed;
    j["schema_version"] = kSchemaVersion;
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  s << header("continuity", cfg);
  s << "# field=" << st.field << " order=" << num(st.order) << " converged=" << (st.converged ? 1 : 0) << '\n';
  if (fmt == "csv") {
    s << "level,h,lhs,rhs,defect,interior_points\n";
    for (std::size_t l = 0; l < st.levels.size(); ++l) {
      const auto& r = st.levels[l].report;
      s << l << ',' << num(st.levels[l].h) << ',' << num(r.lhs_norm) << ',' << num(r.rhs_norm) << ','
        << num(r.defect) << ',' << r.interior_points << '\n';
    }
    return s.str();
  }
  s << std::left << std::setw(7) << "level" << std::setw(12) << "h" << std::setw(12) << "lhs" << std::setw(12) << "rhs"
    << "defect\n";
  for (std::size_t l = 0; l < st.levels.size(); ++l) {
    const auto& r = st.levels[l].report;
    s << std::left << std::setw(7) << l << std::setw(12) << sci(st.levels[l].h) << std::setw(12) << sci(r.lhs_norm)
      << std::setw(12) << sci(r.rhs_norm) << sci(r.defect) << '\n';
  }
  return s.str();
}

std::string packet_report(const std::vector<PacketRow>& rows, const RunConfig& cfg, const std::string& fmt) {
  if (fmt == "json") {
    json j = header_json("packet", cfg);
    j["columns"] = {"t", "x", "y", "z", "density", "norm"};
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({r.x.t, r.x.x, r.x.y, r.x.z, r.density, r.norm});
    j["rows"] = std::move(arr);
    return j.dump() + "\n";
  }
  const char sep = fmt == "csv" ? ',' : ' ';
  std::ostringstream s;
  s << header("packet", cfg);
  s << "t" << sep << "x" << sep << "y" << sep << "z" << sep << "density" << sep << "norm\n";
  for (const auto& r : rows) {
    s << num(r.x.t) << sep << num(r.x.x) << sep << num(r.x.y) << sep << num(r.x.z) << sep << num(r.density) << sep
      << num(r.norm) << '\n';
  }
  return s.str();
}

int execute(const Options& o, std::ostream& out) {
  const RunConfig cfg = load_config(o);
  const std::string fmt = !o.format.empty() ? o.format : o.command == "packet" ? "csv" : "json";
  std::string report;
  int code = kExitOk;
  if (o.command == "catalog") {
    report = catalog_report(run_catalog(cfg), cfg, fmt);
  } else if (o.command == "verify") {
    const VerifyReport rep = run_verify(cfg);
    report = verify_report(rep, cfg, fmt, o.out);
    if (!rep.passed()) code = kExitVerify;
  } else if (o.command == "continuity") {
    const ContinuityStudy st = run_continuity(cfg);
    report = continuity_report(st, cfg, fmt);
    if (!st.converged) code = kExitVerify;
  } else {
    report = packet_report(run_packet(cfg), cfg, fmt);
  }
  if (o.out.empty()) {
    out << report;
  } else {
    write_atomic(o.out, report);
  }
  return code;
}

}  // namespace

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("--out: cannot write " + path);
    f << content;
    f.flush();
    if (!f) throw ConfigError("--out: write failed for " + path);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw ConfigError("--out: cannot rename onto " + path);
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free-particle solutions of the quaternionic Dirac equation", "qdirac"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<const char*, const char*>> commands{
      {"catalog", "Build and certify the solution catalog"},
      {"verify", "Run the verification suite"},
      {"continuity", "Finite-difference continuity convergence study"},
      {"packet", "Density slices of a wave packet"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", o.config, "JSON config path")->required();
    sub->add_option("--out", o.out, "Output path (stdout when omitted)");
    sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--tol", o.tol, "Override both tolerances");
    sub->add_option("--seed", o.seed, "Seed for randomized sample points");
    sub->callback([&o, n = std::string(name)] { o.command = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    return execute(o, out);
  } catch (const CertificationError& e) {
    err << "qdirac: certification failure: " << e.what() << '\n';
    return kExitCertification;
  } catch (const ConfigError& e) {
    err << "qdirac: " << e.what() << '\n';
    return kExitConfig;
  } catch (const OffShellError& e) {
    err << "qdirac: off-shell input: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "qdirac: invalid input: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "qdirac: internal error: " << e.what() << '\n';
    return kExitCertification;
  }
}

}  // namespace qdirac
