#include "qdirac/io.hpp"

#include <cmath>
#include <initializer_list>
#include <limits>
#include <utility>

namespace qdirac {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ConfigError(path + ": " + what); }

std::string join_path(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

void expect_object(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(path.empty() ? "<root>" : path, "expected an object");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail(join_path(path, key), "unknown field");
  }
}

double as_double(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(path, "expected a finite number");
  return d;
}

bool as_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) fail(path, "expected true or false");
  return v.get<bool>();
}

std::size_t as_count(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(path, "expected a non-negative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

const std::string& as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get_ref<const std::string&>();
}

template <std::size_t N>
std::array<double, N> as_array(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != N) fail(path, "expected an array of " + std::to_string(N) + " numbers");
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = as_double(v[i], path + "[" + std::to_string(i) + "]");
  return out;
}

FourVector as_four(const json& v, const std::string& path) {
  const auto a = as_array<4>(v, path);
  return {a[0], a[1], a[2], a[3]};
}

Complex as_complex(const json& v, const std::string& path) {
  const auto a = as_array<2>(v, path);
  return {a[0], a[1]};
}

template <class E>
E as_enum(const json& v, const std::string& path, std::initializer_list<std::pair<const char*, E>> names) {
  const std::string& s = as_string(v, path);
  std::string options;
  for (const auto& [name, e] : names) {
    if (s == name) return e;
    options += options.empty() ? name : std::string(", ") + name;
  }
  fail(path, "expected one of " + options);
}

const json& required(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(join_path(path, key), "missing required field");
  return *it;
}

const json* optional_field(const json& obj, const std::string& key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

NormChoice parse_norm(const json& v, const std::string& path) {
  return as_enum<NormChoice>(v, path, {{"E", NormChoice::E}, {"E_over_m", NormChoice::E_over_m}});
}

SpinBasis parse_basis(const json& v, const std::string& path) {
  return as_enum<SpinBasis>(v, path, {{"z", SpinBasis::z}, {"helicity", SpinBasis::helicity}});
}

Spin parse_spin(const json& v, const std::string& path) {
  return as_enum<Spin>(v, path, {{"up", Spin::up}, {"down", Spin::down}});
}

Sign parse_sign(const json& v, const std::string& path) {
  return as_enum<Sign>(v, path, {{"+", Sign::plus}, {"-", Sign::minus}});
}

Chirality parse_chirality(const json& v, const std::string& path) {
  return as_enum<Chirality>(v, path, {{"L", Chirality::L}, {"R", Chirality::R}});
}

json vec3_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

std::string to_string(Spin s) { return s == Spin::up ? "up" : "down"; }
std::string to_string(Sign s) { return s == Sign::plus ? "+" : "-"; }
std::string to_string(Chirality c) { return c == Chirality::R ? "R" : "L"; }

}  // namespace

std::string to_string(NormChoice n) { return n == NormChoice::E ? "E" : "E_over_m"; }
std::string to_string(SpinBasis b) { return b == SpinBasis::z ? "z" : "helicity"; }

SolutionConfig parse_solution_config(const json& j, const std::string& path) {
  expect_object(j, path, {"massless", "m", "kvec0", "kvec1", "theta0", "norm_choice", "spin_basis"});
  SolutionConfig c;
  if (const json* v = optional_field(j, "massless")) c.massless = as_bool(*v, join_path(path, "massless"));
  if (!c.massless) {
    c.m = as_double(required(j, "m", path), join_path(path, "m"));
    if (!(c.m > 0.0)) fail(join_path(path, "m"), "mass must be > 0 unless massless is true");
  } else {
    c.m = 0.0;
    if (const json* v = optional_field(j, "m")) {
      if (as_double(*v, join_path(path, "m")) != 0.0) fail(join_path(path, "m"), "massless solutions need m = 0");
    }
  }
  c.kvec0 = as_array<3>(required(j, "kvec0", path), join_path(path, "kvec0"));
  c.kvec1 = as_array<3>(required(j, "kvec1", path), join_path(path, "kvec1"));
  c.theta0 = as_double(required(j, "theta0", path), join_path(path, "theta0"));
  if (const json* v = optional_field(j, "norm_choice")) c.norm_choice = parse_norm(*v, join_path(path, "norm_choice"));
  if (c.massless) c.norm_choice = NormChoice::E;
  if (const json* v = optional_field(j, "spin_basis")) c.spin_basis = parse_basis(*v, join_path(path, "spin_basis"));
  return c;
}

MassiveSpec parse_massive_spec(const json& j, const std::string& path) {
  expect_object(j, path,
                {"m", "theta0", "kvec0", "kvec1", "s0", "s1", "esign0", "esign1", "norm_choice", "spin_basis"});
  MassiveSpec s;
  s.m = as_double(required(j, "m", path), join_path(path, "m"));
  s.theta0 = as_double(required(j, "theta0", path), join_path(path, "theta0"));
  s.kvec0 = as_array<3>(required(j, "kvec0", path), join_path(path, "kvec0"));
  s.kvec1 = as_array<3>(required(j, "kvec1", path), join_path(path, "kvec1"));
  s.s0 = parse_spin(required(j, "s0", path), join_path(path, "s0"));
  s.s1 = parse_spin(required(j, "s1", path), join_path(path, "s1"));
  s.esign0 = parse_sign(required(j, "esign0", path), join_path(path, "esign0"));
  s.esign1 = parse_sign(required(j, "esign1", path), join_path(path, "esign1"));
  if (s.esign1 != flip(s.esign0)) fail(join_path(path, "esign1"), "must be opposite to esign0");
  if (const json* v = optional_field(j, "norm_choice")) s.norm_choice = parse_norm(*v, join_path(path, "norm_choice"));
  if (const json* v = optional_field(j, "spin_basis")) s.spin_basis = parse_basis(*v, join_path(path, "spin_basis"));
  return s;
}

MasslessThetaSpec parse_massless_theta_spec(const json& j, const std::string& path) {
  expect_object(j, path, {"theta", "kappa0", "kappa1", "theta0", "chirality0", "chirality1", "m"});
  MasslessThetaSpec s;
  s.theta = as_four(required(j, "theta", path), join_path(path, "theta"));
  s.kappa0 = as_double(required(j, "kappa0", path), join_path(path, "kappa0"));
  s.kappa1 = as_double(required(j, "kappa1", path), join_path(path, "kappa1"));
  if (const json* v = optional_field(j, "theta0")) s.theta0 = as_double(*v, join_path(path, "theta0"));
  if (const json* v = optional_field(j, "chirality0")) s.c0 = parse_chirality(*v, join_path(path, "chirality0"));
  if (const json* v = optional_field(j, "chirality1")) s.c1 = parse_chirality(*v, join_path(path, "chirality1"));
  return s;
}

SpacetimeGrid parse_grid(const json& j, const std::string& path) {
  expect_object(j, path, {"origin", "spacing", "counts", "periodic"});
  SpacetimeGrid g;
  if (const json* v = optional_field(j, "origin")) g.origin = as_four(*v, join_path(path, "origin"));
  g.spacing = as_array<4>(required(j, "spacing", path), join_path(path, "spacing"));
  const json& counts = required(j, "counts", path);
  if (!counts.is_array() || counts.size() != 4) fail(join_path(path, "counts"), "expected an array of 4 integers");
  for (std::size_t a = 0; a < 4; ++a) {
    g.counts[a] = as_count(counts[a], join_path(path, "counts") + "[" + std::to_string(a) + "]");
    if (g.counts[a] == 0) fail(join_path(path, "counts") + "[" + std::to_string(a) + "]", "must be >= 1");
    if (!(g.spacing[a] > 0.0)) fail(join_path(path, "spacing") + "[" + std::to_string(a) + "]", "must be > 0");
  }
  if (const json* v = optional_field(j, "periodic")) {
    if (!v->is_array() || v->size() != 4) fail(join_path(path, "periodic"), "expected an array of 4 booleans");
    for (std::size_t a = 0; a < 4; ++a) {
      g.periodic[a] = as_bool((*v)[a], join_path(path, "periodic") + "[" + std::to_string(a) + "]");
    }
  }
  return g;
}

WavePacketSpec parse_wave_packet(const json& j, const std::string& path) {
  expect_object(j, path, {"m", "theta0", "norm_choice", "spin_basis", "samples"});
  WavePacketSpec p;
  p.m = as_double(required(j, "m", path), join_path(path, "m"));
  if (!(p.m > 0.0)) fail(join_path(path, "m"), "wave packets need m > 0");
  if (const json* v = optional_field(j, "theta0")) p.theta0 = as_double(*v, join_path(path, "theta0"));
  if (const json* v = optional_field(j, "norm_choice")) p.norm_choice = parse_norm(*v, join_path(path, "norm_choice"));
  if (const json* v = optional_field(j, "spin_basis")) p.spin_basis = parse_basis(*v, join_path(path, "spin_basis"));
  const std::string spath = join_path(path, "samples");
  const json& samples = required(j, "samples", path);
  if (!samples.is_array() || samples.empty()) fail(spath, "expected a non-empty array");
  for (std::size_t n = 0; n < samples.size(); ++n) {
    const std::string sp = spath + "[" + std::to_string(n) + "]";
    const json& s = samples[n];
    expect_object(s, sp, {"alpha", "kvec", "amplitude", "spin", "esign", "k0"});
    PacketSample ps;
    if (const json* v = optional_field(s, "alpha")) {
      ps.alpha = static_cast<int>(as_count(*v, join_path(sp, "alpha")));
      if (ps.alpha > 1) fail(join_path(sp, "alpha"), "must be 0 or 1");
    }
    ps.kvec = as_array<3>(required(s, "kvec", sp), join_path(sp, "kvec"));
    if (const json* v = optional_field(s, "amplitude")) ps.amplitude = as_double(*v, join_path(sp, "amplitude"));
    if (const json* v = optional_field(s, "spin")) ps.spin = parse_spin(*v, join_path(sp, "spin"));
    if (const json* v = optional_field(s, "esign")) ps.esign = parse_sign(*v, join_path(sp, "esign"));
    if (const json* v = optional_field(s, "k0")) ps.k0 = as_double(*v, join_path(sp, "k0"));
    p.samples.push_back(ps);
  }
  return p;
}

RunConfig parse_run_config(const json& j) {
  expect_object(j, "", {"schema_version", "seed", "sample_points", "tolerances", "solution", "theta_family", "grid",
                        "packet", "continuity"});
  const json& version = required(j, "schema_version", "");
  if (!version.is_number_integer() || version.get<long long>() != kSchemaVersion) {
    fail("schema_version", "unsupported version (expected " + std::to_string(kSchemaVersion) + ")");
  }

  RunConfig c;
  if (const json* v = optional_field(j, "seed")) {
    if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<long long>() >= 0)) {
      fail("seed", "expected a non-negative integer");
    }
    c.seed = v->get<unsigned long long>();
  }
  if (const json* v = optional_field(j, "sample_points")) {
    c.sample_points = as_count(*v, "sample_points");
    if (c.sample_points == 0) fail("sample_points", "must be >= 1");
  }
  if (const json* v = optional_field(j, "tolerances")) {
    expect_object(*v, "tolerances", {"algebraic", "quadrature"});
    if (const json* t = optional_field(*v, "algebraic")) c.tolerances.algebraic = as_double(*t, "tolerances.algebraic");
    if (const json* t = optional_field(*v, "quadrature")) c.tolerances.quadrature = as_double(*t, "tolerances.quadrature");
    if (!(c.tolerances.algebraic > 0.0)) fail("tolerances.algebraic", "must be > 0");
    if (!(c.tolerances.quadrature > 0.0)) fail("tolerances.quadrature", "must be > 0");
  }
  if (const json* v = optional_field(j, "solution")) c.solution = parse_solution_config(*v, "solution");
  if (const json* v = optional_field(j, "theta_family")) {
    ThetaFamilyConfig t;
    t.spec = parse_massless_theta_spec(*v, "theta_family");
    if (const json* m = optional_field(*v, "m")) t.m = as_double(*m, "theta_family.m");
    c.theta_family = t;
  }
  if (const json* v = optional_field(j, "grid")) c.grid = parse_grid(*v, "grid");
  if (const json* v = optional_field(j, "packet")) c.packet = parse_wave_packet(*v, "packet");
  if (const json* v = optional_field(j, "continuity")) {
    expect_object(*v, "continuity", {"levels", "field", "b"});
    if (const json* l = optional_field(*v, "levels")) c.continuity.levels = as_count(*l, "continuity.levels");
    if (const json* f = optional_field(*v, "field")) {
      c.continuity.field = as_string(*f, "continuity.field");
      if (c.continuity.field != "packet" && c.continuity.field != "solution" && c.continuity.field != "theta") {
        fail("continuity.field", "expected one of packet, solution, theta");
      }
    }
    if (const json* b = optional_field(*v, "b")) {
      if (!b->is_array() || b->size() != 4) fail("continuity.b", "expected 4 complex numbers [re, im]");
      for (std::size_t l = 0; l < 4; ++l) {
        c.continuity.b[l] = as_complex((*b)[l], "continuity.b[" + std::to_string(l) + "]");
      }
    }
  }
  return c;
}

json to_json(const FourVector& v) { return json::array({v.t, v.x, v.y, v.z}); }

json to_json(const CSpinor4& u) {
  json a = json::array();
  for (std::size_t i = 0; i < 4; ++i) a.push_back(complex_json(u[i]));
  return a;
}

json to_json(const SolutionConfig& c) {
  json j{{"massless", c.massless},         {"m", c.m},
         {"kvec0", vec3_json(c.kvec0)},    {"kvec1", vec3_json(c.kvec1)},
         {"theta0", c.theta0},             {"norm_choice", to_string(c.norm_choice)},
         {"spin_basis", to_string(c.spin_basis)}};
  return j;
}

json to_json(const MassiveSpec& s) {
  return json{{"m", s.m},
              {"theta0", s.theta0},
              {"kvec0", vec3_json(s.kvec0)},
              {"kvec1", vec3_json(s.kvec1)},
              {"s0", to_string(s.s0)},
              {"s1", to_string(s.s1)},
              {"esign0", to_string(s.esign0)},
              {"esign1", to_string(s.esign1)},
              {"norm_choice", to_string(s.norm_choice)},
              {"spin_basis", to_string(s.spin_basis)}};
}

json to_json(const MasslessThetaSpec& s) {
  return json{{"theta", to_json(s.theta)},
              {"kappa0", s.kappa0},
              {"kappa1", s.kappa1},
              {"theta0", s.theta0},
              {"chirality0", to_string(s.c0)},
              {"chirality1", to_string(s.c1)}};
}

json to_json(const SpacetimeGrid& g) {
  return json{{"origin", to_json(g.origin)},
              {"spacing", g.spacing},
              {"counts", g.counts},
              {"periodic", g.periodic}};
}

json to_json(const WavePacketSpec& p) {
  json samples = json::array();
  for (const auto& s : p.samples) {
    json js{{"alpha", s.alpha},
            {"kvec", vec3_json(s.kvec)},
            {"amplitude", s.amplitude},
            {"spin", to_string(s.spin)},
            {"esign", to_string(s.esign)}};
    if (s.k0) js["k0"] = *s.k0;
    samples.push_back(std::move(js));
  }
  return json{{"m", p.m},
              {"theta0", p.theta0},
              {"norm_choice", to_string(p.norm_choice)},
              {"spin_basis", to_string(p.spin_basis)},
              {"samples", std::move(samples)}};
}

json to_json(const RunConfig& c) {
  json j{{"schema_version", kSchemaVersion},
         {"seed", c.seed},
         {"sample_points", c.sample_points},
         {"tolerances", {{"algebraic", c.tolerances.algebraic}, {"quadrature", c.tolerances.quadrature}}}};
  if (c.solution) j["solution"] = to_json(*c.solution);
  if (c.theta_family) {
    j["theta_family"] = to_json(c.theta_family->spec);
    j["theta_family"]["m"] = c.theta_family->m;
  }
  if (c.grid) j["grid"] = to_json(*c.grid);
  if (c.packet) j["packet"] = to_json(*c.packet);
  json b = json::array();
  for (const auto& v : c.continuity.b) b.push_back(complex_json(v));
  j["continuity"] = {{"levels", c.continuity.levels}, {"b", std::move(b)}};
  if (!c.continuity.field.empty()) j["continuity"]["field"] = c.continuity.field;
  return j;
}

json to_json(const PlaneWaveSolution& s) {
  json j{{"label", s.label()},
         {"mass", s.mass()},
         {"theta0", s.theta0()},
         {"k0", to_json(s.k0())},
         {"k1", to_json(s.k1())},
         {"theta", to_json(s.theta())},
         {"u0", to_json(s.u0())},
         {"u1", to_json(s.u1())}};
  const SolutionTags& t = s.tags();
  if (t.s0) j["spin0"] = to_string(*t.s0);
  if (t.s1) j["spin1"] = to_string(*t.s1);
  if (t.e0) j["esign0"] = to_string(*t.e0);
  if (t.e1) j["esign1"] = to_string(*t.e1);
  if (t.c0) j["chirality0"] = to_string(*t.c0);
  if (t.c1) j["chirality1"] = to_string(*t.c1);
  return j;
}

json to_json(const GramReport& g) {
  json rows = json::array();
  for (std::size_t r = 0; r < g.n; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < g.n; ++c) row.push_back(g(r, c));
    rows.push_back(std::move(row));
  }
  return json{{"labels", g.labels},
              {"matrix", std::move(rows)},
              {"tolerance", g.tolerance},
              {"max_offdiag", g.max_offdiag},
              {"min_diag", g.min_diag},
              {"offdiag_ratio", g.offdiag_ratio()},
              {"symmetry_defect", g.symmetry_defect}};
}

json to_json(const ContinuityReport& r) {
  return json{{"grid", to_json(r.grid)},
              {"lhs_norm", r.lhs_norm},
              {"rhs_norm", r.rhs_norm},
              {"defect", r.defect},
              {"interior_points", r.interior_points}};
}

}  // namespace qdirac
