// regge: command-line front end. Every command prints one JSON object per line.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "regge/regge.hpp"

using nlohmann::json;
using namespace regge;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json surd_json(const SignedSqrt& s) {
  return {{"sign", s.sign()},
          {"square_num", s.square().get_num().get_str()},
          {"square_den", s.square().get_den().get_str()},
          {"float", s.to_double()}};
}

json labels_json(const SixJLabels& l) {
  const auto v = l.as_array();
  return json(std::vector<long>(v.begin(), v.end()));
}

json complex_json(const std::complex<double>& z) { return {{"re", z.real()}, {"im", z.imag()}}; }
json complex_json(const GaussianRational& z) { return {{"re", to_string(z.re)}, {"im", to_string(z.im)}}; }
json complex_json(const MpComplex& z, int digits) {
  return {{"re", to_decimal(z.re, digits)}, {"im", to_decimal(z.im, digits)}};
}

json real_json(double x) { return x; }
json real_json(const BigRational& x) { return to_string(x); }

template <class T>
json lengths_json(const EdgeLengths<T>& l) {
  json out = json::object();
  const char* names = "abcdef";
  const auto v = l.as_array();
  for (std::size_t i = 0; i < 6; ++i) out[std::string(1, names[i])] = real_json(v[i]);
  return out;
}

template <class S>
json matrix_json(const Mat2<S>& m) {
  return json::array({json::array({complex_json(m.m00), complex_json(m.m01)}),
                      json::array({complex_json(m.m10), complex_json(m.m11)})});
}

template <class S>
json coords_json(const TraceCoords<S>& c) {
  json th = json::array();
  for (const auto& x : c.theta) th.push_back(complex_json(x));
  return {{"theta", th},
          {"lambda12", complex_json(c.lambda12)},
          {"lambda23", complex_json(c.lambda23)},
          {"lambda13", complex_json(c.lambda13)},
          {"tau", complex_json(c.tau)},
          {"tau_prime", complex_json(c.tau_prime)}};
}

template <class S>
json triple_json(const MatrixTriple<S>& t) {
  return json::array({matrix_json(t.a1), matrix_json(t.a2), matrix_json(t.a3)});
}

json report_json(const Report& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"key", f.key}, {"detail", f.detail}});
  json config = json::object(), stats = json::object();
  for (const auto& [k, v] : r.config) config[k] = v;
  for (const auto& [k, v] : r.stats) stats[k] = v;
  return {{"suite", r.suite},     {"pass", r.pass()},          {"instances", r.instances},
          {"skipped", r.skipped}, {"failures", failures},      {"max_deviation", r.max_deviation},
          {"config", config},     {"stats", stats}};
}

SixJLabels parse_labels(const std::vector<long>& v) {
  if (v.size() != 6) throw UsageError("expected six labels");
  for (long x : v)
    if (x < 0) throw UsageError("labels must be nonnegative");
  return SixJLabels::from_array({v[0], v[1], v[2], v[3], v[4], v[5]});
}

BigRational parse_q(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const Error&) {
    throw UsageError("not a rational number: " + s);
  }
}

double parse_d(const std::string& s) { return parse_q(s).get_d(); }

/// "re" or "re,im".
std::pair<std::string, std::string> split_complex(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return {s, "0"};
  return {s.substr(0, comma), s.substr(comma + 1)};
}

GaussianRational parse_gq(const std::string& s) {
  const auto [re, im] = split_complex(s);
  return {parse_q(re), parse_q(im)};
}

std::complex<double> parse_cd(const std::string& s) {
  const auto [re, im] = split_complex(s);
  return {parse_d(re), parse_d(im)};
}

MpComplex parse_mp(const std::string& s) {
  const auto [re, im] = split_complex(s);
  try {
    return {Real(re), Real(im)};
  } catch (const std::exception&) {
    throw UsageError("not a number: " + s);
  }
}

template <class T>
EdgeLengths<T> parse_lengths(const std::vector<std::string>& v, T (*conv)(const std::string&)) {
  if (v.size() != 6) throw UsageError("expected six lengths a b c d e f");
  std::array<T, 6> a{};
  for (std::size_t i = 0; i < 6; ++i) a[i] = conv(v[i]);
  return EdgeLengths<T>::from_array(a);
}

BigRational q_conv(const std::string& s) { return parse_q(s); }
double d_conv(const std::string& s) { return parse_d(s); }

template <class S>
MatrixTriple<S> parse_triple(const std::vector<std::string>& vectors, const std::vector<std::string>& entries,
                             S (*conv)(const std::string&)) {
  using R = real_of_t<S>;
  if (!vectors.empty()) {
    if (vectors.size() != 9) throw UsageError("--vectors takes nine numbers");
    std::array<Vec3<R>, 3> v{};
    for (std::size_t i = 0; i < 9; ++i) v[i / 3][i % 3] = real_part(conv(vectors[i]));
    return hermitian_triple(v[0], v[1], v[2]);
  }
  if (entries.size() != 12) throw UsageError("give --vectors (9 numbers) or --entries (12 complex entries)");
  std::array<Mat2<S>, 3> m{};
  for (std::size_t i = 0; i < 3; ++i)
    m[i] = {conv(entries[4 * i]), conv(entries[4 * i + 1]), conv(entries[4 * i + 2]), conv(entries[4 * i + 3])};
  for (const auto& a : m)
    if (!same_value(a.trace(), S(0), 1e-12)) throw UsageError("residue matrices must be traceless");
  MatrixTriple<S> t{m[0], m[1], m[2], false};
  t.hermitian = is_hermitian(t.a1) && is_hermitian(t.a2) && is_hermitian(t.a3);
  return t;
}

std::complex<double> cd_conv(const std::string& s) { return parse_cd(s); }
GaussianRational gq_conv(const std::string& s) { return parse_gq(s); }

struct Output {
  std::string path;
  void emit(const json& j) const {
    const std::string line = j.dump();
    if (path.empty()) {
      std::cout << line << "\n";
      return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << line << "\n";
  }
};

struct Options {
  std::vector<long> labels;
  std::vector<std::string> values;
  std::string suite;
  std::optional<long> max;
  std::optional<long> samples;
  std::optional<long> exact_samples;
  std::uint64_t seed = 1;
  bool seed_given = false;
  unsigned precision_bits = 60;
  std::size_t order = 16;
  bool exact = false;
  bool floating = false;
  std::vector<std::string> theta;
  std::string t0 = "3", y0 = "2", y1 = "0";
  std::vector<std::string> vectors, entries, coords;
  std::vector<int> signs{1, 1, 1, 1};
};

int cmd_sixj(const Options& o, const Output& out) {
  const SixJLabels l = parse_labels(o.labels);
  json failing = json::array();
  for (const auto& name : failing_triads(l)) failing.push_back(name);
  const SignedSqrt v = sixj(l);
  json j = {{"command", "sixj"},
            {"labels", labels_json(l)},
            {"valid", is_valid(l)},
            {"failing_triads", failing},
            {"value", surd_json(v)},
            {"float", v.to_double()}};
  if (is_valid(l)) j["u"] = surd_json(u_coeff(l));
  out.emit(j);
  return 0;
}

int cmd_u(const Options& o, const Output& out) {
  const SixJLabels l = parse_labels(o.labels);
  const SignedSqrt racah = u_coeff(l), oracle = u_oracle(l);
  out.emit({{"command", "u"},
            {"labels", labels_json(l)},
            {"valid", is_valid(l)},
            {"racah", surd_json(racah)},
            {"oracle", surd_json(oracle)},
            {"abs_equal", racah.abs() == oracle.abs()}});
  return 0;
}

int cmd_orbit(const Options& o, const Output& out) {
  const SixJLabels l = parse_labels(o.labels);
  if (!is_valid(l)) throw UsageError("labels " + l.to_string() + " do not form a 6j symbol");
  const auto orbit = symmetry_orbit(l);
  const SignedSqrt v = sixj(l);
  bool constant = true;
  json members = json::array();
  for (const auto& m : orbit) {
    members.push_back(labels_json(m));
    if (!(sixj(m) == v)) constant = false;
  }
  out.emit({{"command", "orbit"},
            {"labels", labels_json(l)},
            {"size", orbit.size()},
            {"members", members},
            {"value", surd_json(v)},
            {"constant", constant}});
  return constant ? 0 : 1;
}

int cmd_verify(const Options& o, const Output& out) {
  const std::uint64_t seed = o.seed_given ? o.seed : (o.suite == "backlund" ? 7 : 1);
  Report r;
  const std::string& s = o.suite;
  if (s == "regge")
    r = verify_regge(o.max.value_or(8));
  else if (s == "orbit")
    r = verify_orbit(o.max.value_or(8));
  else if (s == "orthogonality")
    r = verify_orthogonality(o.max.value_or(8));
  else if (s == "oracle")
    r = verify_oracle(o.max.value_or(6));
  else if (s == "u3")
    r = verify_u3(o.max.value_or(5));
  else if (s == "duality")
    r = verify_duality(o.max.value_or(4));
  else if (s == "dimension")
    r = verify_dimension(o.max.value_or(5));
  else if (s == "cm")
    r = verify_cm(o.samples.value_or(1000), seed);
  else if (s == "lemma")
    r = verify_lemma(o.samples.value_or(500), seed);
  else if (s == "theorem")
    r = verify_theorem(o.samples.value_or(500), o.exact_samples.value_or(50), seed);
  else if (s == "backlund")
    r = verify_backlund(o.samples.value_or(20), seed, o.precision_bits, o.order);
  else if (s == "spherical")
    r = verify_spherical(o.samples.value_or(500), seed);
  else
    throw UsageError("unknown suite " + s);
  out.emit(report_json(r));
  return r.pass() ? 0 : 1;
}

int cmd_tetra(const std::string& verb, const Options& o, const Output& out) {
  json j = {{"command", "tetra " + verb}};
  if (verb == "realize") {
    const auto l = parse_lengths<double>(o.values, d_conv);
    const auto v = realize_from_lengths(l);
    json vs = json::array();
    for (const auto& x : v) vs.push_back(json::array({x[0], x[1], x[2]}));
    j["vectors"] = vs;
    j["lengths"] = lengths_json(edge_lengths(phi_embed(v[0]), phi_embed(v[1]), phi_embed(v[2])));
  } else if (o.floating) {
    const auto l = parse_lengths<double>(o.values, d_conv);
    j["mode"] = "float";
    j["lengths"] = lengths_json(l);
    if (verb == "cm") {
      j["det"] = cayley_menger_det(l);
      j["euclidean"] = is_euclidean_tetra(l);
    } else {
      const auto g = regge_lengths(l);
      j["regge"] = lengths_json(g);
      j["det"] = cayley_menger_det(l);
      j["det_regge"] = cayley_menger_det(g);
      j["euclidean"] = is_euclidean_tetra(l);
      j["euclidean_regge"] = is_euclidean_tetra(g);
    }
  } else {
    const auto l = parse_lengths<BigRational>(o.values, q_conv);
    j["mode"] = "exact";
    j["lengths"] = lengths_json(l);
    if (verb == "cm") {
      j["det"] = to_string(cayley_menger_det(l));
      j["euclidean"] = is_euclidean_tetra(l);
    } else {
      const auto g = regge_lengths(l);
      j["regge"] = lengths_json(g);
      j["det"] = to_string(cayley_menger_det(l));
      j["det_regge"] = to_string(cayley_menger_det(g));
      j["euclidean"] = is_euclidean_tetra(l);
      j["euclidean_regge"] = is_euclidean_tetra(g);
    }
  }
  out.emit(j);
  return 0;
}

int cmd_pvi(const std::string& verb, const Options& o, const Output& out) {
  PrecisionScope scope(o.precision_bits);
  const int digits = static_cast<int>(digits10_for_bits(o.precision_bits));
  if (o.theta.size() != 4) throw UsageError("--theta takes four values");
  ThetaParams th;
  for (std::size_t i = 0; i < 4; ++i) th[i] = parse_mp(o.theta[i]);
  const MpComplex t0 = parse_mp(o.t0);
  const MpSeries y = series_solution(t0, parse_mp(o.y0), parse_mp(o.y1), params_from_theta(th), o.order);
  auto series_out = [&](const MpSeries& s) {
    json c = json::array();
    for (const auto& x : s.coefficients()) c.push_back(complex_json(x, digits));
    return c;
  };
  auto theta_out = [&](const ThetaParams& t) {
    json a = json::array();
    for (const auto& x : t.theta) a.push_back(complex_json(x, digits));
    return a;
  };
  json j = {{"command", "pvi " + verb},
            {"precision_bits", o.precision_bits},
            {"order", o.order},
            {"theta", theta_out(th)},
            {"t0", complex_json(t0, digits)},
            {"coefficients", series_out(y)}};
  if (verb == "okamoto") {
    const auto [yh, thp] = okamoto_transform(y, th);
    j["x"] = series_out(x_series(y, th));
    j["theta_prime"] = theta_out(thp);
    j["transformed"] = series_out(yh);
    const Real res = max_relative_residual(yh, params_from_theta(thp), Real(0.05), 5, o.order);
    j["max_relative_residual"] = static_cast<double>(res);
  } else {
    const Real res = max_relative_residual(y, params_from_theta(th), Real(0.05), 5, o.order);
    j["max_relative_residual"] = static_cast<double>(res);
  }
  out.emit(j);
  return 0;
}

template <class S>
int fuchs_run(const std::string& verb, const Options& o, const Output& out, S (*conv)(const std::string&)) {
  json j = {{"command", "fuchs " + verb}, {"mode", is_exact_v<S> ? "exact" : "float"}};
  if (verb == "reconstruct") {
    if (o.coords.size() != 7) throw UsageError("--coords takes theta1..theta4 lambda12 lambda23 tau");
    TraceCoords<S> c;
    for (std::size_t i = 0; i < 4; ++i) c.theta[i] = conv(o.coords[i]);
    c.lambda12 = conv(o.coords[4]);
    c.lambda23 = conv(o.coords[5]);
    c.tau = conv(o.coords[6]);
    c.lambda13 = lambda13_from(c.theta, c.lambda12, c.lambda23);
    if (is_zero_value(c.tau, 0)) throw UsageError("tau must be nonzero");
    c.tau_prime = c.lambda12 * c.lambda23 * c.lambda13 / c.tau;
    const auto t = reconstruct(c);
    j["coords"] = coords_json(c);
    j["triple"] = triple_json(t);
    j["roundtrip"] = coords_json(coordinates_with_theta(t, c.theta));
    out.emit(j);
    return 0;
  }
  const MatrixTriple<S> t = parse_triple<S>(o.vectors, o.entries, conv);
  std::array<int, 4> signs{};
  if (o.signs.size() != 4) throw UsageError("--signs takes four values");
  for (std::size_t i = 0; i < 4; ++i) signs[i] = o.signs[i];
  const auto c = coordinates(t, signs);
  j["hermitian"] = t.hermitian;
  j["coords"] = coords_json(c);
  if (verb == "coords") {
    out.emit(j);
    return 0;
  }
  const auto shifted = okamoto_coords(c);
  j["okamoto"] = coords_json(shifted);
  const auto lemma = verify_lemma_invariants(t, signs);
  j["lemma"] = {{"pass", lemma.pass}, {"skipped", lemma.skipped}, {"reason", lemma.reason}};
  if (lemma.pass) j["transformed"] = triple_json(lemma.transformed);
  bool ok = lemma.pass || lemma.skipped;
  if (t.hermitian) {
    const auto corr = verify_regge_correspondence(t);
    j["regge"] = {{"pass", corr.pass},
                  {"reason", corr.reason},
                  {"squared_lengths_okamoto", lengths_json(corr.okamoto_side)},
                  {"squared_lengths_regge", lengths_json(corr.regge_side)}};
    ok = ok && corr.pass;
  }
  out.emit(j);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 6j symbols, Regge symmetry and the Okamoto transformation"};
  app.require_subcommand(1);
  Options o;
  Output out;
  app.add_option("--json", out.path, "write the JSON result to this file");

  auto* sixj_cmd = app.add_subcommand("sixj", "6j symbol {a b e; c d f} from labels a b c d e f");
  sixj_cmd->add_option("labels", o.labels)->required()->expected(6);
  auto* u_cmd = app.add_subcommand("u", "recoupling coefficient by the Racah sum and by the polynomial oracle");
  u_cmd->add_option("labels", o.labels)->required()->expected(6);
  auto* orbit_cmd = app.add_subcommand("orbit", "tetrahedral and Regge symmetry orbit");
  orbit_cmd->add_option("labels", o.labels)->required()->expected(6);

  auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
  verify_cmd->add_option("suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"regge", "orbit", "orthogonality", "oracle", "u3", "duality", "dimension", "cm",
                             "lemma", "theorem", "backlund", "spherical"}));
  verify_cmd->add_option("--max", o.max, "label bound (or bound on p for u3, duality, dimension)");
  verify_cmd->add_option("--samples", o.samples, "number of random samples");
  verify_cmd->add_option("--exact-samples", o.exact_samples, "rational samples for the theorem suite");

  auto* tetra_cmd = app.add_subcommand("tetra", "tetrahedron geometry");
  tetra_cmd->require_subcommand(1);
  std::string tetra_verb;
  for (const char* verb : {"cm", "realize", "regge"}) {
    auto* sub = tetra_cmd->add_subcommand(verb, std::string("tetra ") + verb);
    sub->add_option("lengths", o.values, "a b c d e f")->required()->expected(6);
    sub->add_flag("--exact", o.exact, "exact rational arithmetic (default)");
    sub->add_flag("--float", o.floating, "double precision");
    sub->callback([&tetra_verb, verb] { tetra_verb = verb; });
  }

  auto* pvi_cmd = app.add_subcommand("pvi", "Painleve VI series");
  pvi_cmd->require_subcommand(1);
  std::string pvi_verb;
  for (const char* verb : {"solve", "okamoto"}) {
    auto* sub = pvi_cmd->add_subcommand(verb, std::string("pvi ") + verb);
    sub->add_option("--theta", o.theta, "theta1..theta4 (re or re,im)")->required()->expected(4);
    sub->add_option("--t0", o.t0, "expansion point");
    sub->add_option("--y0", o.y0, "y(t0)");
    sub->add_option("--y1", o.y1, "y'(t0)");
    sub->callback([&pvi_verb, verb] { pvi_verb = verb; });
  }

  auto* fuchs_cmd = app.add_subcommand("fuchs", "residue triples and trace coordinates");
  fuchs_cmd->require_subcommand(1);
  std::string fuchs_verb;
  for (const char* verb : {"coords", "okamoto", "reconstruct"}) {
    auto* sub = fuchs_cmd->add_subcommand(verb, std::string("fuchs ") + verb);
    if (std::string(verb) == "reconstruct") {
      sub->add_option("--coords", o.coords, "theta1..theta4 lambda12 lambda23 tau")->required()->expected(7);
    } else {
      sub->add_option("--vectors", o.vectors, "three real 3-vectors (Hermitian triple)")->expected(9);
      sub->add_option("--entries", o.entries, "m00 m01 m10 m11 for A1, A2, A3 (re or re,im)")->expected(12);
      sub->add_option("--signs", o.signs, "theta sign choices")->expected(4);
    }
    sub->add_flag("--exact", o.exact, "exact rational arithmetic");
    sub->add_flag("--float", o.floating, "double precision (default)");
    sub->callback([&fuchs_verb, verb] { fuchs_verb = verb; });
  }

  for (auto* cmd : {verify_cmd, pvi_cmd}) {
    cmd->add_option("--seed", o.seed, "PRNG seed (mt19937_64)");
    cmd->add_option("--precision-bits", o.precision_bits, "working precision of the PVI series");
    cmd->add_option("--order", o.order, "series order");
  }

  app.fallthrough();
  for (auto* cmd : {tetra_cmd, pvi_cmd, fuchs_cmd}) cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  o.seed_given = verify_cmd->count("--seed") > 0;

  try {
    if (o.exact && o.floating) throw UsageError("--exact and --float are exclusive");
    if (*sixj_cmd) return cmd_sixj(o, out);
    if (*u_cmd) return cmd_u(o, out);
    if (*orbit_cmd) return cmd_orbit(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*tetra_cmd) return cmd_tetra(tetra_verb, o, out);
    if (*pvi_cmd) return cmd_pvi(pvi_verb, o, out);
    if (*fuchs_cmd) {
      if (o.exact) return fuchs_run<GaussianRational>(fuchs_verb, o, out, gq_conv);
      return fuchs_run<std::complex<double>>(fuchs_verb, o, out, cd_conv);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    json j = {{"error", to_string(e.code())}, {"message", e.what()}};
    std::cout << j.dump() << "\n";
    return 2;
  }
  return 2;
}
