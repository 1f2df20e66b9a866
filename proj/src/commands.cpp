#include "hyperlines/commands.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "hyperlines/curves.hpp"
#include "hyperlines/errors.hpp"
#include "hyperlines/verify.hpp"

namespace hyperlines {

namespace {

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) throw schema_error("expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw schema_error(std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw schema_error(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw schema_error(std::string(what) + " must be finite");
  return v;
}

Vector vec(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw schema_error(std::string(what) + " must be a non-empty array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = number(j[i], what);
  return v;
}

Json to_json(const Vector& v) { return Json(std::vector<double>(v.data(), v.data() + v.size())); }

// Check values may be NaN when a check throws; JSON carries those as null.
Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

UnitTangent parse_unit_tangent(const Json& j) {
  Vector p = vec(field(j, "p"), "p");
  Vector v = vec(field(j, "v"), "v");
  if (p.size() != v.size()) throw schema_error("p and v differ in length");
  if (p.size() < 3) throw schema_error("points need at least three coordinates (n >= 1)");
  return UnitTangent::checked(HPoint::checked(std::move(p)), std::move(v));
}

OrientedGeodesic parse_pair(const Json& j) {
  Vector m = vec(field(j, "minus"), "minus");
  Vector q = vec(field(j, "plus"), "plus");
  if (m.size() != q.size()) throw schema_error("minus and plus differ in length");
  if (m.size() < 2) throw schema_error("ideal points need at least two coordinates (n >= 1)");
  return OrientedGeodesic::checked(IdealPoint::checked(std::move(m)), IdealPoint::checked(std::move(q)));
}

Json pair_json(const OrientedGeodesic& g) { return {{"minus", to_json(g.minus.dir)}, {"plus", to_json(g.plus.dir)}}; }

Json tangent_json(const UnitTangent& t) { return {{"p", to_json(t.point.x)}, {"v", to_json(t.dir)}}; }

CurveInG parse_curve(const Json& in) {
  const double h = number(field(in, "h"), "h");
  const Json& samples = field(in, "samples");
  if (!samples.is_array()) throw schema_error("samples must be an array");
  if (samples.size() < 5) throw schema_error("a curve needs at least five samples");
  const bool pairs = samples.front().is_object() && samples.front().contains("minus");
  if (pairs) {
    std::vector<OrientedGeodesic> geos;
    for (const auto& s : samples) geos.push_back(parse_pair(s));
    return CurveInG::from_pairs(h, geos);
  }
  std::vector<UnitTangent> lifts;
  for (const auto& s : samples) lifts.push_back(parse_unit_tangent(s));
  return CurveInG::checked(h, std::move(lifts));
}

void match_n(const CommandOptions& opt, int n) {
  if (opt.n != 0 && opt.n != n) {
    throw schema_error("--n " + std::to_string(opt.n) + " does not match the input (n = " + std::to_string(n) + ")");
  }
}

MetricChoice parse_metric(const std::string& s) {
  if (s == "g1") return MetricChoice::g1();
  if (s == "g0") return MetricChoice::g0();
  if (s.rfind("combo:", 0) == 0) {
    const std::string rest = s.substr(6);
    const auto comma = rest.find(',');
    if (comma != std::string::npos) {
      try {
        std::size_t a = 0, b = 0;
        const double lambda = std::stod(rest.substr(0, comma), &a);
        const double mu = std::stod(rest.substr(comma + 1), &b);
        if (a == comma && b == rest.size() - comma - 1) return MetricChoice::combo(lambda, mu);
      } catch (const std::logic_error&) {
      }
    }
  }
  throw schema_error("unknown metric '" + s + "' (g1, g0 or combo:LAMBDA,MU)");
}

}  // namespace

CommandResult cmd_classify(const Json& input, const CommandOptions& opt) {
  const CurveInG curve = parse_curve(input);
  const SpaceConfig cfg = SpaceConfig::from_ambient(curve.ambient_dim());
  match_n(opt, cfg.n());
  const MetricChoice metric = parse_metric(opt.metric);
  metric.validate(cfg);
  if (!(opt.band >= 0.0) || !std::isfinite(opt.band)) throw schema_error("band must be a finite non-negative number");

  const std::size_t origin = curve.size() / 2;
  const StandardPresentation sp = standard_presentation(curve, origin, curve.lift(origin).point);

  Json samples = Json::array();
  Json counts = {{"Spacelike", 0}, {"Timelike", 0}, {"Null", 0}};
  for (std::size_t i = 1; i + 1 < curve.size(); ++i) {
    const GTangent gt = presentation_tangent(sp, i);
    CausalType label;
    switch (metric.kind()) {
      case MetricChoice::Kind::G1:
        label = causal_classify_g1(sp, i, opt.band);
        break;
      case MetricChoice::Kind::G0:
        label = causal_classify_g0(sp, i, opt.band);
        break;
      default:
        label = classify_norm(norm(gt, metric), gt.scale(), opt.band);
    }
    counts[to_string(label)] = counts[to_string(label)].get<int>() + 1;
    const double t = (static_cast<double>(i) - static_cast<double>(origin)) * curve.step();
    samples.push_back({{"index", i},
                       {"t", t},
                       {"label", to_string(label)},
                       {"norm", norm(gt, metric)},
                       {"norm_mss", norm_mss(velocity_boundary(curve, i))},
                       {"offset", sp.offsets[i]}});
  }
  return {{{"command", "classify"},
           {"n", cfg.n()},
           {"metric", opt.metric},
           {"band", opt.band},
           {"origin", origin},
           {"residual", presentation_residual(sp)},
           {"counts", counts},
           {"samples", samples}}};
}

CommandResult cmd_geodesic(const Json& input, const CommandOptions& opt) {
  const Vector x = vec(field(input, "x"), "x");
  const Vector y = vec(field(input, "y"), "y");
  if (x.size() != y.size()) throw schema_error("x and y differ in length");
  const SpaceConfig cfg(static_cast<int>(x.size()));
  match_n(opt, cfg.n());
  if (x.norm() == 0.0 && y.norm() == 0.0) throw domain_error("X = 0 has no geodesic");

  const AlgebraElement X = h_element(x, y);
  const PeriodicVerdict verdict = classify_periodic(X);
  double s_max = verdict.periodic ? verdict.period : 2.0 * std::numbers::pi;
  if (input.contains("s_max")) s_max = number(input["s_max"], "s_max");
  int steps = 64;
  if (input.contains("steps")) {
    if (!input["steps"].is_number_integer()) throw schema_error("steps must be an integer");
    steps = input["steps"].get<int>();
  }
  if (steps < 1 || steps > 100000) throw schema_error("steps must lie in [1, 100000]");

  Json samples = Json::array();
  OrientedGeodesic first = OrientedGeodesic::base(cfg);
  OrientedGeodesic last = first;
  for (int k = 0; k <= steps; ++k) {
    const double s = s_max * k / steps;
    last = geodesic_in_G(X, s);
    Json row = pair_json(last);
    row["s"] = s;
    samples.push_back(std::move(row));
  }
  Json out = {{"command", "geodesic"},
              {"n", cfg.n()},
              {"periodic", verdict.periodic},
              {"parallel", verdict.parallel},
              {"s_max", s_max},
              {"steps", steps},
              {"closure", geodesic_distance_proxy(first, last)},
              {"samples", samples}};
  out["period"] = verdict.periodic ? Json(verdict.period) : Json(nullptr);
  out["lambda"] = verdict.parallel ? Json(verdict.lambda) : Json(nullptr);
  return {std::move(out)};
}

CommandResult cmd_convert(const Json& input, const CommandOptions& opt) {
  if (!input.is_object()) throw schema_error("expected a JSON object");
  OrientedGeodesic geo = [&] {
    if (input.contains("minitwistor")) {
      const Json& m = input["minitwistor"];
      const Vector v = vec(field(m, "v"), "v");
      const Vector x = vec(field(m, "x"), "x");
      if (v.size() != x.size() || v.size() < 2) throw schema_error("minitwistor v and x need equal length >= 2");
      return minitwistor_F(v, x);
    }
    if (input.contains("minus")) return parse_pair(input);
    if (input.contains("p")) return from_unit_tangent(parse_unit_tangent(input));
    throw schema_error("expected {\"p\",\"v\"}, {\"minus\",\"plus\"} or {\"minitwistor\": {\"v\",\"x\"}}");
  }();
  match_n(opt, geo.boundary_dim() - 1);

  const UnitTangent foot = base_tangent(geo);
  const MinitwistorCoords mt = minitwistor_F_inv(geo);
  const double roundtrip = std::max(geodesic_distance_proxy(from_unit_tangent(foot), geo),
                                    geodesic_distance_proxy(minitwistor_F(mt.v, mt.x), geo));
  return {{{"command", "convert"},
           {"n", geo.boundary_dim() - 1},
           {"point_dir", tangent_json(foot)},
           {"pair", pair_json(geo)},
           {"minitwistor", {{"v", to_json(mt.v)}, {"x", to_json(mt.x)}}},
           {"roundtrip_error", roundtrip}}};
}

CommandResult cmd_verify(const Json& input, const CommandOptions& opt) {
  std::string suite = "all";
  if (!input.is_null()) {
    if (!input.is_object()) throw schema_error("expected a JSON object");
    if (input.contains("suite")) {
      if (!input["suite"].is_string()) throw schema_error("suite must be a string");
      suite = input["suite"].get<std::string>();
    }
  }
  int n = opt.n;
  if (n == 0) {
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) throw schema_error("unknown suite '" + suite + "'");
    n = suite_fixed_n(suite) != 0 ? suite_fixed_n(suite) : 2;
  }
  const VerifyReport r = run_verify(suite, n, opt.seed, opt.parallel);

  Json checks = Json::array();
  int pass = 0, fail = 0, info = 0;
  for (const auto& c : r.checks) {
    (c.status == CheckStatus::Pass ? pass : c.status == CheckStatus::Fail ? fail : info)++;
    checks.push_back({{"name", c.name},
                      {"status", to_string(c.status)},
                      {"value", finite_or_null(c.value)},
                      {"tolerance", finite_or_null(c.tolerance)},
                      {"comparison", c.comparison},
                      {"n", c.n},
                      {"runtime_ms", c.runtime_ms},
                      {"detail", c.detail}});
  }
  Json config = {{"n", r.n},
                 {"seed", r.seed},
                 {"bands", {{"null", kNullBand}, {"classify", kClassifyBand}, {"frontier", kFrontierBand}}}};
  Json out = {{"command", "verify"},
              {"suite", r.suite},
              {"config", config},
              {"summary", {{"pass", pass}, {"fail", fail}, {"info", info}}},
              {"overall", r.overall ? "pass" : "fail"},
              {"checks", checks},
              {"timestamp", r.timestamp}};
  return {std::move(out), r.overall};
}

CommandResult run_command(const std::string& name, const std::string& input_text, const CommandOptions& opt) {
  using Handler = CommandResult (*)(const Json&, const CommandOptions&);
  Handler handler = nullptr;
  if (name == "classify") handler = cmd_classify;
  if (name == "geodesic") handler = cmd_geodesic;
  if (name == "convert") handler = cmd_convert;
  if (name == "verify") handler = cmd_verify;
  if (handler == nullptr) throw schema_error("unknown command '" + name + "'");

  const bool blank = std::all_of(input_text.begin(), input_text.end(), [](unsigned char c) { return std::isspace(c); });
  Json input;
  if (!blank || name != "verify") {
    try {
      input = Json::parse(input_text);
    } catch (const Json::parse_error& e) {
      throw schema_error(std::string("malformed JSON: ") + e.what());
    }
  }
  try {
    return handler(input, opt);
  } catch (const Json::exception& e) {
    throw schema_error(e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hyperlines
