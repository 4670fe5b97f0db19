#include "kdim/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace kdim::io {

PointCloud cloud_from_json(const json& j) {
  if (!j.contains("ambient_dim") || !j.contains("points"))
    throw std::invalid_argument("cloud json: needs ambient_dim and points");
  const std::size_t n = j.at("ambient_dim").get<std::size_t>();
  if (j.value("metric", std::string("sup")) != "sup")
    throw std::invalid_argument("cloud json: only the sup metric is supported");
  std::vector<std::vector<Complex>> pts;
  for (const auto& row : j.at("points")) {
    if (row.size() != 2 * n) throw std::invalid_argument("cloud json: point arity");
    std::vector<Complex> p(n);
    for (std::size_t i = 0; i < n; ++i)
      p[i] = Complex(row[2 * i].get<double>(), row[2 * i + 1].get<double>());
    pts.push_back(std::move(p));
  }
  if (j.contains("enclosing")) {
    const auto& e = j.at("enclosing");
    const auto& c = e.at("center");
    if (c.size() != 2 * n) throw std::invalid_argument("cloud json: center arity");
    std::vector<Complex> center(n);
    for (std::size_t i = 0; i < n; ++i)
      center[i] = Complex(c[2 * i].get<double>(), c[2 * i + 1].get<double>());
    return make_cloud_centered(std::move(pts), std::move(center),
                               e.at("radius").get<double>());
  }
  // default: bounding-box center, outer radius twice the inner
  double rp = 0.0;
  {
    PointCloud probe = make_cloud(pts, 1e100);
    rp = probe.inner_radius;
    return make_cloud(std::move(pts), rp > 0 ? 2.0 * rp : 1.0);
  }
}

json cloud_to_json(const PointCloud& c) {
  json j;
  j["ambient_dim"] = c.ambient_dim;
  j["metric"] = "sup";
  json pts = json::array();
  for (const auto& p : c.points) {
    json row = json::array();
    for (const auto& z : p) {
      row.push_back(z.real());
      row.push_back(z.imag());
    }
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  json center = json::array();
  for (const auto& z : c.enclosing.center) {
    center.push_back(z.real());
    center.push_back(z.imag());
  }
  j["enclosing"] = {{"center", std::move(center)},
                    {"radius", c.enclosing.radius},
                    {"inner_radius", c.inner_radius}};
  return j;
}

namespace {
MultiIndex mi_from_json(const json& a) {
  MultiIndex m;
  for (const auto& e : a) m.exponents.push_back(e.get<std::uint32_t>());
  return m;
}
json mi_to_json(const MultiIndex& m) {
  json a = json::array();
  for (auto e : m.exponents) a.push_back(e);
  return a;
}
}  // namespace

poly::Poly poly_from_json(const json& j) {
  poly::Poly p(j.at("nvars").get<std::size_t>());
  for (const auto& t : j.at("terms"))
    p.add_term(mi_from_json(t.at("alpha")),
               Complex(t.value("re", 0.0), t.value("im", 0.0)));
  return p;
}

json poly_to_json(const poly::Poly& p) {
  json j;
  j["nvars"] = p.nvars();
  json terms = json::array();
  for (const auto& [a, c] : p.terms())
    terms.push_back({{"alpha", mi_to_json(a)}, {"re", c.real()}, {"im", c.imag()}});
  j["terms"] = std::move(terms);
  return j;
}

poly::IntPoly int_poly_from_json(const json& j) {
  poly::IntPoly p(j.at("nvars").get<std::size_t>());
  for (const auto& t : j.at("terms"))
    p.add_term(mi_from_json(t.at("alpha")), mpz_class(t.at("coeff").get<std::string>()));
  return p;
}

json int_poly_to_json(const poly::IntPoly& p) {
  json j;
  j["nvars"] = p.nvars();
  json terms = json::array();
  for (const auto& [a, c] : p.terms())
    terms.push_back({{"alpha", mi_to_json(a)}, {"coeff", c.get_str()}});
  j["terms"] = std::move(terms);
  return j;
}

psi::EpsSchedule schedule_from_json(const json& j) {
  psi::EpsSchedule s;
  for (const auto& e : j.at("eps")) s.eps.push_back(e.get<double>());
  s.samples = j.value("samples", 64u);
  s.seed = j.value("seed", 1ull);
  s.validate();
  return s;
}

json schedule_to_json(const psi::EpsSchedule& s) {
  return {{"eps", s.eps}, {"samples", s.samples}, {"seed", s.seed}};
}

json entropy_report_to_json(const metric::EntropyReport& r) {
  return {{"eps", r.eps},
          {"cover_count", r.cover_count},
          {"pack_count", r.pack_count},
          {"h_upper", r.h_upper},
          {"h_lower", r.h_lower},
          {"method", metric::method_name(r.method)}};
}

namespace {
std::vector<mpq_class> rationalize(const json& arr) {
  std::vector<mpq_class> out;
  for (const auto& e : arr) {
    if (e.is_string()) out.emplace_back(e.get<std::string>());
    else out.emplace_back(mpq_class(e.get<double>()));
  }
  return out;
}
}  // namespace

gevrey::GevreyFamily family_from_json(const json& j) {
  gevrey::FamilyParams p;
  p.s = j.value("s", 1.0);
  if (j.contains("box")) {
    p.box_lo = j.at("box")[0].get<double>();
    p.box_hi = j.at("box")[1].get<double>();
  }
  const std::string kind = j.at("kind").get<std::string>();
  gevrey::FamilyKind k;
  if (kind == "zero") k = gevrey::FamilyKind::zero;
  else if (kind == "polynomial") k = gevrey::FamilyKind::polynomial;
  else if (kind == "rational") k = gevrey::FamilyKind::analytic_rational;
  else if (kind == "lacunary") k = gevrey::FamilyKind::lacunary_cosine;
  else if (kind == "exp") k = gevrey::FamilyKind::exp_affine;
  else throw std::invalid_argument("family json: unknown kind " + kind);
  if (j.contains("num")) p.num = rationalize(j.at("num"));
  if (j.contains("den")) p.den = rationalize(j.at("den"));
  p.exp_scale = j.value("scale", 1.0);
  p.exp_shift = j.value("shift", 0.0);
  if (j.contains("validate_maxorder")) p.validate_maxorder = j.at("validate_maxorder").get<std::uint32_t>();
  return gevrey::make_gevrey_family(k, p);
}

gevrey::GevreyGraph graph_from_json(const json& j) {
  gevrey::GevreyGraph g;
  g.m = j.at("m").get<std::size_t>();
  g.n = j.at("n").get<std::size_t>();
  for (const auto& spec : j.at("h")) g.h.push_back(family_from_json(spec));
  for (const auto& spec : j.at("H")) {
    if (spec.is_array()) {  // [re_spec, im_spec]
      g.H_re.push_back(family_from_json(spec[0]));
      g.H_im.push_back(family_from_json(spec[1]));
    } else {
      g.H_re.push_back(family_from_json(spec));
      g.H_im.push_back(std::nullopt);
    }
  }
  for (const auto& b : j.at("box"))
    g.box.push_back({b[0].get<double>(), b[1].get<double>()});
  g.validate();
  return g;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {
void dump_rec(const json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
  const std::string pad1(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) { out += "{}"; return; }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad1 + json(it.key()).dump() + ": ";
        dump_rec(it.value(), out, indent, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) { out += "[]"; return; }
      out += "[\n";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad1;
        dump_rec(e, out, indent, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}
}  // namespace

std::string dump_deterministic(const json& j, int indent) {
  std::string out;
  dump_rec(j, out, indent, 0);
  out += "\n";
  return out;
}

}  // namespace kdim::io
