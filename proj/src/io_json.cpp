#include "adsgeo/io_json.hpp"

#include <fstream>
#include <sstream>

#include "adsgeo/errors.hpp"
#include "json.hpp"

namespace ads {

using nlohmann::json;

InputFormatError::InputFormatError(const std::string& msg, int l, int c)
    : std::runtime_error(l > 0 ? msg + " (line " + std::to_string(l) + ", column " +
                                     std::to_string(c) + ")"
                               : msg),
      line(l),
      column(c) {}

namespace {

void line_col(const std::string& text, std::size_t byte, int& line, int& col) {
  line = 1;
  col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
}

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InputFormatError(where + ": " + what);
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) bad(where, "expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(where, "expected a non-negative integer");
  return j.get<int>();
}

Interval interval(const json& obj, const char* key) {
  if (!obj.contains(key)) bad(key, "missing");
  const json& d = obj.at(key);
  if (!d.is_array() || d.size() != 2) bad(key, "expected [a, b]");
  return {number(d[0], key), number(d[1], key)};
}

// scalar for curves, pair for surfaces
void pair_field(const json& t, const char* key, bool surface, const std::string& where,
                bool as_int, double& a, double& b) {
  a = b = 0;
  if (!t.contains(key)) return;
  const json& v = t.at(key);
  if (surface) {
    if (!v.is_array() || v.size() != 2) bad(where, std::string(key) + " must be [u, v]");
    a = as_int ? integer(v[0], where) : number(v[0], where);
    b = as_int ? integer(v[1], where) : number(v[1], where);
  } else {
    a = as_int ? integer(v, where) : number(v, where);
  }
}

Term term(const json& t, bool surface, const std::string& where) {
  if (!t.is_object()) bad(where, "term must be an object");
  for (auto it = t.begin(); it != t.end(); ++it)
    if (it.key() != "kind" && it.key() != "coeff" && it.key() != "freq" && it.key() != "power")
      bad(where, "unknown term field '" + it.key() + "'");
  Term out;
  if (!t.contains("kind") || !t.at("kind").is_string()) bad(where, "missing kind");
  const std::string kind = t.at("kind").get<std::string>();
  if (kind == "cos")
    out.kind = TrigKind::Cos;
  else if (kind == "sin")
    out.kind = TrigKind::Sin;
  else if (kind == "poly")
    out.kind = TrigKind::None;
  else
    bad(where, "kind must be cos, sin or poly");
  if (!t.contains("coeff")) bad(where, "missing coeff");
  out.coeff = number(t.at("coeff"), where);
  double pu, pv;
  pair_field(t, "power", surface, where, true, pu, pv);
  out.pu = static_cast<int>(pu);
  out.pv = static_cast<int>(pv);
  pair_field(t, "freq", surface, where, false, out.wu, out.wv);
  if (out.kind == TrigKind::None && (out.wu != 0 || out.wv != 0)) bad(where, "poly term with freq");
  if (out.kind != TrigKind::None && !t.contains("freq")) bad(where, "trig term without freq");
  return out;
}

std::vector<TermSum> coords(const json& obj, bool surface) {
  if (!obj.contains("coords") || !obj.at("coords").is_array()) bad("coords", "missing array");
  std::vector<TermSum> out;
  int i = 0;
  for (const auto& c : obj.at("coords")) {
    if (!c.is_array()) bad("coords[" + std::to_string(i) + "]", "expected array of terms");
    TermSum ts;
    int k = 0;
    for (const auto& t : c)
      ts.push_back(term(t, surface, "coords[" + std::to_string(i) + "][" + std::to_string(k++) + "]"));
    out.push_back(std::move(ts));
    ++i;
  }
  if (obj.contains("dim") && integer(obj.at("dim"), "dim") != static_cast<int>(out.size()))
    bad("dim", "does not match the number of coordinate functions");
  return out;
}

std::string failing_list(const ValidationReport& r) {
  std::ostringstream os;
  std::size_t shown = std::min<std::size_t>(r.failing_samples.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) {
    os << (i ? ", " : "") << "(";
    for (std::size_t k = 0; k < r.failing_samples[i].size(); ++k)
      os << (k ? "," : "") << r.failing_samples[i][k];
    os << ")";
  }
  if (r.failing_samples.size() > shown) os << ", ...";
  return os.str();
}

json term_json(const Term& t, bool surface) {
  json j = json::object();
  j["kind"] = t.kind == TrigKind::Cos ? "cos" : t.kind == TrigKind::Sin ? "sin" : "poly";
  j["coeff"] = t.coeff;
  if (surface) {
    if (t.kind != TrigKind::None) j["freq"] = {t.wu, t.wv};
    j["power"] = {t.pu, t.pv};
  } else {
    if (t.kind != TrigKind::None) j["freq"] = t.wu;
    j["power"] = t.pu;
  }
  return j;
}

}  // namespace

Geometry geometry_from_json(const std::string& text, const ToleranceConfig& cfg, int n_val) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    int l, c;
    line_col(text, e.byte > 0 ? e.byte - 1 : 0, l, c);
    throw InputFormatError("malformed JSON", l, c);
  }
  if (!obj.is_object()) bad("input", "top level must be an object");
  const bool surface = obj.contains("domain_u");
  const std::string name = obj.contains("name") && obj.at("name").is_string()
                               ? obj.at("name").get<std::string>()
                               : (surface ? "surface" : "curve");
  Geometry g;
  g.name = name;
  if (surface) {
    auto s = std::make_shared<ParamSurface>(coords(obj, true), interval(obj, "domain_u"),
                                            interval(obj, "domain_v"), name);
    if (obj.contains("reference")) {
      const json& r = obj.at("reference");
      if (!r.is_array() || r.size() != 5) bad("reference", "expected five numbers");
      AVec ref(5);
      for (int i = 0; i < 5; ++i) ref[i] = number(r[i], "reference");
      s->set_reference(ref);
    }
    auto rep = validate(*s, std::max(2, n_val / 10), cfg);
    if (!rep.ok)
      throw InputError("surface is not a spacelike immersion into AdS^4 at " +
                       std::to_string(rep.failing_samples.size()) +
                       " samples: " + failing_list(rep));
    g.surface = s;
  } else {
    auto c = std::make_shared<ParamCurve>(coords(obj, false), interval(obj, "domain"), name);
    auto rep = validate(*c, n_val, cfg);
    if (!rep.ok)
      throw InputError("curve rejected (must lie in AdS and be unit speed; max |<g',g'>-1| = " +
                       std::to_string(rep.max_unit_speed_residual) + ", max ads residual = " +
                       std::to_string(rep.max_ads_residual) + ") at s = " + failing_list(rep));
    g.curve = c;
  }
  return g;
}

Geometry load_geometry_file(const std::string& path, const ToleranceConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw InputFormatError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return geometry_from_json(ss.str(), cfg);
}

std::string geometry_to_json(const Geometry& g) {
  nlohmann::ordered_json j;
  j["name"] = g.name;
  auto dump_coords = [](const std::vector<TermSum>& cs, bool surface) {
    json arr = json::array();
    for (const auto& ts : cs) {
      json c = json::array();
      for (const auto& t : ts) c.push_back(term_json(t, surface));
      arr.push_back(c);
    }
    return arr;
  };
  if (g.surface) {
    const auto& s = *g.surface;
    j["dim"] = s.dim();
    j["domain_u"] = {s.domain_u().first, s.domain_u().second};
    j["domain_v"] = {s.domain_v().first, s.domain_v().second};
    j["coords"] = dump_coords(s.coords(), true);
    AVec r = s.reference();
    j["reference"] = json::array();
    for (int i = 0; i < r.dim; ++i) j["reference"].push_back(r[i]);
  } else {
    auto pc = std::dynamic_pointer_cast<const ParamCurve>(g.curve);
    if (!pc) throw InputError(g.name + " is reparametrized numerically and has no closed form");
    j["dim"] = pc->dim();
    j["domain"] = {pc->domain().first, pc->domain().second};
    j["coords"] = dump_coords(pc->coords(), false);
  }
  return j.dump(2);
}

}  // namespace ads
