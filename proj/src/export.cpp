#include "adsgeo/export.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "adsgeo/errors.hpp"
#include "json.hpp"

namespace ads {

using nlohmann::ordered_json;

void SampleTable::check() const {
  const std::size_t n = positions.size();
  if (params.size() != n || attrs.size() != n) throw GridError("sample table columns misaligned");
  for (std::size_t i = 0; i < n; ++i) {
    if (params[i].size() != param_names.size() || attrs[i].size() != attr_names.size())
      throw GridError("sample table row " + std::to_string(i) + " has the wrong width");
    if (positions[i].dim != dim) throw DimensionError("sample table mixes dimensions");
  }
  if (!grid_shape.empty()) {
    std::size_t prod = 1;
    for (int s : grid_shape) prod *= static_cast<std::size_t>(s);
    if (prod != n) throw GridError("grid shape does not match the sample count");
  }
}

namespace {

std::vector<std::string> base_names(const Geometry& g) {
  if (g.is_curve()) return {"s"};
  return {"u", "v"};
}

std::string fiber_name(const Geometry& g) {
  return object_kind(g) == ObjectKind::CurveAdS4 ? "theta" : "sign";
}

}  // namespace

SampleTable table_from_sheet(const Geometry& g, const SheetGrid& grid) {
  SampleTable t;
  t.dim = grid.points.empty() ? 0 : grid.points.front().position.dim;
  t.param_names = base_names(g);
  t.param_names.push_back(fiber_name(g));
  t.param_names.push_back("mu");
  const bool ranks = grid.rank.size() == grid.points.size() && !grid.points.empty();
  if (ranks) t.attr_names = {"rank", "regular"};
  const int nb = base_dim(g);
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    const auto& p = grid.points[i];
    std::vector<double> row(p.base.begin(), p.base.begin() + nb);
    row.push_back(p.fiber);
    row.push_back(p.mu);
    t.params.push_back(std::move(row));
    t.positions.push_back(p.position);
    if (ranks)
      t.attrs.push_back({double(grid.rank[i]), grid.rank[i] == grid.regular_rank ? 1.0 : 0.0});
    else
      t.attrs.emplace_back();
  }
  t.grid_shape = grid.shape;
  t.check();
  return t;
}

SampleTable table_from_focal(const Geometry& g, const std::vector<FocalPoint>& pts) {
  SampleTable t;
  t.dim = pts.empty() ? 0 : pts.front().position.dim;
  t.param_names = base_names(g);
  t.param_names.push_back(fiber_name(g));
  t.attr_names = {"mu_star", "branch"};
  const int nb = base_dim(g);
  for (const auto& p : pts) {
    std::vector<double> row(p.base.begin(), p.base.begin() + nb);
    row.push_back(p.fiber);
    t.params.push_back(std::move(row));
    t.positions.push_back(p.position);
    t.attrs.push_back({p.mu_star, double(p.branch_index)});
  }
  t.check();
  return t;
}

SampleTable table_from_points(const std::vector<AVec>& pts) {
  SampleTable t;
  t.dim = pts.empty() ? 0 : pts.front().dim;
  t.param_names = {"index"};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    t.params.push_back({double(i)});
    t.positions.push_back(pts[i]);
    t.attrs.emplace_back();
  }
  t.check();
  return t;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

ExportFormat parse_format(const std::string& s) {
  if (s == "csv") return ExportFormat::Csv;
  if (s == "json") return ExportFormat::Json;
  if (s == "obj") return ExportFormat::Obj;
  throw ProjectionError("unknown output format '" + s + "' (csv, json, obj)");
}

std::vector<int> default_projection(int dim, int extra_drop) {
  std::vector<int> keep;
  for (int l = 0; l <= dim - 2; ++l)
    if (!(dim == 5 && l == extra_drop)) keep.push_back(l);
  if (keep.size() != 3) throw ProjectionError("no default projection to three coordinates");
  return keep;
}

std::vector<int> parse_projection(const std::string& text, int dim) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = 0;
    auto r = std::from_chars(item.data(), item.data() + item.size(), v);
    if (r.ec != std::errc() || r.ptr != item.data() + item.size())
      throw ProjectionError("bad coordinate label '" + item + "'");
    out.push_back(v);
  }
  if (out.size() != 3) throw ProjectionError("projection needs exactly three labels");
  std::set<int> seen(out.begin(), out.end());
  if (seen.size() != 3) throw ProjectionError("projection labels must be distinct");
  for (int l : out)
    if (l < -1 || l > dim - 2)
      throw ProjectionError("label " + std::to_string(l) + " invalid in dimension " +
                            std::to_string(dim));
  return out;
}

std::string export_csv(const SampleTable& t) {
  t.check();
  std::string out;
  std::vector<std::string> head = t.param_names;
  for (int i = 0; i < t.dim; ++i) head.push_back("x" + std::to_string(i - 1));
  head.insert(head.end(), t.attr_names.begin(), t.attr_names.end());
  for (std::size_t i = 0; i < head.size(); ++i) out += (i ? "," : "") + head[i];
  out += '\n';
  for (std::size_t r = 0; r < t.size(); ++r) {
    bool first = true;
    auto put = [&](double x) {
      if (!first) out += ',';
      first = false;
      out += format_double(x);
    };
    for (double x : t.params[r]) put(x);
    for (int i = 0; i < t.dim; ++i) put(t.positions[r][i]);
    for (double x : t.attrs[r]) put(x);
    out += '\n';
  }
  return out;
}

std::string export_json(const SampleTable& t) {
  t.check();
  ordered_json j;
  j["dim"] = t.dim;
  j["grid_shape"] = t.grid_shape;
  j["param_names"] = t.param_names;
  j["attr_names"] = t.attr_names;
  ordered_json recs = ordered_json::array();
  // nan/inf are not JSON; they travel as strings
  auto num = [](double x) -> ordered_json {
    if (std::isfinite(x)) return x;
    return format_double(x);
  };
  for (std::size_t r = 0; r < t.size(); ++r) {
    ordered_json rec;
    rec["params"] = ordered_json::array();
    for (double x : t.params[r]) rec["params"].push_back(num(x));
    rec["position"] = ordered_json::array();
    for (int i = 0; i < t.dim; ++i) rec["position"].push_back(num(t.positions[r][i]));
    rec["attrs"] = ordered_json::object();
    for (std::size_t a = 0; a < t.attr_names.size(); ++a) rec["attrs"][t.attr_names[a]] = num(t.attrs[r][a]);
    recs.push_back(std::move(rec));
  }
  j["records"] = std::move(recs);
  return j.dump(1) + "\n";
}

std::string export_obj(const SampleTable& t, const std::vector<int>& proj) {
  t.check();
  if (proj.size() != 3) throw ProjectionError("OBJ needs a projection to three coordinates");
  for (int l : proj)
    if (l < -1 || l > t.dim - 2) throw ProjectionError("projection label out of range");
  std::string out = "# adsgeo sheet mesh\n# projection";
  for (int l : proj) out += " x" + std::to_string(l);
  out += "\n# grid_shape";
  for (int s : t.grid_shape) out += " " + std::to_string(s);
  out += "\n# columns per vertex comment:";
  for (const auto& n : t.param_names) out += " " + n;
  for (const auto& n : t.attr_names) out += " " + n;
  out += "\n";
  for (std::size_t r = 0; r < t.size(); ++r) {
    out += "v";
    for (int l : proj) out += " " + format_double(t.positions[r][l + 1]);
    out += "\n#a";
    for (double x : t.params[r]) out += " " + format_double(x);
    for (double x : t.attrs[r]) out += " " + format_double(x);
    out += "\n";
  }
  if (t.grid_shape.size() >= 2) {
    const std::size_t na = t.grid_shape[t.grid_shape.size() - 2];
    const std::size_t nb = t.grid_shape.back();
    const std::size_t slab = na * nb;
    for (std::size_t base = 0; base + slab <= t.size(); base += slab)
      for (std::size_t i = 0; i + 1 < na; ++i)
        for (std::size_t k = 0; k + 1 < nb; ++k) {
          std::size_t a = base + i * nb + k + 1;  // OBJ is 1-based
          out += "f " + std::to_string(a) + " " + std::to_string(a + nb) + " " +
                 std::to_string(a + nb + 1) + " " + std::to_string(a + 1) + "\n";
        }
  }
  return out;
}

std::string export_samples(const SampleTable& t, ExportFormat f, const std::vector<int>& proj) {
  switch (f) {
    case ExportFormat::Csv: return export_csv(t);
    case ExportFormat::Json: return export_json(t);
    case ExportFormat::Obj: return export_obj(t, proj.empty() ? default_projection(t.dim) : proj);
  }
  return {};
}

SampleTable table_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  auto num = [](const nlohmann::json& v) {
    if (v.is_string()) {
      const auto s = v.get<std::string>();
      if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
      if (s == "inf") return std::numeric_limits<double>::infinity();
      if (s == "-inf") return -std::numeric_limits<double>::infinity();
      throw GridError("bad number '" + s + "'");
    }
    return v.get<double>();
  };
  SampleTable t;
  t.dim = j.at("dim").get<int>();
  t.grid_shape = j.at("grid_shape").get<std::vector<int>>();
  t.param_names = j.at("param_names").get<std::vector<std::string>>();
  t.attr_names = j.at("attr_names").get<std::vector<std::string>>();
  for (const auto& rec : j.at("records")) {
    std::vector<double> p;
    for (const auto& v : rec.at("params")) p.push_back(num(v));
    AVec x(t.dim);
    for (int i = 0; i < t.dim; ++i) x[i] = num(rec.at("position").at(i));
    std::vector<double> a;
    for (const auto& n : t.attr_names) a.push_back(num(rec.at("attrs").at(n)));
    t.params.push_back(std::move(p));
    t.positions.push_back(x);
    t.attrs.push_back(std::move(a));
  }
  t.check();
  return t;
}

}  // namespace ads
