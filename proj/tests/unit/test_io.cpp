#include <cmath>
#include <sstream>

#include "adsgeo/export.hpp"
#include "adsgeo/io_json.hpp"
#include "doctest.h"

using namespace ads;

namespace {
// (sqrt2 cos s, sqrt2 sin s, cos(sqrt3 s), sin(sqrt3 s), 0): on AdS, unit speed
std::string curve_json(double k) {
  std::ostringstream o;
  o.precision(17);
  o << R"({"dim": 5, "domain": [0, 3], "name": "torus-knot", "coords": [)"
    << R"([{"kind": "cos", "coeff": 1.4142135623730951, "freq": 1}],)"
    << R"([{"kind": "sin", "coeff": 1.4142135623730951, "freq": 1}],)"
    << R"([{"kind": "cos", "coeff": 1, "freq": )" << k << "}],"
    << R"([{"kind": "sin", "coeff": 1, "freq": )" << k << "}],"
    << R"([{"kind": "poly", "coeff": 0, "power": 0}]]})";
  return o.str();
}

int count_prefix(const std::string& text, const std::string& p) {
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line))
    if (line.rfind(p, 0) == 0) ++n;
  return n;
}
}  // namespace

TEST_CASE("curve JSON round trip") {
  Geometry g = geometry_from_json(curve_json(std::sqrt(3.0)));
  REQUIRE(g.is_curve());
  CHECK(g.name == "torus-knot");
  for (double s : {0.0, 0.7, 2.9}) CHECK(std::abs(ads_residual(g.curve->eval_derivative(s, 0))) < 1e-12);
  Geometry back = geometry_from_json(geometry_to_json(g));
  for (double s : {0.0, 1.3, 2.5})
    for (int k = 0; k < 3; ++k) {
      AVec a = g.curve->eval_derivative(s, k), b = back.curve->eval_derivative(s, k);
      for (int i = 0; i < 5; ++i) CHECK(a.c[i] == b.c[i]);
    }
}

TEST_CASE("surface JSON round trip") {
  Geometry s = preset("ads4-generic-surface");
  Geometry back = geometry_from_json(geometry_to_json(s));
  REQUIRE(!back.is_curve());
  AVec a = s.surface->partial(0.2, -0.1, 1, 1), b = back.surface->partial(0.2, -0.1, 1, 1);
  for (int i = 0; i < 5; ++i) CHECK(a.c[i] == doctest::Approx(b.c[i]).epsilon(1e-14));
}

TEST_CASE("input rejection") {
  CHECK_THROWS_AS(geometry_from_json(curve_json(2.0)), InputError);  // not unit speed
  try {
    geometry_from_json("{\n  \"dim\": 5,\n  \"domain\": [0, 1,\n}");
    FAIL("malformed JSON accepted");
  } catch (const InputFormatError& e) {
    CHECK(e.line >= 3);
    CHECK(e.column > 0);
  }
  std::string bad = curve_json(std::sqrt(3.0));
  bad.replace(bad.find("\"poly\""), 6, "\"tanh\"");
  CHECK_THROWS_AS(geometry_from_json(bad), InputFormatError);
  CHECK_THROWS_AS(geometry_from_json(R"({"dim": 5})"), InputFormatError);
}

TEST_CASE("CSV export of a single sheet point") {
  Geometry h = preset("ads4-helix");
  SheetGrid sg;
  sg.points.push_back(lh_eval(h, {0.5, 0}, 0.25, 0.75));
  sg.shape = {1, 1, 1};
  SampleTable t = table_from_sheet(h, sg);
  std::string csv = export_csv(t);
  std::istringstream in(csv);
  std::string header, row, extra;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(!std::getline(in, extra));
  CHECK(header.rfind("s,theta,mu,x-1,x0,x1,x2,x3", 0) == 0);
  CHECK(std::count(row.begin(), row.end(), ',') == std::count(header.begin(), header.end(), ','));
}

TEST_CASE("OBJ mesh of a 2x2 grid") {
  std::vector<AVec> pts;
  for (int i = 0; i < 4; ++i) pts.push_back(AVec{1.0 * i, 0.5, 0.25 * i, 2.0, -1.0});
  SampleTable t = table_from_points(pts);
  t.grid_shape = {2, 2};
  std::string obj = export_obj(t, default_projection(5));
  CHECK(count_prefix(obj, "v ") == 4);
  CHECK(count_prefix(obj, "f ") == 1);
  CHECK(obj.find("f 1 3 4 2") != std::string::npos);
}

TEST_CASE("JSON export round trip is exact and deterministic") {
  Geometry h = preset("ads4-helix");
  GridSpec spec = parse_grid(h, "s=0:1:4,theta=0:6:3,mu=-1:1:3");
  SampleTable t = table_from_sheet(h, sheet_grid(h, spec));
  std::string a = export_json(t);
  CHECK(a == export_json(table_from_sheet(h, sheet_grid(h, spec))));
  SampleTable r = table_from_json(a);
  REQUIRE(r.size() == t.size());
  CHECK(r.grid_shape == t.grid_shape);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (int k = 0; k < 5; ++k) CHECK(r.positions[i].c[k] == t.positions[i].c[k]);
    CHECK(r.params[i] == t.params[i]);
  }
  CHECK(export_json(r) == a);
}

TEST_CASE("number formatting and projections") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(std::stod(format_double(1.0 / 3)) == 1.0 / 3);
  CHECK(default_projection(5) == std::vector<int>{0, 1, 2});
  CHECK(default_projection(4) == std::vector<int>{0, 1, 2});
  CHECK(parse_projection("-1,0,3", 5) == std::vector<int>{-1, 0, 3});
  CHECK_THROWS_AS(parse_projection("0,1", 5), ProjectionError);
  CHECK_THROWS_AS(parse_projection("0,1,4", 5), ProjectionError);
  CHECK_THROWS_AS(parse_projection("0,0,1", 5), ProjectionError);
  CHECK(parse_format("obj") == ExportFormat::Obj);
}
