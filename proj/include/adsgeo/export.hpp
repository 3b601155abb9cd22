#pragma once
#include <string>
#include <vector>

#include "adsgeo/lightlike_sheets.hpp"

namespace ads {

// Flat table of samples: parameter values, ambient position, attributes.
// grid_shape (row-major, last axis fastest) is what OBJ uses for faces.
struct SampleTable {
  int dim = 0;
  std::vector<std::string> param_names;
  std::vector<std::string> attr_names;
  std::vector<std::vector<double>> params;
  std::vector<AVec> positions;
  std::vector<std::vector<double>> attrs;
  std::vector<int> grid_shape;

  std::size_t size() const { return positions.size(); }
  void check() const;
};

SampleTable table_from_sheet(const Geometry& g, const SheetGrid& grid);
SampleTable table_from_focal(const Geometry& g, const std::vector<FocalPoint>& pts);
SampleTable table_from_points(const std::vector<AVec>& pts);

// shortest round-trip representation (never more than 17 significant digits)
std::string format_double(double x);

enum class ExportFormat { Csv, Json, Obj };
ExportFormat parse_format(const std::string& s);

// Projection = three ambient labels in -1..dim-2. Default drops x_{-1}, and
// for dim 5 also drops `extra_drop`.
std::vector<int> default_projection(int dim, int extra_drop = 3);
std::vector<int> parse_projection(const std::string& text, int dim);

std::string export_csv(const SampleTable& t);
std::string export_json(const SampleTable& t);
// vertices in table order, one quad per cell of the two fastest grid axes
std::string export_obj(const SampleTable& t, const std::vector<int>& projection);
std::string export_samples(const SampleTable& t, ExportFormat f,
                           const std::vector<int>& projection = {});

SampleTable table_from_json(const std::string& text);

}  // namespace ads
