#pragma once

#include <optional>
#include <vector>

#include "qhj/momentum.hpp"
#include "qhj/systems.hpp"

namespace qhj {

struct GridSpec {
  double start = 0.0;
  double end = 1.0;
  int points = 2;
};

/// One tabulated sample of a momentum function and its wave function.
/// Rows within one grid spacing of a pole carry empty momentum fields
/// instead of overflow values.
struct FigureRow {
  double q = 0.0;
  std::optional<double> re_p;
  std::optional<double> im_p;
  double u = 0.0;
  bool is_near_pole = false;
};

/// Tabulates Re p, Im p and the wave function on a uniform grid inside
/// the coordinate's physical domain.  u is rescaled so that max |u| on
/// the grid is 1.  Throws std::invalid_argument for grids that leave the
/// domain or have fewer than two points.
std::vector<FigureRow> momentum_figure(const MomentumFunction& p,
                                       const WaveFunction& wave,
                                       const GridSpec& grid);

}  // namespace qhj
