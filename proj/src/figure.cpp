#include "qhj/figure.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qhj {

std::vector<FigureRow> momentum_figure(const MomentumFunction& p,
                                       const WaveFunction& wave,
                                       const GridSpec& grid) {
  if (grid.points < 2) throw std::invalid_argument("momentum_figure: grid needs >= 2 points");
  if (!(grid.start < grid.end))
    throw std::invalid_argument("momentum_figure: grid start must be below grid end");
  if (grid.start <= p.domain_lo || grid.end >= p.domain_hi)
    throw std::invalid_argument("momentum_figure: grid leaves the physical domain of " + p.label);

  const double h = (grid.end - grid.start) / (grid.points - 1);
  std::vector<FigureRow> rows;
  rows.reserve(grid.points);
  double umax = 0.0;
  for (int i = 0; i < grid.points; ++i) {
    FigureRow row;
    row.q = grid.start + h * i;
    for (const Pole& pole : p.poles) {
      if (std::abs(pole.residue) < 1e-12) continue;  // removable point, p stays finite
      if (std::abs(pole.location.imag()) > 1e-9) continue;
      if (std::abs(row.q - pole.location.real()) < h) {
        row.is_near_pole = true;
        break;
      }
    }
    if (!row.is_near_pole) {
      const Complex v = p.evaluate(Complex(row.q, 0.0));
      row.re_p = v.real();
      row.im_p = v.imag();
    }
    row.u = wave.value(row.q).real();
    umax = std::max(umax, std::abs(row.u));
    rows.push_back(row);
  }
  if (umax > 0.0)
    for (FigureRow& row : rows) row.u /= umax;
  return rows;
}

}  // namespace qhj
