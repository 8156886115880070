#pragma once

#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "cellkit/cells.hpp"
#include "cellkit/product_engine.hpp"

namespace cellkit {

/// Expansion sum_z c_z t_z, sorted by z, zero coefficients omitted.
using TProduct = std::vector<std::pair<ElementId, Coefficient>>;

/// Structure constants of the asymptotic ring:
///   t_x t_y = sum_z gamma_{x,y,z^-1} t_z,
/// where gamma_{x,y,z^-1} is the coefficient of v^{a(z)} in h_{x,y,z}.
/// Rows (all t_x t_y for one x) are computed on first use and kept.
class GammaTable {
 public:
  GammaTable(const ProductEngine& engine, const CellDecomposition& cells);
  ~GammaTable();

  const CellDecomposition& cells() const noexcept { return cells_; }

  const TProduct& t_multiply(ElementId x, ElementId y) const;
  /// gamma_{x,y,z}
  Coefficient gamma(ElementId x, ElementId y, ElementId z) const;

 private:
  const std::vector<TProduct>& row(ElementId x) const;

  const ProductEngine& engine_;
  const CellDecomposition& cells_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<const std::vector<TProduct>>> rows_;
};

/// Sum of the coefficients of an expansion.
Coefficient total(const TProduct& p);

}  // namespace cellkit
