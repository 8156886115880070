#include "cellkit/asymptotic.hpp"

#include <algorithm>

namespace cellkit {

GammaTable::GammaTable(const ProductEngine& engine, const CellDecomposition& cells)
    : engine_(engine), cells_(cells), rows_(cells.order()) {}

GammaTable::~GammaTable() = default;

const std::vector<TProduct>& GammaTable::row(ElementId x) const {
  {
    std::lock_guard lock(mutex_);
    if (rows_[x]) return *rows_[x];
  }
  auto fresh = std::make_unique<std::vector<TProduct>>(cells_.order());
  engine_.products_with_fixed_left(x, [&](ElementId y, const ProductVector& p) {
    TProduct& out = (*fresh)[y];
    for (std::size_t i = 0; i < p.size(); ++i) {
      const ElementId z = p.element(i);
      const Coefficient g = p.poly(i).coefficient(cells_.a_value(z));
      if (g != 0) out.emplace_back(z, g);
    }
  });
  std::lock_guard lock(mutex_);
  if (!rows_[x]) rows_[x] = std::move(fresh);
  return *rows_[x];
}

const TProduct& GammaTable::t_multiply(ElementId x, ElementId y) const { return row(x)[y]; }

Coefficient GammaTable::gamma(ElementId x, ElementId y, ElementId z) const {
  const TProduct& p = t_multiply(x, y);
  const ElementId target = cells_.system().inverse(z);
  auto it = std::lower_bound(p.begin(), p.end(), target, [](const auto& e, ElementId v) { return e.first < v; });
  return (it != p.end() && it->first == target) ? it->second : 0;
}

Coefficient total(const TProduct& p) {
  Coefficient sum = 0;
  for (const auto& [z, c] : p) sum += c;
  return sum;
}

std::vector<ElementId> stabilizer(const CellDecomposition& cells, const GammaTable& gammas, ElementId y) {
  std::vector<ElementId> out;
  for (const auto& [z, c] : gammas.t_multiply(y, cells.system().inverse(y))) out.push_back(z);
  return out;
}

}  // namespace cellkit
