#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "cellkit/kl_table.hpp"
#include "cellkit/laurent.hpp"

namespace cellkit {

/// Dense view of a Laurent polynomial: coeffs[i] is the coefficient of
/// v^(low+i); the first and last coefficients are nonzero.
struct PolyView {
  int low = 0;
  std::span<const Coefficient> coeffs;

  bool is_zero() const noexcept { return coeffs.empty(); }
  int degree() const noexcept { return low + static_cast<int>(coeffs.size()) - 1; }
  Coefficient coefficient(int exponent) const noexcept {
    int i = exponent - low;
    return (i < 0 || i >= static_cast<int>(coeffs.size())) ? 0 : coeffs[i];
  }
  LaurentPoly to_poly() const { return LaurentPoly::from_dense(low, coeffs); }
};

/// Compact KL-basis expansion sum_u c_u C_u, sorted by u.
class ProductVector {
 public:
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  ElementId element(std::size_t i) const { return elems_[i]; }
  PolyView poly(std::size_t i) const {
    return {lows_[i], {coeffs_.data() + offsets_[i], coeffs_.data() + offsets_[i + 1]}};
  }
  std::span<const ElementId> elements() const noexcept { return elems_; }
  /// Coefficient of C_u (zero if absent).
  LaurentPoly coefficient_of(ElementId u) const;
  PolyView view_of(ElementId u) const;
  std::map<ElementId, LaurentPoly> to_map() const;

  void append(ElementId u, int low, std::span<const Coefficient> coeffs);

 private:
  std::vector<ElementId> elems_;
  std::vector<int> lows_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<Coefficient> coeffs_;
};

/// Products C_z C_w for a fixed left factor z and all w, by induction on
/// the length of w:
///   C_z C_w = (C_z C_w') C_s - sum_{u < w', us < u} mu(u,w') C_z C_u,  w = w's > w'.
/// Thread-safe: each call uses its own scratch space.
class ProductEngine {
 public:
  /// Forces the whole KL table; the table must outlive the engine.
  explicit ProductEngine(const KLTable& table);

  const KLTable& table() const noexcept { return table_; }
  const CoxeterSystem& system() const noexcept { return table_.system(); }

  using Sink = std::function<void(ElementId w, const ProductVector& product)>;
  /// Calls sink(w, C_z C_w) for every w in canonical order.
  void products_with_fixed_left(ElementId z, const Sink& sink) const;
  /// All products C_z C_w, indexed by w.
  std::vector<ProductVector> row(ElementId z) const;
  /// h_{x,y,z} for all z via the row of x.
  std::map<ElementId, LaurentPoly> product(ElementId x, ElementId y) const;

 private:
  std::span<const MuEdge> right_star(ElementId u, Generator s) const {
    std::size_t k = static_cast<std::size_t>(u) * rank_ + s;
    return {star_edges_.data() + star_offsets_[k], star_edges_.data() + star_offsets_[k + 1]};
  }

  const KLTable& table_;
  int rank_;
  int window_;  // exponents handled: [-window_, window_]
  // For us > u: u' < u with u's < u' and mu(u',u) != 0.
  std::vector<std::uint32_t> star_offsets_;
  std::vector<MuEdge> star_edges_;
  std::vector<Generator> split_generator_;  // right descent used for w
};

}  // namespace cellkit
