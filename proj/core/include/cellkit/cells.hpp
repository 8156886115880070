#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cellkit/kl_table.hpp"

namespace cellkit {

class GammaTable;
class ProductEngine;

enum class CellKind { left, right, twosided, h };

const char* to_string(CellKind kind);

/// Left, right, two-sided and H-cells of W together with a-values and Duflo
/// elements.
///
/// Convention: x <=_L y when C_y occurs in C_z C_x for some z, so e is the
/// minimum and w0 the maximum. Left cells have constant right descent sets.
/// Cell ids of every kind are numbered by the canonical order of their
/// ShortLex-minimal member.
class CellDecomposition {
 public:
  using CellId = std::uint32_t;
  using ASource = std::function<std::vector<int>(const CellDecomposition&)>;

  /// Builds the preorders from generator products C_s C_x, then asks
  /// `a_source` for a-values (it may already inspect the cell partition).
  CellDecomposition(const KLTable& table, const ASource& a_source);

  const CoxeterSystem& system() const noexcept { return *system_; }
  std::size_t order() const noexcept { return n_; }

  bool leq_L(ElementId x, ElementId y) const { return reach_left_[x].test(y); }
  bool leq_R(ElementId x, ElementId y) const { return reach_right_[x].test(y); }
  bool leq_J(ElementId x, ElementId y) const { return reach_twosided_[x].test(y); }

  CellId cell_id(CellKind kind, ElementId w) const { return ids_[static_cast<int>(kind)][w]; }
  CellId left_cell(ElementId w) const { return cell_id(CellKind::left, w); }
  CellId right_cell(ElementId w) const { return cell_id(CellKind::right, w); }
  CellId twosided_cell(ElementId w) const { return cell_id(CellKind::twosided, w); }
  CellId h_cell(ElementId w) const { return cell_id(CellKind::h, w); }

  /// Members of each cell in canonical order.
  const std::vector<std::vector<ElementId>>& cells(CellKind kind) const { return members_[static_cast<int>(kind)]; }
  const std::vector<ElementId>& members(CellKind kind, CellId id) const { return cells(kind)[id]; }

  int a_value(ElementId z) const { return a_[z]; }
  const std::vector<int>& a_values() const noexcept { return a_; }
  bool is_duflo(ElementId w) const { return duflo_[w]; }
  /// The Duflo element of the left (resp. right) cell containing w.
  ElementId duflo_of_left_cell(ElementId w) const { return left_duflo_[left_cell(w)]; }
  ElementId duflo_of_right_cell(ElementId w) const { return right_duflo_[right_cell(w)]; }

  /// |H-cell of y| equals the largest H-cell size in the two-sided cell of y.
  bool h_cell_max(ElementId y) const;

  /// Generator-step edges x -> y (meaning x <=_L y) of the left preorder.
  const std::vector<std::pair<ElementId, ElementId>>& left_edges() const noexcept { return left_edges_; }

 private:
  class Bits {
   public:
    explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

   private:
    std::vector<std::uint64_t> words_;
  };

  static std::vector<Bits> closure(std::size_t n, const std::vector<std::vector<ElementId>>& adj);
  void assign_cells(CellKind kind, const std::vector<std::uint32_t>& component);

  std::shared_ptr<const CoxeterSystem> system_;
  std::size_t n_;
  std::vector<std::pair<ElementId, ElementId>> left_edges_;
  std::vector<Bits> reach_left_, reach_right_, reach_twosided_;
  std::vector<CellId> ids_[4];
  std::vector<std::vector<ElementId>> members_[4];
  std::vector<int> a_;
  std::vector<bool> duflo_;
  std::vector<ElementId> left_duflo_, right_duflo_;
};

/// a-values by the exact double maximum over all products.
std::vector<int> a_values_full(const ProductEngine& engine, int threads = 1);

/// a-values from one row per two-sided cell J: a(J) is the top degree of
/// h_{x,w,u} over w, u in J for the ShortLex-minimal x in J. Valid because
/// deg h_{x,w,u} <= a(u) always and t_x t_{x^-1} != 0 attains the bound.
std::vector<int> a_values_fast(const ProductEngine& engine, const CellDecomposition& cells);

/// Text grid per two-sided cell: rows are left cells and column i holds the
/// inverses of row i, so diagonal H-cells sit on the diagonal. Each H-cell
/// lists its Duflo element first; `annotate(w)` is appended to each word.
std::string render_cell_grid(const CellDecomposition& cells,
                             const std::function<std::string(ElementId)>& annotate = {});

/// {z in the diagonal H-cell of the right cell of y : gamma_{y,y^-1,z^-1} != 0},
/// i.e. the t-support of t_y t_{y^-1}.
std::vector<ElementId> stabilizer(const CellDecomposition& cells, const GammaTable& gammas, ElementId y);

}  // namespace cellkit
