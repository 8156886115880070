#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cellkit/context.hpp"

namespace cellkit {

/// Provenance attached to every Kostant classification: the character-level
/// criterion agrees with Kostant's problem only if this conjecture holds.
inline constexpr const char* kKostantConditionalOn =
    "conjectural equivalence, for Duflo elements d, of Kostant's problem for L_d with the "
    "injectivity of x -> [theta_x L_d] on its nonvanishing locus";

/// 1: k_conjectural; 2: km_star but not kh_bracket; 3: anything else.
enum class KostantClass { k = 1, km_not_kh = 2, none = 3 };

struct ConjecturalResult {
  bool value;
  const char* conditional_on;
};

/// Character-level classifiers, memoised per element.
class KostantAnalysis {
 public:
  explicit KostantAnalysis(const Context& ctx);

  /// x -> [theta_x L_y] is injective on {x : x^-1 <=_L y}.
  bool kh_bracket(ElementId y) const;
  /// t_y t_{y^-1} = t_d, i.e. the gamma-coefficients sum to 1.
  bool km_proxy(ElementId y) const;
  /// Indecomposability of every nonzero theta_x L_y, decided by the absence
  /// of a decomposition certificate. With t_x t_{x^-1} = sum_w g_w t_w,
  /// dim End(theta_x L_y)_0 = sum_w g_w dim hom(theta_w L_y, L_y<a(x)>).
  /// Each hom is bounded below by the multiplicity of L_y in degree a(x)
  /// when that degree is extreme in theta_w L_y, and by 1 for Duflo w.
  /// A bound >= 2 for the pair (x, y) or for its Koszul-Ringel dual
  /// (y^-1 w0, w0 x^-1) certifies a decomposition.
  bool km_star(ElementId y) const;
  /// km_proxy(y) and kh_bracket(d), d the Duflo element of the left cell of y.
  ConjecturalResult conjectural_kostant(ElementId y) const;
  /// Injectivity of x -> (h_{z,x,d})_z over {x : x <=_R d}, the index set
  /// written without inversion. Only defined for Duflo elements.
  bool kh_literal(ElementId d) const;
  KostantClass classify(ElementId y) const;

 private:
  void compute_kh() const;
  void compute_km_star() const;
  bool injective(ElementId y, const std::vector<ElementId>& xs) const;

  const Context& ctx_;
  mutable std::once_flag kh_once_;
  mutable std::vector<char> kh_;
  mutable std::once_flag km_star_once_;
  mutable std::vector<char> km_star_;
  mutable std::once_flag literal_once_;
  mutable std::vector<char> literal_;
};

bool kh_bracket(const Context& ctx, ElementId y);
bool km_proxy(const Context& ctx, ElementId y);
bool km_star(const Context& ctx, ElementId y);
ConjecturalResult conjectural_kostant(const Context& ctx, ElementId y);

struct KostantRecord {
  ElementId element;
  std::string word;
  bool duflo;
  bool kh_bracket;
  bool km_proxy;
  bool km_star;
  bool k_conjectural;
  KostantClass klass;
  std::uint32_t left_cell, right_cell, twosided_cell, h_cell;
  int a;
  std::size_t stabilizer_size;
  bool h_cell_max;
};

/// Duflo elements d where the two forms of the injectivity condition differ.
struct LiteralDiscrepancy {
  ElementId duflo;
  bool with_inverse;  // the form used by the classifier
  bool literal;
};

struct KostantReport {
  std::string cartan_type;  // as requested, e.g. "C"
  int rank = 0;
  std::string conditional_on = kKostantConditionalOn;
  std::vector<KostantRecord> elements;  // canonical order
  std::vector<LiteralDiscrepancy> discrepancies;
};

KostantReport cell_report(const Context& ctx);

/// Grids of left cells (rows) by right cells (columns) per two-sided cell;
/// column i holds the inverses of row i, so diagonal H-cells sit on the
/// diagonal with their Duflo element first.
std::string render_pretty(const Context& ctx, const KostantReport& report);
std::string render_json(const KostantReport& report);
/// Columns: word duflo kh_bracket km_proxy km_star k_conjectural class left_cell
/// right_cell twosided_cell h_cell a stabilizer_size
std::string render_tsv(const KostantReport& report);

}  // namespace cellkit
