#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cellkit/context.hpp"

namespace cellkit {

/// Graded character of theta_x L_y: chr[z] is the graded multiplicity of L_z,
/// equal to h_{z,x^-1,y}.
struct TranslatedSimpleChar {
  ElementId x = 0;
  ElementId y = 0;
  std::map<ElementId, LaurentPoly> chr;
  /// Top degree, nullopt (= -infinity) for the zero module.
  Degree b;
  /// Unset for the zero module.
  std::optional<int> proj_dim;

  bool is_zero() const noexcept { return chr.empty(); }
  /// Composition factors per degree: degree -> [(z, multiplicity)] sorted by z.
  std::map<int, std::vector<std::pair<ElementId, Coefficient>>> by_degree() const;
};

/// One engine row (left factor x) via h_{z,x^-1,y} = h_{x,z^-1,y^-1}.
TranslatedSimpleChar translated_simple_char(const Context& ctx, ElementId x, ElementId y);

/// All characters theta_x L_y for fixed x and every y, indexed by y.
std::vector<std::map<ElementId, LaurentPoly>> characters_for_x(const Context& ctx, ElementId x);

/// [theta_x L_y : L_z<i>] == [theta_z L_{y^-1} : L_x<i>] for all i, computed
/// independently through direct products of KL basis elements.
bool char_symmetry_check(const Context& ctx, ElementId x, ElementId y, ElementId z);

/// max_z deg h_{z,x^-1,y}; nullopt for the zero module.
Degree b_value(const Context& ctx, ElementId x, ElementId y);

/// theta_x L_y != 0, i.e. x^-1 <=_L y.
bool nonzero_test(const Context& ctx, ElementId x, ElementId y);

/// a(w0 x) + b(y^-1 w0, w0 x^-1). Throws DomainError for the zero module.
int proj_dim(const Context& ctx, ElementId x, ElementId y);

/// 2 b(x,y); nullopt (= -infinity) for the zero module.
Degree graded_length(const Context& ctx, ElementId x, ElementId y);

/// Projective dimension of the singular simple module indexed by w for the
/// parabolic subset p: b(x, y) + a(y) with y = w0 w0^p and x = w^-1 w0.
/// w must be the longest element of its coset w W_p (p within the right
/// descents of w); anything else raises DomainError.
int singular_projdim(const Context& ctx, GeneratorSet parabolic, ElementId w);

/// One summand theta_z L_d of a translated simple module, with multiplicity.
struct CellSummand {
  ElementId z;
  ElementId d;
  Coefficient multiplicity;
};

/// Decomposition of theta_x L_y for x ~J y: the sum over z of
/// theta_z L_d^{gamma_{y,x,z^-1}}, d the Duflo element of the right cell of y.
/// Empty for the zero module. UsageError unless x ~J y.
std::vector<CellSummand> cell_summands(const Context& ctx, ElementId x, ElementId y);

/// "-inf" or the number.
std::string degree_string(const Degree& d);

}  // namespace cellkit
