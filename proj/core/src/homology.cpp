#include "cellkit/homology.hpp"

#include "cellkit/errors.hpp"
#include "cellkit/hecke.hpp"

namespace cellkit {

std::map<int, std::vector<std::pair<ElementId, Coefficient>>> TranslatedSimpleChar::by_degree() const {
  std::map<int, std::vector<std::pair<ElementId, Coefficient>>> out;
  for (const auto& [z, p] : chr)
    for (const auto& t : p.terms()) out[t.exponent].emplace_back(z, t.coeff);
  return out;
}

std::vector<std::map<ElementId, LaurentPoly>> characters_for_x(const Context& ctx, ElementId x) {
  const CoxeterSystem& W = ctx.system();
  std::vector<std::map<ElementId, LaurentPoly>> out(W.order());
  ctx.engine().products_with_fixed_left(x, [&](ElementId w, const ProductVector& p) {
    const ElementId z = W.inverse(w);
    for (std::size_t i = 0; i < p.size(); ++i) out[W.inverse(p.element(i))].emplace(z, p.poly(i).to_poly());
  });
  return out;
}

TranslatedSimpleChar translated_simple_char(const Context& ctx, ElementId x, ElementId y) {
  const CoxeterSystem& W = ctx.system();
  TranslatedSimpleChar c;
  c.x = x;
  c.y = y;
  const ElementId target = W.inverse(y);
  ctx.engine().products_with_fixed_left(x, [&](ElementId w, const ProductVector& p) {
    PolyView v = p.view_of(target);
    if (!v.is_zero()) c.chr.emplace(W.inverse(w), v.to_poly());
  });
  for (const auto& [z, p] : c.chr) c.b = std::max(c.b.value_or(INT32_MIN), *p.degree());
  if (!c.is_zero()) c.proj_dim = proj_dim(ctx, x, y);
  return c;
}

bool char_symmetry_check(const Context& ctx, ElementId x, ElementId y, ElementId z) {
  const CoxeterSystem& W = ctx.system();
  auto coeff = [](const std::map<ElementId, LaurentPoly>& m, ElementId k) {
    auto it = m.find(k);
    return it == m.end() ? LaurentPoly() : it->second;
  };
  LaurentPoly lhs = coeff(h_constants(ctx.kl(), z, W.inverse(x)), y);
  LaurentPoly rhs = coeff(h_constants(ctx.kl(), x, W.inverse(z)), W.inverse(y));
  return lhs == rhs;
}

Degree b_value(const Context& ctx, ElementId x, ElementId y) { return ctx.sweep().b(x, y); }

bool nonzero_test(const Context& ctx, ElementId x, ElementId y) {
  return ctx.cells().leq_L(ctx.system().inverse(x), y);
}

std::vector<CellSummand> cell_summands(const Context& ctx, ElementId x, ElementId y) {
  const CellDecomposition& cells = ctx.cells();
  const CoxeterSystem& W = ctx.system();
  if (cells.twosided_cell(x) != cells.twosided_cell(y))
    throw UsageError(W.word(x) + " and " + W.word(y) + " lie in different two-sided cells");
  std::vector<CellSummand> out;
  if (cells.left_cell(W.inverse(x)) != cells.left_cell(y)) return out;
  const ElementId d = cells.duflo_of_right_cell(y);
  for (auto [z, g] : ctx.gammas().t_multiply(y, x)) out.push_back({z, d, g});
  return out;
}

int proj_dim(const Context& ctx, ElementId x, ElementId y) {
  const CoxeterSystem& W = ctx.system();
  if (!nonzero_test(ctx, x, y))
    throw DomainError("theta_" + W.word(x) + " L_" + W.word(y) + " is zero; its projective dimension is undefined");
  const ElementId w0 = W.longest_id();
  Degree b = b_value(ctx, W.multiply(W.inverse(y), w0), W.multiply(w0, W.inverse(x)));
  if (!b) throw std::logic_error("Koszul-dual character vanishes for a nonzero module");
  return ctx.cells().a_value(W.multiply(w0, x)) + *b;
}

Degree graded_length(const Context& ctx, ElementId x, ElementId y) {
  Degree b = b_value(ctx, x, y);
  if (!b) return b;
  return 2 * *b;
}

int singular_projdim(const Context& ctx, GeneratorSet parabolic, ElementId w) {
  const CoxeterSystem& W = ctx.system();
  if (parabolic & ~W.all_generators()) throw UsageError("parabolic subset is not contained in S");
  if ((W.right_descents(w) & parabolic) != parabolic)
    throw DomainError(W.word(w) + " is not the longest representative of its coset modulo the parabolic subgroup {" +
                      generator_set_string(parabolic) + "}");
  const ElementId w0 = W.longest_id();
  const ElementId y = W.multiply(w0, W.longest_in(parabolic));
  const ElementId x = W.multiply(W.inverse(w), w0);
  Degree b = b_value(ctx, x, y);
  if (!b) throw DomainError("the singular module indexed by " + W.word(w) + " has no defined projective dimension");
  return *b + ctx.cells().a_value(y);
}

std::string degree_string(const Degree& d) { return d ? std::to_string(*d) : "-inf"; }

}  // namespace cellkit
