#include <gtest/gtest.h>

#include <set>

#include "cellkit/context.hpp"
#include "oracle.hpp"

using namespace cellkit;

namespace {

using Relation = std::vector<std::vector<bool>>;

Relation closure(Relation r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

// Preorders straight from the definition: x <=_L y iff C_y occurs in some
// C_z C_x, x <=_R y iff C_y occurs in some C_x C_z.
void check_against_definition(CartanType type, int rank) {
  Context ctx(type, rank);
  const CoxeterSystem& W = ctx.system();
  const std::size_t n = W.order();
  oracle::KLOracle kl(W);
  Relation left(n, std::vector<bool>(n)), right = left, both = left;
  for (ElementId x = 0; x < n; ++x)
    for (ElementId z = 0; z < n; ++z) {
      for (const auto& [y, p] : kl.h(z, x)) left[x][y] = both[x][y] = true;
      for (const auto& [y, p] : kl.h(x, z)) right[x][y] = both[x][y] = true;
    }
  left = closure(left);
  right = closure(right);
  both = closure(both);
  const CellDecomposition& cells = ctx.cells();
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      ASSERT_EQ(cells.leq_L(x, y), left[x][y]) << W.word(x) << " " << W.word(y);
      ASSERT_EQ(cells.leq_R(x, y), right[x][y]) << W.word(x) << " " << W.word(y);
      ASSERT_EQ(cells.leq_J(x, y), both[x][y]) << W.word(x) << " " << W.word(y);
    }
}

std::set<std::set<std::string>> partition(const Context& ctx, CellKind kind) {
  std::set<std::set<std::string>> out;
  for (const auto& cell : ctx.cells().cells(kind)) {
    std::set<std::string> words;
    for (ElementId w : cell) words.insert(ctx.system().word(w));
    out.insert(words);
  }
  return out;
}

}  // namespace

TEST(Cells, PreordersMatchDefinitionA2) { check_against_definition(CartanType::A, 2); }
TEST(Cells, PreordersMatchDefinitionB2) { check_against_definition(CartanType::B, 2); }
TEST(Cells, PreordersMatchDefinitionG2) { check_against_definition(CartanType::G, 2); }

TEST(Cells, G2Partition) {
  Context ctx(CartanType::G, 2);
  using S = std::set<std::string>;
  EXPECT_EQ(partition(ctx, CellKind::left),
            (std::set<S>{{"e"}, {"1", "21", "121", "2121", "12121"}, {"2", "12", "212", "1212", "21212"}, {"121212"}}));
  EXPECT_EQ(partition(ctx, CellKind::twosided).size(), 3U);
  EXPECT_EQ(partition(ctx, CellKind::h),
            (std::set<S>{{"e"}, {"1", "121", "12121"}, {"21", "2121"}, {"12", "1212"}, {"2", "212", "21212"}, {"121212"}}));
  const CoxeterSystem& W = ctx.system();
  EXPECT_TRUE(ctx.cells().h_cell_max(W.parse_id("121")));
  EXPECT_FALSE(ctx.cells().h_cell_max(W.parse_id("21")));
}

TEST(Cells, LeftCellsHaveConstantRightDescents) {
  for (auto [type, rank] : {std::pair{CartanType::A, 3}, {CartanType::B, 3}, {CartanType::D, 4}}) {
    Context ctx(type, rank);
    for (const auto& cell : ctx.cells().cells(CellKind::left))
      for (ElementId w : cell) EXPECT_EQ(ctx.system().right_descents(w), ctx.system().right_descents(cell.front()));
  }
}

TEST(Cells, DufloElementsAreInvolutionsOnePerCell) {
  for (auto [type, rank] : {std::pair{CartanType::A, 3}, {CartanType::B, 3}, {CartanType::D, 4}}) {
    Context ctx(type, rank);
    const CellDecomposition& cells = ctx.cells();
    std::size_t duflos = 0;
    for (ElementId w = 0; w < cells.order(); ++w)
      if (cells.is_duflo(w)) {
        ++duflos;
        EXPECT_EQ(ctx.system().inverse(w), w);
        EXPECT_EQ(cells.duflo_of_left_cell(w), w);
        EXPECT_EQ(cells.duflo_of_right_cell(w), w);
      }
    EXPECT_EQ(duflos, cells.cells(CellKind::left).size());
  }
  Context a2(CartanType::A, 2);
  std::set<std::string> duflo;
  for (ElementId w = 0; w < a2.system().order(); ++w)
    if (a2.cells().is_duflo(w)) duflo.insert(a2.system().word(w));
  EXPECT_EQ(duflo, (std::set<std::string>{"e", "1", "2", "121"}));
}

TEST(Cells, AValueOfParabolicLongestElements) {
  Context ctx(CartanType::A, 3);
  const CoxeterSystem& W = ctx.system();
  for (GeneratorSet p = 0; p <= W.all_generators(); ++p) {
    const ElementId w = W.longest_in(p);
    EXPECT_EQ(ctx.cells().a_value(w), W.length(w)) << generator_set_string(p);
  }
}

TEST(Cells, FastAValuesMatchFullMaximum) {
  for (auto [type, rank] : {std::pair{CartanType::B, 3}, {CartanType::D, 4}, {CartanType::A, 4}}) {
    Context ctx(type, rank);
    EXPECT_EQ(a_values_fast(ctx.engine(), ctx.cells()), ctx.sweep().a_values());
  }
}

TEST(Cells, PrettyGridListsEveryElement) {
  Context ctx(CartanType::B, 3);
  const std::string grid = render_cell_grid(ctx.cells());
  for (ElementId w = 0; w < ctx.system().order(); ++w)
    EXPECT_NE(grid.find(" " + ctx.system().word(w) + " "), std::string::npos) << ctx.system().word(w);
}
