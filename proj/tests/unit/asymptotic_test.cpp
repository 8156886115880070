#include <gtest/gtest.h>

#include "cellkit/context.hpp"
#include "oracle.hpp"

using namespace cellkit;

namespace {

std::map<std::string, Coefficient> named(const CoxeterSystem& W, const TProduct& p) {
  std::map<std::string, Coefficient> out;
  for (auto [z, c] : p) out[W.word(z)] = c;
  return out;
}

}  // namespace

TEST(Asymptotic, G2Products) {
  Context ctx(CartanType::G, 2);
  const CoxeterSystem& W = ctx.system();
  const GammaTable& g = ctx.gammas();
  auto t = [&](const char* x, const char* y) { return named(W, g.t_multiply(W.parse_id(x), W.parse_id(y))); };
  using M = std::map<std::string, Coefficient>;
  EXPECT_EQ(t("12", "21"), (M{{"1", 1}, {"121", 1}}));
  EXPECT_EQ(t("121", "121"), (M{{"1", 1}, {"121", 1}, {"12121", 1}}));
  EXPECT_EQ(t("1", "1"), (M{{"1", 1}}));
  EXPECT_EQ(t("e", "e"), (M{{"e", 1}}));
  EXPECT_TRUE(t("1", "2").empty());
  EXPECT_EQ(total(g.t_multiply(W.parse_id("12"), W.parse_id("21"))), 2);
}

TEST(Asymptotic, GammaIsTopCoefficientOfOracleProducts) {
  for (auto [type, rank] : {std::pair{CartanType::B, 2}, {CartanType::A, 3}}) {
    Context ctx(type, rank);
    const CoxeterSystem& W = ctx.system();
    oracle::KLOracle kl(W);
    for (ElementId x = 0; x < W.order(); ++x)
      for (ElementId y = 0; y < W.order(); ++y) {
        std::map<ElementId, Coefficient> expected;
        for (const auto& [z, p] : kl.h(x, y)) {
          auto it = p.find(ctx.cells().a_value(z));
          if (it != p.end()) expected[z] = it->second;
        }
        std::map<ElementId, Coefficient> got;
        for (auto [z, c] : ctx.gammas().t_multiply(x, y)) got[z] = c;
        ASSERT_EQ(got, expected) << W.word(x) << " " << W.word(y);
        for (auto [z, c] : got) EXPECT_EQ(ctx.gammas().gamma(x, y, W.inverse(z)), c);
      }
  }
}

TEST(Asymptotic, Stabilizer) {
  Context ctx(CartanType::G, 2);
  const CoxeterSystem& W = ctx.system();
  auto stab = stabilizer(ctx.cells(), ctx.gammas(), W.parse_id("12"));
  std::set<std::string> words;
  for (ElementId z : stab) words.insert(W.word(z));
  EXPECT_EQ(words, (std::set<std::string>{"1", "121"}));
  EXPECT_EQ(stabilizer(ctx.cells(), ctx.gammas(), W.parse_id("1")).size(), 1U);
}

TEST(Asymptotic, DiagonalHCellsAreElementaryAbelian) {
  for (auto [type, rank] : {std::pair{CartanType::B, 3}, {CartanType::D, 4}}) {
    Context ctx(type, rank);
    const CoxeterSystem& W = ctx.system();
    const CellDecomposition& cells = ctx.cells();
    for (ElementId d = 0; d < W.order(); ++d) {
      if (!cells.is_duflo(d)) continue;
      const auto& H = cells.members(CellKind::h, cells.h_cell(d));
      for (ElementId a : H) {
        EXPECT_EQ(named(W, ctx.gammas().t_multiply(a, a)), (std::map<std::string, Coefficient>{{W.word(d), 1}}));
        for (ElementId b : H) {
          const TProduct& ab = ctx.gammas().t_multiply(a, b);
          ASSERT_EQ(ab.size(), 1U);
          EXPECT_EQ(ab.front().second, 1);
          EXPECT_EQ(cells.h_cell(ab.front().first), cells.h_cell(d));
          EXPECT_EQ(ab, ctx.gammas().t_multiply(b, a));
        }
      }
    }
  }
}

TEST(Asymptotic, G2MiddleHCellIsNotAGroup) {
  Context ctx(CartanType::G, 2);
  const CoxeterSystem& W = ctx.system();
  const ElementId x = W.parse_id("121");
  EXPECT_EQ(named(W, ctx.gammas().t_multiply(x, x)),
            (std::map<std::string, Coefficient>{{"1", 1}, {"121", 1}, {"12121", 1}}));
}
