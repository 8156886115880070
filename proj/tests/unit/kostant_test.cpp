#include <gtest/gtest.h>

#include <json.hpp>

#include "cellkit/errors.hpp"
#include "cellkit/kostant.hpp"

using namespace cellkit;

TEST(Kostant, G2Columns) {
  Context ctx(CartanType::G, 2);
  const CoxeterSystem& W = ctx.system();
  KostantAnalysis k(ctx);
  struct Row {
    const char* y;
    bool K, KM, Kh;
  };
  for (Row r : {Row{"1", true, true, true}, Row{"12", false, false, true}, Row{"121", false, false, false},
                Row{"1212", false, false, true}, Row{"12121", true, true, true}}) {
    const ElementId y = W.parse_id(r.y);
    EXPECT_EQ(k.conjectural_kostant(y).value, r.K) << r.y;
    EXPECT_EQ(k.km_proxy(y), r.KM) << r.y;
    EXPECT_EQ(k.km_star(y), r.KM) << r.y;
    EXPECT_EQ(k.kh_bracket(y), r.Kh) << r.y;
  }
  EXPECT_TRUE(k.kh_bracket(W.identity_id()));
  EXPECT_STREQ(k.conjectural_kostant(W.identity_id()).conditional_on, kKostantConditionalOn);
}

TEST(Kostant, TypeAProxiesAreTrivial) {
  for (int rank : {2, 3}) {
    Context ctx(CartanType::A, rank);
    KostantAnalysis k(ctx);
    for (ElementId y = 0; y < ctx.system().order(); ++y) {
      EXPECT_TRUE(k.km_proxy(y));
      EXPECT_EQ(k.conjectural_kostant(y).value, k.kh_bracket(ctx.cells().duflo_of_left_cell(y)));
    }
  }
  Context a3(CartanType::A, 3);
  EXPECT_FALSE(conjectural_kostant(a3, a3.system().parse_id("13")).value);
}

TEST(Kostant, InvariantsOnClassicalTypes) {
  for (auto [type, rank] : {std::pair{CartanType::B, 3}, {CartanType::D, 4}}) {
    Context ctx(type, rank);
    const CellDecomposition& cells = ctx.cells();
    KostantAnalysis k(ctx);
    for (ElementId y = 0; y < cells.order(); ++y) {
      const ElementId first = cells.members(CellKind::h, cells.h_cell(y)).front();
      EXPECT_EQ(k.kh_bracket(y), k.kh_bracket(first));
      EXPECT_EQ(k.km_proxy(y), k.km_proxy(first));
      EXPECT_EQ(k.km_star(y), k.km_star(first));
      EXPECT_EQ(k.conjectural_kostant(y).value, k.conjectural_kostant(first).value);
      if (!cells.h_cell_max(y)) {
        EXPECT_FALSE(k.km_proxy(y));
        EXPECT_NE(k.classify(y), KostantClass::k);
      }
      if (cells.is_duflo(y) && k.conjectural_kostant(y).value) EXPECT_TRUE(k.km_proxy(y));
      // km_star also covers x = y^-1.
      if (k.km_star(y)) EXPECT_TRUE(k.km_proxy(y));
    }
  }
}

TEST(Kostant, LiteralFormOnlyForDuflo) {
  Context ctx(CartanType::B, 2);
  KostantAnalysis k(ctx);
  EXPECT_NO_THROW(k.kh_literal(ctx.system().identity_id()));
  EXPECT_THROW(k.kh_literal(ctx.system().parse_id("12")), UsageError);
}

TEST(Kostant, Renderers) {
  Context ctx(CartanType::B, 2);
  const KostantReport rep = cell_report(ctx);
  ASSERT_EQ(rep.elements.size(), 8U);
  auto doc = nlohmann::json::parse(render_json(rep));
  EXPECT_EQ(doc["cartan_type"], "B");
  EXPECT_EQ(doc["rank"], 2);
  EXPECT_EQ(doc["conditional_on"], kKostantConditionalOn);
  ASSERT_EQ(doc["elements"].size(), 8U);
  for (const char* key : {"word", "duflo", "kh_bracket", "km_proxy", "k_conjectural", "left_cell", "right_cell", "a"})
    EXPECT_TRUE(doc["elements"][0].contains(key)) << key;
  const std::string tsv = render_tsv(rep);
  EXPECT_EQ(std::count(tsv.begin(), tsv.end(), '\n'), 9);
  EXPECT_EQ(tsv.rfind("word\tduflo\tkh_bracket\tkm_proxy\tkm_star\tk_conjectural\tclass", 0), 0U);
  const std::string pretty = render_pretty(ctx, rep);
  EXPECT_NE(pretty.find("Conditional on:"), std::string::npos);
}
