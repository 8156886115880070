#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "cellkit/context.hpp"
#include "cellkit/errors.hpp"
#include "cellkit/kl_cache.hpp"

using namespace cellkit;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("cellkit_cache_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

nlohmann::json read_json(const fs::path& file) {
  std::ifstream in(file);
  return nlohmann::json::parse(in);
}

void write_json(const fs::path& file, const nlohmann::json& j) {
  std::ofstream out(file);
  out << j.dump();
}

}  // namespace

TEST(Cache, RoundTrip) {
  TempDir dir;
  auto W = CoxeterSystem::create(CartanType::B, 3);
  KLTable fresh(W);
  fresh.precompute_all();
  const fs::path file = kl_cache_path(dir.path(), CartanType::B, 3);
  EXPECT_EQ(file.filename(), "kl_B3.json");
  save_kl_cache(fresh, file);
  auto loaded = load_kl_cache(W, file);
  for (ElementId w = 0; w < W->order(); ++w)
    for (ElementId y = 0; y < W->order(); ++y) ASSERT_EQ(loaded->p(y, w), fresh.p(y, w));
  for (ElementId w = 0; w < W->order(); ++w) {
    ASSERT_EQ(loaded->mu_below(w).size(), fresh.mu_below(w).size());
  }
  const CacheInfo info = inspect_kl_cache(file);
  EXPECT_TRUE(info.checksum_ok());
  EXPECT_EQ(info.format_version, kCacheFormatVersion);
  EXPECT_EQ(info.normalization, kCacheNormalization);
  EXPECT_EQ(info.order, 48U);
}

TEST(Cache, ContextUsesCacheAndOutputsAgree) {
  TempDir dir;
  {
    KLTable t(CoxeterSystem::create(CartanType::D, 4));
    t.precompute_all();
    save_kl_cache(t, kl_cache_path(dir.path(), CartanType::D, 4));
  }
  ContextOptions opts;
  opts.cache_dir = dir.path();
  Context cached(CartanType::D, 4, opts);
  Context direct(CartanType::D, 4);
  EXPECT_TRUE(cached.kl_from_cache());
  EXPECT_FALSE(direct.kl_from_cache());
  EXPECT_EQ(cached.cells().a_values(), direct.cells().a_values());
  for (ElementId w = 0; w < 192; ++w) EXPECT_EQ(cached.cells().left_cell(w), direct.cells().left_cell(w));
}

TEST(Cache, CorruptionIsRejected) {
  TempDir dir;
  auto W = CoxeterSystem::create(CartanType::B, 2);
  KLTable t(W);
  t.precompute_all();
  const fs::path file = kl_cache_path(dir.path(), CartanType::B, 2);
  save_kl_cache(t, file);
  const nlohmann::json good = read_json(file);

  // Tampered coefficient: checksum mismatch.
  nlohmann::json bad = good;
  for (auto& rec : bad["records"])
    if (!rec[2].empty()) {
      rec[2][0][1] = "7";
      break;
    }
  write_json(file, bad);
  EXPECT_FALSE(inspect_kl_cache(file).checksum_ok());
  EXPECT_THROW(load_kl_cache(W, file), CacheError);

  // Wrong group.
  write_json(file, good);
  EXPECT_THROW(load_kl_cache(CoxeterSystem::create(CartanType::A, 2), file), CacheError);

  // Header mismatch.
  bad = good;
  bad["normalization"] = "classical-q";
  write_json(file, bad);
  EXPECT_THROW(load_kl_cache(W, file), CacheError);
  bad = good;
  bad["format_version"] = kCacheFormatVersion + 1;
  write_json(file, bad);
  EXPECT_THROW(load_kl_cache(W, file), CacheError);

  // Truncated file.
  {
    std::ofstream out(file);
    out << good.dump().substr(0, 40);
  }
  EXPECT_THROW(load_kl_cache(W, file), CacheError);

  // A corrupt cache in the cache directory is an error, never recomputed.
  ContextOptions opts;
  opts.cache_dir = dir.path();
  Context ctx(CartanType::B, 2, opts);
  EXPECT_THROW(ctx.kl(), CacheError);
}
