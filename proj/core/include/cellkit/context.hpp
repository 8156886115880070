#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string_view>

#include "cellkit/asymptotic.hpp"
#include "cellkit/cells.hpp"
#include "cellkit/coxeter.hpp"
#include "cellkit/kl_table.hpp"
#include "cellkit/product_engine.hpp"
#include "cellkit/sweep.hpp"

namespace cellkit {

enum class AMode { full, fast };

struct ContextOptions {
  int threads = 1;
  AMode a_mode = AMode::full;
  /// If set, the KL table is loaded from this directory when a cache file
  /// exists (a corrupt file raises CacheError).
  std::optional<std::filesystem::path> cache_dir;
  std::function<void(std::string_view)> progress;
};

/// Owns one Coxeter system and every derived table, each built on first use.
/// All accessors are thread-safe.
class Context {
 public:
  Context(CartanType type, int rank, ContextOptions options = {});
  explicit Context(std::shared_ptr<const CoxeterSystem> system, ContextOptions options = {});
  ~Context();

  const CoxeterSystem& system() const noexcept { return *system_; }
  const std::shared_ptr<const CoxeterSystem>& system_ptr() const noexcept { return system_; }
  const ContextOptions& options() const noexcept { return options_; }

  const KLTable& kl() const;
  const ProductEngine& engine() const;
  /// Full pass over all products (a-values, b-values, character digests).
  const SweepResult& sweep() const;
  const CellDecomposition& cells() const;
  const GammaTable& gammas() const;

  /// True when the KL table came from the disk cache.
  bool kl_from_cache() const;

 private:
  void report(std::string_view message) const;

  std::shared_ptr<const CoxeterSystem> system_;
  ContextOptions options_;
  mutable std::recursive_mutex mutex_;
  mutable std::unique_ptr<KLTable> kl_;
  mutable bool kl_from_cache_ = false;
  mutable std::unique_ptr<ProductEngine> engine_;
  mutable std::unique_ptr<SweepResult> sweep_;
  mutable std::unique_ptr<CellDecomposition> cells_;
  mutable std::unique_ptr<GammaTable> gammas_;
};

}  // namespace cellkit
