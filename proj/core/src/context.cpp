#include "cellkit/context.hpp"

#include <stdexcept>
#include <string>

#include "cellkit/kl_cache.hpp"

namespace cellkit {

Context::Context(CartanType type, int rank, ContextOptions options)
    : Context(CoxeterSystem::create(type, rank), std::move(options)) {}

Context::Context(std::shared_ptr<const CoxeterSystem> system, ContextOptions options)
    : system_(std::move(system)), options_(std::move(options)) {}

Context::~Context() = default;

void Context::report(std::string_view message) const {
  if (options_.progress) options_.progress(message);
}

const KLTable& Context::kl() const {
  std::lock_guard lock(mutex_);
  if (!kl_) {
    if (options_.cache_dir) {
      auto file = kl_cache_path(*options_.cache_dir, system_->cartan_type(), system_->rank());
      if (std::filesystem::exists(file)) {
        report("loading KL table from " + file.string());
        kl_ = load_kl_cache(system_, file);
        kl_from_cache_ = true;
      }
    }
    if (!kl_) {
      report("computing KL polynomials for " + system_->name());
      kl_ = std::make_unique<KLTable>(system_);
    }
  }
  return *kl_;
}

bool Context::kl_from_cache() const {
  kl();
  std::lock_guard lock(mutex_);
  return kl_from_cache_;
}

const ProductEngine& Context::engine() const {
  std::lock_guard lock(mutex_);
  if (!engine_) engine_ = std::make_unique<ProductEngine>(kl());
  return *engine_;
}

const SweepResult& Context::sweep() const {
  std::lock_guard lock(mutex_);
  if (!sweep_) {
    report("sweeping all " + std::to_string(system_->order()) + " product rows");
    std::size_t last = 0;
    auto progress = [&](std::size_t done, std::size_t total) {
      if (done * 10 / total != last * 10 / total || done == total)
        report("  rows " + std::to_string(done) + "/" + std::to_string(total));
      last = done;
    };
    sweep_ = std::make_unique<SweepResult>(
        run_sweep(engine(), options_.threads, options_.progress ? std::function(progress) : nullptr));
  }
  return *sweep_;
}

const CellDecomposition& Context::cells() const {
  std::lock_guard lock(mutex_);
  if (!cells_) {
    const ProductEngine& eng = engine();
    cells_ = std::make_unique<CellDecomposition>(kl(), [&](const CellDecomposition& partial) {
      if (options_.a_mode == AMode::fast) {
        report("a-function (cell-restricted mode)");
        std::vector<int> fast = a_values_fast(eng, partial);
        if (system_->rank() <= 3 && fast != sweep().a_values())
          throw std::logic_error("cell-restricted a-function disagrees with the full maximum");
        return fast;
      }
      return sweep().a_values();
    });
  }
  return *cells_;
}

const GammaTable& Context::gammas() const {
  std::lock_guard lock(mutex_);
  if (!gammas_) gammas_ = std::make_unique<GammaTable>(engine(), cells());
  return *gammas_;
}

}  // namespace cellkit
