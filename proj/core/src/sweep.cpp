#include "cellkit/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <thread>

namespace cellkit {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

void CharacterDigest::add(ElementId z, const PolyView& p) {
  std::uint64_t h1 = splitmix(0x1234567ULL + z);
  std::uint64_t h2 = splitmix(0xabcdef1ULL ^ (std::uint64_t{z} << 20));
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.low + static_cast<int>(i))) << 32) ^
                        static_cast<std::uint64_t>(p.coeffs[i]);
    h1 = splitmix(h1 ^ key);
    h2 = splitmix(h2 + key * 0x9e3779b97f4a7c15ULL);
  }
  lo += h1;
  hi += h2;
}

SweepResult run_sweep(const ProductEngine& engine, int threads,
                      const std::function<void(std::size_t, std::size_t)>& progress) {
  const CoxeterSystem& W = engine.system();
  const std::size_t n = W.order();
  SweepResult result(n);
  threads = std::max(1, std::min<int>(threads, static_cast<int>(n)));

  std::vector<std::vector<int>> local_a(threads, std::vector<int>(n, -1));
  std::atomic<std::size_t> done{0};
  std::mutex m;
  std::condition_variable cv;

  auto work = [&](int t) {
    const std::size_t begin = n * t / threads, end = n * (t + 1) / threads;
    std::vector<int>& amax = local_a[t];
    for (std::size_t x = begin; x < end; ++x) {
      std::int8_t* brow = result.b_.data() + x * n;
      CharacterDigest* drow = result.digest_.data() + x * n;
      engine.products_with_fixed_left(static_cast<ElementId>(x), [&](ElementId w, const ProductVector& p) {
        const ElementId z = W.inverse(w);
        for (std::size_t i = 0; i < p.size(); ++i) {
          const ElementId u = p.element(i);
          const PolyView poly = p.poly(i);
          const int deg = poly.degree();
          amax[u] = std::max(amax[u], deg);
          const ElementId y = W.inverse(u);
          brow[y] = std::max<std::int8_t>(brow[y], static_cast<std::int8_t>(deg));
          drow[y].add(z, poly);
        }
      });
      done.fetch_add(1, std::memory_order_relaxed);
      if (t == 0 && progress) progress(done.load(), n);
      cv.notify_one();
    }
  };

  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  if (progress) {
    std::unique_lock lock(m);
    while (done.load() < n) {
      cv.wait_for(lock, std::chrono::milliseconds(200));
      progress(done.load(), n);
    }
  }
  for (auto& th : pool) th.join();
  for (const auto& amax : local_a)
    for (std::size_t u = 0; u < n; ++u) result.a_max_[u] = std::max(result.a_max_[u], amax[u]);
  return result;
}

std::vector<int> max_degrees_over_rows(const ProductEngine& engine, const std::vector<ElementId>& rows) {
  std::vector<int> amax(engine.system().order(), -1);
  for (ElementId x : rows)
    engine.products_with_fixed_left(x, [&](ElementId, const ProductVector& p) {
      for (std::size_t i = 0; i < p.size(); ++i) amax[p.element(i)] = std::max(amax[p.element(i)], p.poly(i).degree());
    });
  return amax;
}

}  // namespace cellkit
