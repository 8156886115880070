#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "cellkit/coxeter.hpp"
#include "cellkit/laurent.hpp"

namespace cellkit {

/// (z, mu(z, w)) for z < w with nonzero mu.
struct MuEdge {
  ElementId z;
  int mu;
};

/// All KL polynomials p(y, w) for one fixed w, sorted by y.
struct KLColumn {
  std::vector<ElementId> ys;
  std::vector<LaurentPoly> ps;
  std::vector<MuEdge> mu_below;

  const LaurentPoly* find(ElementId y) const;
};

/// Memoized Kazhdan-Lusztig polynomials in the normalisation
/// C_w = H_w + sum_{y<w} p(y,w) H_y with p(y,w) in vZ[v].
///
/// Columns are computed on demand (thread-safe; each column is published
/// once and never changes) or all at once by precompute_all().
class KLTable {
 public:
  explicit KLTable(std::shared_ptr<const CoxeterSystem> system);
  /// Builds a complete table from externally supplied columns, e.g. a disk
  /// cache. Columns are validated against the basic invariants.
  KLTable(std::shared_ptr<const CoxeterSystem> system, std::vector<KLColumn> columns);
  ~KLTable();

  KLTable(const KLTable&) = delete;
  KLTable& operator=(const KLTable&) = delete;

  const CoxeterSystem& system() const noexcept { return *system_; }
  const std::shared_ptr<const CoxeterSystem>& system_ptr() const noexcept { return system_; }

  const KLColumn& column(ElementId w) const;
  /// p(y,w); zero unless y <= w.
  LaurentPoly p(ElementId y, ElementId w) const;
  LaurentPoly kl_polynomial(const Element& y, const Element& w) const;
  /// Coefficient of v in p(y,w).
  int mu(ElementId y, ElementId w) const;
  std::span<const MuEdge> mu_below(ElementId w) const { return column(w).mu_below; }

  void precompute_all() const;
  bool complete() const;

 private:
  const KLColumn& compute(ElementId w) const;

  std::shared_ptr<const CoxeterSystem> system_;
  mutable std::vector<std::unique_ptr<KLColumn>> storage_;
  mutable std::unique_ptr<std::atomic<const KLColumn*>[]> published_;
  mutable std::recursive_mutex write_mutex_;
};

}  // namespace cellkit
