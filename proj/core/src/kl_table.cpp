#include "cellkit/kl_table.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "cellkit/errors.hpp"

namespace cellkit {

const LaurentPoly* KLColumn::find(ElementId y) const {
  auto it = std::lower_bound(ys.begin(), ys.end(), y);
  if (it == ys.end() || *it != y) return nullptr;
  return &ps[static_cast<std::size_t>(it - ys.begin())];
}

namespace {

void fill_mu(KLColumn& col, ElementId w) {
  col.mu_below.clear();
  for (std::size_t i = 0; i < col.ys.size(); ++i) {
    if (col.ys[i] == w) continue;
    Coefficient m = col.ps[i].coefficient(1);
    if (m != 0) col.mu_below.push_back({col.ys[i], static_cast<int>(m)});
  }
}

}  // namespace

KLTable::KLTable(std::shared_ptr<const CoxeterSystem> system)
    : system_(std::move(system)),
      storage_(system_->order()),
      published_(new std::atomic<const KLColumn*>[system_->order()]) {
  for (std::size_t i = 0; i < system_->order(); ++i) published_[i].store(nullptr, std::memory_order_relaxed);
}

KLTable::KLTable(std::shared_ptr<const CoxeterSystem> system, std::vector<KLColumn> columns)
    : KLTable(std::move(system)) {
  const CoxeterSystem& W = *system_;
  if (columns.size() != W.order())
    throw CacheError("KL table has " + std::to_string(columns.size()) + " columns, expected " +
                     std::to_string(W.order()));
  for (ElementId w = 0; w < W.order(); ++w) {
    KLColumn& col = columns[w];
    if (col.ys.size() != col.ps.size() || !std::is_sorted(col.ys.begin(), col.ys.end()))
      throw CacheError("malformed KL column for " + W.word(w));
    const LaurentPoly* top = col.find(w);
    if (top == nullptr || *top != LaurentPoly(1)) throw CacheError("p(w,w) != 1 for " + W.word(w));
    for (std::size_t i = 0; i < col.ys.size(); ++i) {
      if (col.ys[i] == w) continue;
      const LaurentPoly& p = col.ps[i];
      if (p.is_zero() || *p.min_degree() < 1 || *p.degree() > W.length(w) - W.length(col.ys[i]) ||
          !p.has_nonnegative_coefficients())
        throw CacheError("KL polynomial p(" + W.word(col.ys[i]) + "," + W.word(w) + ") violates its invariants");
    }
    fill_mu(col, w);
    storage_[w] = std::make_unique<KLColumn>(std::move(col));
    published_[w].store(storage_[w].get(), std::memory_order_release);
  }
}

KLTable::~KLTable() = default;

const KLColumn& KLTable::column(ElementId w) const {
  if (w >= system_->order()) throw UsageError("element id out of range");
  const KLColumn* col = published_[w].load(std::memory_order_acquire);
  if (col != nullptr) return *col;
  std::lock_guard lock(write_mutex_);
  return compute(w);
}

const KLColumn& KLTable::compute(ElementId w) const {
  if (const KLColumn* done = published_[w].load(std::memory_order_acquire)) return *done;
  const CoxeterSystem& W = *system_;
  auto col = std::make_unique<KLColumn>();
  if (w == W.identity_id()) {
    col->ys = {w};
    col->ps = {LaurentPoly(1)};
  } else {
    // C_s C_v with v = sw, minus the mu-correction terms.
    const Generator s = std::countr_zero(static_cast<unsigned>(W.left_descents(w)));
    const ElementId v = W.left_multiply(s, w);
    const KLColumn& cv = compute(v);
    const int span = W.length(w) + 1;
    const std::size_t n = W.order();
    std::vector<Coefficient> acc(n * span, 0);
    std::vector<char> touched(n, 0);
    auto add = [&](ElementId y, const LaurentPoly& p, Coefficient c, int shift) {
      touched[y] = 1;
      Coefficient* row = acc.data() + static_cast<std::size_t>(y) * span;
      for (const auto& t : p.terms()) {
        int e = t.exponent + shift;
        if (e < 0 || e >= span) throw std::logic_error("KL recursion left the exponent window");
        row[e] = checked_add(row[e], checked_mul(c, t.coeff));
      }
    };
    for (std::size_t i = 0; i < cv.ys.size(); ++i) {
      ElementId u = cv.ys[i];
      ElementId su = W.left_multiply(s, u);
      add(su, cv.ps[i], 1, 0);
      add(u, cv.ps[i], 1, W.length(su) < W.length(u) ? -1 : 1);
    }
    for (const MuEdge& edge : cv.mu_below) {
      if (!W.is_left_descent(s, edge.z)) continue;
      const KLColumn& cz = compute(edge.z);
      for (std::size_t i = 0; i < cz.ys.size(); ++i) add(cz.ys[i], cz.ps[i], -edge.mu, 0);
    }
    for (ElementId y = 0; y < n; ++y) {
      if (!touched[y]) continue;
      LaurentPoly p = LaurentPoly::from_dense(0, {acc.data() + static_cast<std::size_t>(y) * span,
                                                  static_cast<std::size_t>(span)});
      if (p.is_zero()) continue;
      if (y != w && (*p.min_degree() < 1 || !p.has_nonnegative_coefficients()))
        throw std::logic_error("KL recursion produced an invalid polynomial");
      col->ys.push_back(y);
      col->ps.push_back(std::move(p));
    }
  }
  fill_mu(*col, w);
  storage_[w] = std::move(col);
  published_[w].store(storage_[w].get(), std::memory_order_release);
  return *storage_[w];
}

LaurentPoly KLTable::p(ElementId y, ElementId w) const {
  const LaurentPoly* found = column(w).find(y);
  return found ? *found : LaurentPoly();
}

LaurentPoly KLTable::kl_polynomial(const Element& y, const Element& w) const {
  if (y.system_tag() != system_->tag() || w.system_tag() != system_->tag())
    throw UsageError("element belongs to a different Coxeter system");
  return p(y.id(), w.id());
}

int KLTable::mu(ElementId y, ElementId w) const {
  if (y == w) return 0;
  return static_cast<int>(p(y, w).coefficient(1));
}

void KLTable::precompute_all() const {
  std::lock_guard lock(write_mutex_);
  for (ElementId w = 0; w < system_->order(); ++w) compute(w);
}

bool KLTable::complete() const {
  for (std::size_t w = 0; w < system_->order(); ++w)
    if (published_[w].load(std::memory_order_acquire) == nullptr) return false;
  return true;
}

}  // namespace cellkit
