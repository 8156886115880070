#include "cellkit/product_engine.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

namespace cellkit {

LaurentPoly ProductVector::coefficient_of(ElementId u) const { return view_of(u).to_poly(); }

PolyView ProductVector::view_of(ElementId u) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), u);
  if (it == elems_.end() || *it != u) return {};
  return poly(static_cast<std::size_t>(it - elems_.begin()));
}

std::map<ElementId, LaurentPoly> ProductVector::to_map() const {
  std::map<ElementId, LaurentPoly> out;
  for (std::size_t i = 0; i < size(); ++i) out.emplace(elems_[i], poly(i).to_poly());
  return out;
}

void ProductVector::append(ElementId u, int low, std::span<const Coefficient> coeffs) {
  elems_.push_back(u);
  lows_.push_back(low);
  coeffs_.insert(coeffs_.end(), coeffs.begin(), coeffs.end());
  offsets_.push_back(static_cast<std::uint32_t>(coeffs_.size()));
}

ProductEngine::ProductEngine(const KLTable& table) : table_(table), rank_(table.system().rank()) {
  const CoxeterSystem& W = table.system();
  table.precompute_all();
  // Every final coefficient has degree <= l(w0); intermediate sums pick up
  // at most one extra factor v^{+-1}.
  window_ = W.length(W.longest_id()) + 1;
  const std::size_t n = W.order();
  star_offsets_.assign(n * rank_ + 1, 0);
  for (ElementId u = 0; u < n; ++u)
    for (Generator s = 0; s < rank_; ++s) {
      std::size_t k = static_cast<std::size_t>(u) * rank_ + s;
      if (!W.is_right_descent(u, s))
        for (const MuEdge& e : table.mu_below(u))
          if (W.is_right_descent(e.z, s)) star_edges_.push_back(e);
      star_offsets_[k + 1] = static_cast<std::uint32_t>(star_edges_.size());
    }
  split_generator_.assign(n, -1);
  for (ElementId w = 1; w < n; ++w)
    split_generator_[w] = std::countr_zero(static_cast<unsigned>(W.right_descents(w)));
}

namespace {

// Dense scratch rows [element][exponent] plus a bitmap of touched rows.
class Accumulator {
 public:
  Accumulator(std::size_t n, int window)
      : window_(window), width_(2 * window + 1), data_(n * width_, 0), touched_((n + 63) / 64, 0) {}

  void add(ElementId u, const PolyView& p, Coefficient c, int shift) {
    touched_[u >> 6] |= std::uint64_t{1} << (u & 63);
    Coefficient* dst = data_.data() + static_cast<std::size_t>(u) * width_ + window_ + p.low + shift;
    const Coefficient* src = p.coeffs.data();
    const std::size_t len = p.coeffs.size();
    if (c == 1) {
      for (std::size_t i = 0; i < len; ++i) dst[i] += src[i];
    } else {
      for (std::size_t i = 0; i < len; ++i) dst[i] += c * src[i];
    }
  }

  ProductVector drain() {
    ProductVector out;
    for (std::size_t word = 0; word < touched_.size(); ++word) {
      std::uint64_t bits = touched_[word];
      touched_[word] = 0;
      while (bits) {
        int b = std::countr_zero(bits);
        bits &= bits - 1;
        ElementId u = static_cast<ElementId>(word * 64 + b);
        Coefficient* row = data_.data() + static_cast<std::size_t>(u) * width_;
        int lo = 0, hi = width_ - 1;
        while (lo <= hi && row[lo] == 0) ++lo;
        while (hi >= lo && row[hi] == 0) --hi;
        if (lo > hi) continue;
        for (int i = lo; i <= hi; ++i)
          if (row[i] > kLimit || row[i] < -kLimit) throw std::overflow_error("structure constant too large");
        out.append(u, lo - window_, {row + lo, static_cast<std::size_t>(hi - lo + 1)});
        std::memset(row + lo, 0, sizeof(Coefficient) * static_cast<std::size_t>(hi - lo + 1));
      }
    }
    return out;
  }

 private:
  // Far below int64 overflow, so no intermediate sum can have wrapped.
  static constexpr Coefficient kLimit = Coefficient{1} << 50;

  int window_;
  int width_;
  std::vector<Coefficient> data_;
  std::vector<std::uint64_t> touched_;
};

}  // namespace

void ProductEngine::products_with_fixed_left(ElementId z, const Sink& sink) const {
  const CoxeterSystem& W = table_.system();
  const std::size_t n = W.order();
  std::vector<ProductVector> rows(n);
  Accumulator acc(n, window_);
  const Coefficient one = 1;
  acc.add(z, PolyView{0, {&one, 1}}, 1, 0);
  rows[0] = acc.drain();
  sink(0, rows[0]);
  for (ElementId w = 1; w < n; ++w) {
    const Generator s = split_generator_[w];
    const ElementId wp = W.right_multiply(w, s);
    const ProductVector& prev = rows[wp];
    for (std::size_t i = 0; i < prev.size(); ++i) {
      const ElementId u = prev.element(i);
      const PolyView p = prev.poly(i);
      if (W.is_right_descent(u, s)) {
        acc.add(u, p, 1, 1);
        acc.add(u, p, 1, -1);
      } else {
        acc.add(W.right_multiply(u, s), p, 1, 0);
        for (const MuEdge& e : right_star(u, s)) acc.add(e.z, p, e.mu, 0);
      }
    }
    for (const MuEdge& e : right_star(wp, s)) {
      const ProductVector& sub = rows[e.z];
      for (std::size_t i = 0; i < sub.size(); ++i) acc.add(sub.element(i), sub.poly(i), -e.mu, 0);
    }
    rows[w] = acc.drain();
    sink(w, rows[w]);
  }
}

std::vector<ProductVector> ProductEngine::row(ElementId z) const {
  std::vector<ProductVector> out(table_.system().order());
  products_with_fixed_left(z, [&](ElementId w, const ProductVector& p) { out[w] = p; });
  return out;
}

std::map<ElementId, LaurentPoly> ProductEngine::product(ElementId x, ElementId y) const {
  std::map<ElementId, LaurentPoly> out;
  products_with_fixed_left(x, [&](ElementId w, const ProductVector& p) {
    if (w == y) out = p.to_map();
  });
  return out;
}

}  // namespace cellkit
