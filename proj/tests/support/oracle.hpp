#pragma once

// Independent reference implementations used only by tests. They share no
// code with the library beyond the group tables of CoxeterSystem.

#include <cstdint>
#include <map>
#include <vector>

#include "cellkit/coxeter.hpp"
#include "cellkit/laurent.hpp"

namespace oracle {

using cellkit::CoxeterSystem;
using cellkit::ElementId;
using cellkit::Generator;

using Poly = std::map<int, std::int64_t>;
using Elt = std::map<ElementId, Poly>;

inline void add_to(Poly& p, int e, std::int64_t c) {
  if (c == 0) return;
  if ((p[e] += c) == 0) p.erase(e);
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (auto [ea, ca] : a)
    for (auto [eb, cb] : b) add_to(r, ea + eb, ca * cb);
  return r;
}

inline void add_to(Elt& x, ElementId w, const Poly& p, std::int64_t scale = 1) {
  for (auto [e, c] : p) {
    Poly& slot = x[w];
    add_to(slot, e, c * scale);
    if (slot.empty()) x.erase(w);
  }
}

inline Poly bar(const Poly& p) {
  Poly r;
  for (auto [e, c] : p) r[-e] = c;
  return r;
}

inline cellkit::LaurentPoly to_laurent(const Poly& p) {
  std::vector<cellkit::LaurentPoly::Term> terms;
  for (auto [e, c] : p) terms.push_back({e, c});
  return cellkit::LaurentPoly::from_terms(terms);
}

// x * H_s by the quadratic relation.
inline Elt times_generator(const CoxeterSystem& W, const Elt& x, Generator s) {
  Elt r;
  for (const auto& [w, p] : x) {
    ElementId ws = W.right_multiply(w, s);
    add_to(r, ws, p);
    if (W.length(ws) < W.length(w)) {
      add_to(r, w, mul(p, Poly{{-1, 1}, {1, -1}}));
    }
  }
  return r;
}

inline Elt multiply(const CoxeterSystem& W, const Elt& a, const Elt& b) {
  Elt r;
  for (const auto& [w, q] : b) {
    Elt cur = a;
    for (Generator s : W.reduced_word(w)) cur = times_generator(W, cur, s);
    for (const auto& [u, p] : cur) add_to(r, u, mul(p, q));
  }
  return r;
}

// Kazhdan-Lusztig basis from the characterisation: bar-invariant, unitriangular,
// off-diagonal coefficients in vZ[v]. Built from products C_{s1} ... C_{sk}
// by subtracting bar-invariant corrections.
class KLOracle {
 public:
  explicit KLOracle(const CoxeterSystem& W) : W_(W), basis_(W.order()), done_(W.order(), false) {}

  const Elt& C(ElementId w) {
    if (done_[w]) return basis_[w];
    Elt x;
    if (w == W_.identity_id()) {
      x[w] = Poly{{0, 1}};
    } else {
      auto word = W_.reduced_word(w);
      Generator s = word.back();
      ElementId prefix = W_.right_multiply(w, s);
      Elt cs{{W_.generator_id(s), Poly{{0, 1}}}, {W_.identity_id(), Poly{{1, 1}}}};
      x = multiply(W_, C(prefix), cs);
      // Remove non-positive powers below the top, from longest y downward.
      for (ElementId y = w; y-- > 0;) {
        auto it = x.find(y);
        if (it == x.end()) continue;
        Poly correction;  // bar-invariant part carrying the exponents <= 0
        for (auto [e, c] : it->second)
          if (e <= 0) {
            correction[e] += c;
            if (e < 0) correction[-e] += c;
          }
        if (correction.empty()) continue;
        const Elt& cy = C(y);
        for (const auto& [u, p] : cy) add_to(x, u, mul(p, correction), -1);
      }
    }
    basis_[w] = std::move(x);
    done_[w] = true;
    return basis_[w];
  }

  Poly p(ElementId y, ElementId w) {
    const Elt& c = C(w);
    auto it = c.find(y);
    return it == c.end() ? Poly{} : it->second;
  }

  // Expansion of a standard-basis element in the KL basis.
  Elt to_kl(Elt x) {
    Elt out;
    while (!x.empty()) {
      auto top = std::prev(x.end());
      ElementId w = top->first;
      Poly c = top->second;
      add_to(out, w, c);
      for (const auto& [u, p] : C(w)) add_to(x, u, mul(p, c), -1);
    }
    return out;
  }

  Elt h(ElementId x, ElementId y) { return to_kl(multiply(W_, C(x), C(y))); }

 private:
  const CoxeterSystem& W_;
  std::vector<Elt> basis_;
  std::vector<bool> done_;
};

}  // namespace oracle
