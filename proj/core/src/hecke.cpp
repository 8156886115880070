#include "cellkit/hecke.hpp"

#include "cellkit/errors.hpp"

namespace cellkit {

HeckeElt::HeckeElt(std::shared_ptr<const CoxeterSystem> system, Basis basis)
    : system_(std::move(system)), basis_(basis) {}

HeckeElt HeckeElt::basis_element(std::shared_ptr<const CoxeterSystem> system, Basis basis, ElementId w,
                                 LaurentPoly coeff) {
  HeckeElt h(std::move(system), basis);
  h.add(w, coeff);
  return h;
}

LaurentPoly HeckeElt::coefficient(ElementId w) const {
  auto it = support_.find(w);
  return it == support_.end() ? LaurentPoly() : it->second;
}

void HeckeElt::add(ElementId w, const LaurentPoly& p, Coefficient c, int shift) {
  if (p.is_zero() || c == 0) return;
  auto [it, inserted] = support_.try_emplace(w);
  it->second.add_scaled(p, c, shift);
  if (it->second.is_zero()) support_.erase(it);
}

void HeckeElt::require_compatible(const HeckeElt& other) const {
  if (system_ != other.system_) throw UsageError("Hecke elements belong to different Coxeter systems");
  if (basis_ != other.basis_) throw UsageError("Hecke elements are expressed in different bases");
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& other) {
  require_compatible(other);
  for (const auto& [w, p] : other.support_) add(w, p);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& other) {
  require_compatible(other);
  for (const auto& [w, p] : other.support_) add(w, p, -1);
  return *this;
}

std::string HeckeElt::to_string() const {
  if (support_.empty()) return "0";
  const char* symbol = basis_ == Basis::standard ? "H_" : "C_";
  std::string out;
  for (const auto& [w, p] : support_) {
    if (!out.empty()) out += " + ";
    if (p != LaurentPoly(1)) out += p.term_count() == 1 ? p.to_string() : "(" + p.to_string() + ")";
    out += symbol + system_->word(w);
  }
  return out;
}

namespace {

void require_standard(const HeckeElt& a) {
  if (a.basis() != Basis::standard) throw UsageError("operation requires a standard-basis Hecke element");
}

}  // namespace

HeckeElt right_multiply_generator(const HeckeElt& a, Generator s) {
  require_standard(a);
  const CoxeterSystem& W = a.system();
  HeckeElt out(a.system_ptr(), Basis::standard);
  for (const auto& [w, p] : a.support()) {
    ElementId ws = W.right_multiply(w, s);
    out.add(ws, p);
    if (W.length(ws) < W.length(w)) {
      out.add(w, p, 1, -1);
      out.add(w, p, -1, 1);
    }
  }
  return out;
}

HeckeElt left_multiply_generator(Generator s, const HeckeElt& a) {
  require_standard(a);
  const CoxeterSystem& W = a.system();
  HeckeElt out(a.system_ptr(), Basis::standard);
  for (const auto& [w, p] : a.support()) {
    ElementId sw = W.left_multiply(s, w);
    out.add(sw, p);
    if (W.length(sw) < W.length(w)) {
      out.add(w, p, 1, -1);
      out.add(w, p, -1, 1);
    }
  }
  return out;
}

HeckeElt multiply_standard(const HeckeElt& a, const HeckeElt& b) {
  require_standard(a);
  require_standard(b);
  if (a.system_ptr() != b.system_ptr()) throw UsageError("Hecke elements belong to different Coxeter systems");
  const CoxeterSystem& W = a.system();
  HeckeElt out(a.system_ptr(), Basis::standard);
  // a * H_w, built along the reduced word of w and shared across prefixes.
  std::map<ElementId, HeckeElt> prefix;
  prefix.emplace(W.identity_id(), a);
  for (const auto& [w, q] : b.support()) {
    ElementId cur = W.identity_id();
    for (Generator s : W.reduced_word(w)) {
      ElementId next = W.right_multiply(cur, s);
      if (!prefix.count(next)) prefix.emplace(next, right_multiply_generator(prefix.at(cur), s));
      cur = next;
    }
    for (const auto& [u, p] : prefix.at(w).support()) out.add(u, p * q);
  }
  return out;
}

HeckeElt bar_involution(const HeckeElt& a) {
  require_standard(a);
  const CoxeterSystem& W = a.system();
  HeckeElt out(a.system_ptr(), Basis::standard);
  // bar(H_w) = H_{s1}^-1 ... H_{sk}^-1 with H_s^-1 = H_s + (v - v^-1).
  for (const auto& [w, p] : a.support()) {
    HeckeElt img = HeckeElt::basis_element(a.system_ptr(), Basis::standard, W.identity_id());
    for (Generator s : W.reduced_word(w)) {
      HeckeElt next = right_multiply_generator(img, s);
      for (const auto& [u, c] : img.support()) {
        next.add(u, c, 1, 1);
        next.add(u, c, -1, -1);
      }
      img = std::move(next);
    }
    LaurentPoly pb = p.bar();
    for (const auto& [u, c] : img.support()) out.add(u, c * pb);
  }
  return out;
}

HeckeElt kl_basis(const KLTable& table, ElementId w) {
  const KLColumn& col = table.column(w);
  HeckeElt out(table.system_ptr(), Basis::standard);
  for (std::size_t i = 0; i < col.ys.size(); ++i) out.add(col.ys[i], col.ps[i]);
  return out;
}

HeckeElt to_kl_basis(const KLTable& table, const HeckeElt& a) {
  require_standard(a);
  if (a.system_ptr() != table.system_ptr()) throw UsageError("Hecke element and KL table use different systems");
  HeckeElt rest = a;
  HeckeElt out(a.system_ptr(), Basis::kl);
  // Ids are sorted by length, so the largest id in the support is maximal.
  while (!rest.is_zero()) {
    auto top = std::prev(rest.support().end());
    ElementId w = top->first;
    LaurentPoly c = top->second;
    out.add(w, c);
    const KLColumn& col = table.column(w);
    for (std::size_t i = 0; i < col.ys.size(); ++i) rest.add(col.ys[i], col.ps[i] * c, -1);
  }
  return out;
}

HeckeElt to_standard_basis(const KLTable& table, const HeckeElt& a) {
  if (a.basis() != Basis::kl) throw UsageError("operation requires a KL-basis Hecke element");
  HeckeElt out(a.system_ptr(), Basis::standard);
  for (const auto& [w, c] : a.support()) {
    const KLColumn& col = table.column(w);
    for (std::size_t i = 0; i < col.ys.size(); ++i) out.add(col.ys[i], col.ps[i] * c);
  }
  return out;
}

std::map<ElementId, LaurentPoly> h_constants(const KLTable& table, ElementId x, ElementId y) {
  HeckeElt prod = multiply_standard(kl_basis(table, x), kl_basis(table, y));
  return to_kl_basis(table, prod).support();
}

}  // namespace cellkit
