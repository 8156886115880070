#pragma once

#include <map>
#include <memory>
#include <string>

#include "cellkit/coxeter.hpp"
#include "cellkit/kl_table.hpp"
#include "cellkit/laurent.hpp"

namespace cellkit {

enum class Basis { standard, kl };

/// Element of the Hecke algebra, expanded in either the standard basis
/// {H_w} or the Kazhdan-Lusztig basis {C_w}. Zero coefficients are never
/// stored.
class HeckeElt {
 public:
  using Support = std::map<ElementId, LaurentPoly>;

  HeckeElt(std::shared_ptr<const CoxeterSystem> system, Basis basis);
  static HeckeElt basis_element(std::shared_ptr<const CoxeterSystem> system, Basis basis, ElementId w,
                                LaurentPoly coeff = LaurentPoly(1));

  Basis basis() const noexcept { return basis_; }
  const CoxeterSystem& system() const noexcept { return *system_; }
  const std::shared_ptr<const CoxeterSystem>& system_ptr() const noexcept { return system_; }
  const Support& support() const noexcept { return support_; }
  bool is_zero() const noexcept { return support_.empty(); }
  LaurentPoly coefficient(ElementId w) const;

  /// this += c * v^shift * p * B_w
  void add(ElementId w, const LaurentPoly& p, Coefficient c = 1, int shift = 0);
  HeckeElt& operator+=(const HeckeElt& other);
  HeckeElt& operator-=(const HeckeElt& other);
  friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
    return a.basis_ == b.basis_ && a.system_ == b.system_ && a.support_ == b.support_;
  }

  /// e.g. "H_e + (v^-1 - v)H_1"
  std::string to_string() const;

 private:
  void require_compatible(const HeckeElt& other) const;

  std::shared_ptr<const CoxeterSystem> system_;
  Basis basis_;
  Support support_;
};

/// a * H_s in the standard basis.
HeckeElt right_multiply_generator(const HeckeElt& a, Generator s);
/// H_s * a in the standard basis.
HeckeElt left_multiply_generator(Generator s, const HeckeElt& a);

/// Product of two standard-basis elements. Throws UsageError on a basis or
/// system mismatch.
HeckeElt multiply_standard(const HeckeElt& a, const HeckeElt& b);

/// The ring involution v -> v^-1, H_w -> H_{w^-1}^{-1}, on standard-basis elements.
HeckeElt bar_involution(const HeckeElt& a);

/// C_w written in the standard basis.
HeckeElt kl_basis(const KLTable& table, ElementId w);

/// Triangular change of basis, eliminating from the longest support element down.
HeckeElt to_kl_basis(const KLTable& table, const HeckeElt& a);
HeckeElt to_standard_basis(const KLTable& table, const HeckeElt& a);

/// h_{x,y,z} for all z: C_x C_y = sum_z h_{x,y,z} C_z, by direct standard-basis
/// multiplication followed by basis conversion.
std::map<ElementId, LaurentPoly> h_constants(const KLTable& table, ElementId x, ElementId y);

}  // namespace cellkit
