#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "cellkit/laurent.hpp"
#include "cellkit/product_engine.hpp"

namespace cellkit {

/// Order-independent 128-bit fingerprint of a graded character
/// sum_z c_z L_z (a sparse map z -> Laurent polynomial).
struct CharacterDigest {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  friend bool operator==(const CharacterDigest&, const CharacterDigest&) = default;
  friend auto operator<=>(const CharacterDigest&, const CharacterDigest&) = default;
  void add(ElementId z, const PolyView& p);
};

/// Everything extracted from one pass over all products C_x C_w:
///   a_max[u]  = max_{x,w} deg h_{x,w,u}
///   b(x,y)    = max_z deg h_{z,x^-1,y}, the top degree of the character of theta_x L_y
///   digest(x,y) fingerprints that character.
/// Characters come from the row of x via h_{z,x^-1,y} = h_{x,z^-1,y^-1}.
class SweepResult {
 public:
  static constexpr std::int8_t kMinusInfinity = INT8_MIN;

  explicit SweepResult(std::size_t n) : n_(n), a_max_(n, -1), b_(n * n, kMinusInfinity), digest_(n * n) {}

  std::size_t order() const noexcept { return n_; }
  int a_max(ElementId u) const { return a_max_[u]; }
  const std::vector<int>& a_values() const noexcept { return a_max_; }
  /// nullopt for the zero character.
  Degree b(ElementId x, ElementId y) const {
    std::int8_t v = b_[static_cast<std::size_t>(x) * n_ + y];
    return v == kMinusInfinity ? Degree{} : Degree{v};
  }
  const CharacterDigest& digest(ElementId x, ElementId y) const { return digest_[static_cast<std::size_t>(x) * n_ + y]; }

 private:
  friend SweepResult run_sweep(const ProductEngine&, int, const std::function<void(std::size_t, std::size_t)>&);

  std::size_t n_;
  std::vector<int> a_max_;
  std::vector<std::int8_t> b_;
  std::vector<CharacterDigest> digest_;
};

/// Runs all |W| rows of the product engine, split into contiguous chunks over
/// `threads` workers. The result does not depend on the thread count.
/// `progress(done, total)` is called from the calling thread only.
SweepResult run_sweep(const ProductEngine& engine, int threads = 1,
                      const std::function<void(std::size_t, std::size_t)>& progress = {});

/// Max degree over the rows of the given left factors only.
std::vector<int> max_degrees_over_rows(const ProductEngine& engine, const std::vector<ElementId>& rows);

}  // namespace cellkit
