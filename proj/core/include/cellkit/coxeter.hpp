#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cellkit {

enum class CartanType { A, B, C, D, G };

char to_char(CartanType t);
CartanType parse_cartan_type(std::string_view s);

/// Position of an element in the canonical enumeration order
/// (by length, then ShortLex word). All tables index elements by this id.
using ElementId = std::uint32_t;

/// Zero-based generator index; generator g prints as label g+1.
using Generator = int;

/// Bit set of generators (rank <= 9, so 16 bits are plenty).
using GeneratorSet = std::uint16_t;

inline bool contains(GeneratorSet set, Generator s) { return (set >> s) & 1U; }

class CoxeterSystem;

/// Handle to a group element. It remembers which system created it so that
/// mixing elements of different systems is detected instead of silently
/// producing garbage.
class Element {
 public:
  Element() = default;

  ElementId id() const noexcept { return id_; }
  std::uint32_t system_tag() const noexcept { return tag_; }

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;

 private:
  friend class CoxeterSystem;
  Element(ElementId id, std::uint32_t tag) : id_(id), tag_(tag) {}

  ElementId id_ = 0;
  std::uint32_t tag_ = 0;
};

/// A finite Weyl group realised through a faithful (signed) permutation
/// model:
///   A_n       permutations of n+1 points,
///   B_n, C_n  signed permutations of n points (generator n negates e_n),
///   D_n       even signed permutations (generator n maps e_{n-1} to -e_n),
///   G_2       permutations of 3 points times a global sign.
///
/// Generator labels follow the usual Dynkin pictures: B_n has the double bond
/// between n-1 and n, and in D_n node n-2 is the branch node.
///
/// The whole group is enumerated on construction; afterwards every operation
/// is a table lookup and the object is immutable and thread-safe.
class CoxeterSystem {
 public:
  /// Throws ConfigError for unsupported type/rank combinations.
  static std::shared_ptr<const CoxeterSystem> create(CartanType type, int rank);

  CartanType cartan_type() const noexcept { return type_; }
  int rank() const noexcept { return rank_; }
  /// e.g. "B3"
  std::string name() const;
  std::size_t order() const noexcept { return lengths_.size(); }

  /// m(s,t), with m(s,s) = 1.
  int coxeter_entry(Generator s, Generator t) const { return coxeter_matrix_[s * rank_ + t]; }
  std::string label(Generator s) const { return std::string(1, static_cast<char>('1' + s)); }
  GeneratorSet all_generators() const noexcept { return static_cast<GeneratorSet>((1U << rank_) - 1); }

  // --- id-level interface used by the algorithms -------------------------

  int length(ElementId w) const { return lengths_[w]; }
  ElementId identity_id() const noexcept { return 0; }
  ElementId longest_id() const noexcept { return static_cast<ElementId>(order() - 1); }
  ElementId generator_id(Generator s) const { return left_[s * order() + 0]; }
  /// s * w
  ElementId left_multiply(Generator s, ElementId w) const { return left_[s * order() + w]; }
  /// w * s
  ElementId right_multiply(ElementId w, Generator s) const { return right_[s * order() + w]; }
  ElementId inverse(ElementId w) const { return inverse_[w]; }
  ElementId multiply(ElementId a, ElementId b) const;
  GeneratorSet left_descents(ElementId w) const { return left_descents_[w]; }
  GeneratorSet right_descents(ElementId w) const { return right_descents_[w]; }
  bool is_left_descent(Generator s, ElementId w) const { return contains(left_descents_[w], s); }
  bool is_right_descent(ElementId w, Generator s) const { return contains(right_descents_[w], s); }
  /// ShortLex-minimal reduced word.
  std::span<const Generator> reduced_word(ElementId w) const;
  /// Digit-word form, "e" for the identity.
  std::string word(ElementId w) const;
  /// Faithful encoding: image of e_1..e_m as signed point indices (1-based).
  std::span<const std::int8_t> encoding(ElementId w) const;
  bool bruhat_leq(ElementId y, ElementId w) const;
  ElementId longest_in(GeneratorSet subset) const;

  // --- Element-level interface -------------------------------------------

  Element element(ElementId id) const;
  Element identity() const { return element(0); }
  Element longest() const { return element(longest_id()); }
  Element generator(Generator s) const { return element(generator_id(s)); }
  /// Parses a digit word ("2312" or "e"). Any word is accepted and
  /// evaluated as a product; characters outside 1..rank raise UsageError
  /// naming the offending position.
  Element parse(std::string_view word) const;
  ElementId parse_id(std::string_view word) const { return parse(word).id(); }
  GeneratorSet parse_generators(std::string_view labels) const;

  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& w) const;
  int length(const Element& w) const;
  GeneratorSet left_descents(const Element& w) const;
  GeneratorSet right_descents(const Element& w) const;
  Element longest_element(GeneratorSet subset) const;
  bool bruhat_leq(const Element& y, const Element& w) const;
  std::string word(const Element& w) const;
  /// All elements in the canonical order (length, then ShortLex word).
  std::vector<Element> enumerate() const;

  std::uint32_t tag() const noexcept { return tag_; }

  CoxeterSystem(const CoxeterSystem&) = delete;
  CoxeterSystem& operator=(const CoxeterSystem&) = delete;

 private:
  CoxeterSystem(CartanType type, int rank);
  void check(const Element& w) const;

  CartanType type_;
  int rank_;
  int points_ = 0;
  std::uint32_t tag_;
  std::vector<int> coxeter_matrix_;
  std::vector<std::int8_t> encodings_;  // order * points_
  std::vector<int> lengths_;
  std::vector<ElementId> left_;   // rank * order
  std::vector<ElementId> right_;  // rank * order
  std::vector<ElementId> inverse_;
  std::vector<GeneratorSet> left_descents_;
  std::vector<GeneratorSet> right_descents_;
  std::vector<std::uint32_t> word_offsets_;
  std::vector<Generator> words_;
};

/// Order predicted by the classical formulas.
std::size_t expected_order(CartanType type, int rank);

/// Digit-string form of a generator set, e.g. "13"; "" for the empty set.
std::string generator_set_string(GeneratorSet set);

}  // namespace cellkit
