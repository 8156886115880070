#include "cellkit/coxeter.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>

#include "cellkit/errors.hpp"

namespace cellkit {

namespace {

using SignedPerm = std::vector<std::int8_t>;

// (a o b)(e_i) = a(b(e_i))
SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  SignedPerm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    int j = std::abs(b[i]) - 1;
    c[i] = static_cast<std::int8_t>(b[i] > 0 ? a[j] : -a[j]);
  }
  return c;
}

SignedPerm identity_perm(int points) {
  SignedPerm p(points);
  std::iota(p.begin(), p.end(), std::int8_t{1});
  return p;
}

SignedPerm transposition(int points, int i, int j, bool negate) {
  SignedPerm p = identity_perm(points);
  std::int8_t sign = negate ? -1 : 1;
  p[i] = static_cast<std::int8_t>(sign * (j + 1));
  p[j] = static_cast<std::int8_t>(sign * (i + 1));
  return p;
}

int point_count(CartanType type, int rank) {
  switch (type) {
    case CartanType::A: return rank + 1;
    case CartanType::G: return 3;
    default: return rank;
  }
}

std::vector<SignedPerm> generator_perms(CartanType type, int rank) {
  int m = point_count(type, rank);
  std::vector<SignedPerm> gens;
  switch (type) {
    case CartanType::A:
      for (int i = 0; i < rank; ++i) gens.push_back(transposition(m, i, i + 1, false));
      break;
    case CartanType::B:
    case CartanType::C:
      for (int i = 0; i + 1 < rank; ++i) gens.push_back(transposition(m, i, i + 1, false));
      {
        SignedPerm neg = identity_perm(m);
        neg[m - 1] = static_cast<std::int8_t>(-m);
        gens.push_back(neg);
      }
      break;
    case CartanType::D:
      for (int i = 0; i + 1 < rank; ++i) gens.push_back(transposition(m, i, i + 1, false));
      gens.push_back(transposition(m, m - 2, m - 1, true));
      break;
    case CartanType::G:
      // Reflections in the short root e1-e2 and the long root 2e1-e2-e3 of
      // the plane x+y+z=0; the latter acts as minus the swap of e2,e3.
      gens.push_back(transposition(3, 0, 1, false));
      {
        SignedPerm p = transposition(3, 1, 2, false);
        for (auto& x : p) x = static_cast<std::int8_t>(-x);
        gens.push_back(p);
      }
      break;
  }
  return gens;
}

std::atomic<std::uint32_t> next_tag{1};

}  // namespace

char to_char(CartanType t) {
  switch (t) {
    case CartanType::A: return 'A';
    case CartanType::B: return 'B';
    case CartanType::C: return 'C';
    case CartanType::D: return 'D';
    case CartanType::G: return 'G';
  }
  return '?';
}

CartanType parse_cartan_type(std::string_view s) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'A': case 'a': return CartanType::A;
      case 'B': case 'b': return CartanType::B;
      case 'C': case 'c': return CartanType::C;
      case 'D': case 'd': return CartanType::D;
      case 'G': case 'g': return CartanType::G;
      default: break;
    }
  }
  throw ConfigError("unsupported Cartan type '" + std::string(s) + "' (expected one of A, B, C, D, G)");
}

std::size_t expected_order(CartanType type, int rank) {
  std::size_t fact = 1;
  for (int i = 2; i <= rank; ++i) fact *= static_cast<std::size_t>(i);
  switch (type) {
    case CartanType::A: return fact * static_cast<std::size_t>(rank + 1);
    case CartanType::B:
    case CartanType::C: return (std::size_t{1} << rank) * fact;
    case CartanType::D: return (std::size_t{1} << (rank - 1)) * fact;
    case CartanType::G: return 12;
  }
  return 0;
}

std::string generator_set_string(GeneratorSet set) {
  std::string out;
  for (Generator s = 0; s < 16; ++s)
    if (contains(set, s)) out += static_cast<char>('1' + s);
  return out;
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::create(CartanType type, int rank) {
  if (rank < 1) throw ConfigError("rank must be at least 1");
  if (rank > 9) throw ConfigError("rank above 9 is not supported (generator labels are single digits)");
  if (type == CartanType::G && rank != 2) throw ConfigError("type G requires rank 2");
  if (type == CartanType::D && rank < 3) throw ConfigError("type D requires rank at least 3");
  return std::shared_ptr<const CoxeterSystem>(new CoxeterSystem(type, rank));
}

CoxeterSystem::CoxeterSystem(CartanType type, int rank)
    : type_(type), rank_(rank), points_(point_count(type, rank)), tag_(next_tag++) {
  const auto gens = generator_perms(type, rank);
  const SignedPerm id = identity_perm(points_);

  coxeter_matrix_.assign(rank * rank, 1);
  for (int s = 0; s < rank; ++s)
    for (int t = 0; t < rank; ++t) {
      if (s == t) continue;
      SignedPerm st = compose(gens[s], gens[t]);
      SignedPerm acc = st;
      int m = 1;
      while (acc != id) {
        acc = compose(acc, st);
        ++m;
      }
      coxeter_matrix_[s * rank + t] = m;
    }

  // Breadth-first enumeration along right multiplication; BFS depth is the
  // Cayley-graph distance, i.e. the length.
  std::map<SignedPerm, std::size_t> index;
  std::vector<SignedPerm> elems{id};
  std::vector<int> depth{0};
  index.emplace(id, 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (int s = 0; s < rank; ++s) {
      SignedPerm ws = compose(elems[head], gens[s]);
      if (index.emplace(ws, elems.size()).second) {
        elems.push_back(std::move(ws));
        depth.push_back(depth[head] + 1);
      }
    }
  }
  const std::size_t n = elems.size();

  std::vector<std::size_t> left(rank * n), right(rank * n);
  for (std::size_t i = 0; i < n; ++i)
    for (int s = 0; s < rank; ++s) {
      right[s * n + i] = index.at(compose(elems[i], gens[s]));
      left[s * n + i] = index.at(compose(gens[s], elems[i]));
    }

  // ShortLex-minimal words: peel off the smallest left descent repeatedly.
  std::vector<std::vector<Generator>> raw_words(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t cur = i;
    while (depth[cur] > 0) {
      for (int s = 0; s < rank; ++s) {
        std::size_t sw = left[s * n + cur];
        if (depth[sw] < depth[cur]) {
          raw_words[i].push_back(s);
          cur = sw;
          break;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (depth[a] != depth[b]) return depth[a] < depth[b];
    return raw_words[a] < raw_words[b];
  });
  std::vector<ElementId> new_id(n);
  for (std::size_t k = 0; k < n; ++k) new_id[order[k]] = static_cast<ElementId>(k);

  lengths_.resize(n);
  encodings_.resize(n * points_);
  left_.resize(rank * n);
  right_.resize(rank * n);
  inverse_.resize(n);
  left_descents_.assign(n, 0);
  right_descents_.assign(n, 0);
  word_offsets_.assign(n + 1, 0);

  std::map<SignedPerm, std::size_t> inverse_lookup;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t old = order[k];
    lengths_[k] = depth[old];
    std::copy(elems[old].begin(), elems[old].end(), encodings_.begin() + k * points_);
    for (int s = 0; s < rank; ++s) {
      left_[s * n + k] = new_id[left[s * n + old]];
      right_[s * n + k] = new_id[right[s * n + old]];
    }
    word_offsets_[k + 1] = word_offsets_[k] + static_cast<std::uint32_t>(raw_words[old].size());
    words_.insert(words_.end(), raw_words[old].begin(), raw_words[old].end());
  }
  for (std::size_t k = 0; k < n; ++k)
    for (int s = 0; s < rank; ++s) {
      if (lengths_[left_[s * n + k]] < lengths_[k]) left_descents_[k] |= static_cast<GeneratorSet>(1U << s);
      if (lengths_[right_[s * n + k]] < lengths_[k]) right_descents_[k] |= static_cast<GeneratorSet>(1U << s);
    }
  // w^-1 is the reversed word read as a product.
  for (std::size_t k = 0; k < n; ++k) {
    ElementId cur = 0;
    auto word = reduced_word(static_cast<ElementId>(k));
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = right_[*it * n + cur];
    inverse_[k] = cur;
  }
}

ElementId CoxeterSystem::multiply(ElementId a, ElementId b) const {
  ElementId cur = a;
  for (Generator s : reduced_word(b)) cur = right_multiply(cur, s);
  return cur;
}

std::span<const Generator> CoxeterSystem::reduced_word(ElementId w) const {
  return {words_.data() + word_offsets_[w], words_.data() + word_offsets_[w + 1]};
}

std::string CoxeterSystem::word(ElementId w) const {
  if (w == 0) return "e";
  std::string out;
  for (Generator s : reduced_word(w)) out += static_cast<char>('1' + s);
  return out;
}

std::span<const std::int8_t> CoxeterSystem::encoding(ElementId w) const {
  return {encodings_.data() + static_cast<std::size_t>(w) * points_, static_cast<std::size_t>(points_)};
}

bool CoxeterSystem::bruhat_leq(ElementId y, ElementId w) const {
  // Lifting property: for a left descent s of w, y <= w iff
  // sy <= sw (when s is also a left descent of y) or y <= sw (otherwise).
  while (true) {
    if (lengths_[y] > lengths_[w]) return false;
    if (lengths_[w] == 0) return y == 0;
    if (y == w) return true;
    GeneratorSet desc = left_descents_[w];
    Generator s = std::countr_zero(static_cast<unsigned>(desc));
    if (contains(left_descents_[y], s)) y = left_multiply(s, y);
    w = left_multiply(s, w);
  }
}

ElementId CoxeterSystem::longest_in(GeneratorSet subset) const {
  ElementId cur = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Generator s = 0; s < rank_; ++s) {
      if (!contains(subset, s) || is_right_descent(cur, s)) continue;
      cur = right_multiply(cur, s);
      grew = true;
    }
  }
  return cur;
}

std::string CoxeterSystem::name() const { return std::string(1, to_char(type_)) + std::to_string(rank_); }

Element CoxeterSystem::element(ElementId id) const {
  if (id >= order()) throw UsageError("element id " + std::to_string(id) + " out of range for " + name());
  return Element(id, tag_);
}

void CoxeterSystem::check(const Element& w) const {
  if (w.system_tag() != tag_) throw UsageError("element belongs to a different Coxeter system than " + name());
}

Element CoxeterSystem::parse(std::string_view text) const {
  if (text.empty()) throw UsageError("empty element word (use \"e\" for the identity)");
  if (text == "e") return identity();
  ElementId cur = 0;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    char c = text[pos];
    int s = c - '1';
    if (s < 0 || s >= rank_) {
      throw UsageError("invalid generator '" + std::string(1, c) + "' at position " + std::to_string(pos + 1) +
                       " of word \"" + std::string(text) + "\" (" + name() + " has generators 1.." +
                       std::to_string(rank_) + ")");
    }
    cur = right_multiply(cur, s);
  }
  return Element(cur, tag_);
}

GeneratorSet CoxeterSystem::parse_generators(std::string_view labels) const {
  GeneratorSet set = 0;
  for (std::size_t pos = 0; pos < labels.size(); ++pos) {
    int s = labels[pos] - '1';
    if (s < 0 || s >= rank_)
      throw UsageError("invalid generator '" + std::string(1, labels[pos]) + "' at position " +
                       std::to_string(pos + 1) + " of generator list \"" + std::string(labels) + "\"");
    set |= static_cast<GeneratorSet>(1U << s);
  }
  return set;
}

Element CoxeterSystem::multiply(const Element& a, const Element& b) const {
  check(a);
  check(b);
  return Element(multiply(a.id(), b.id()), tag_);
}

Element CoxeterSystem::inverse(const Element& w) const {
  check(w);
  return Element(inverse_[w.id()], tag_);
}

int CoxeterSystem::length(const Element& w) const {
  check(w);
  return lengths_[w.id()];
}

GeneratorSet CoxeterSystem::left_descents(const Element& w) const {
  check(w);
  return left_descents_[w.id()];
}

GeneratorSet CoxeterSystem::right_descents(const Element& w) const {
  check(w);
  return right_descents_[w.id()];
}

Element CoxeterSystem::longest_element(GeneratorSet subset) const {
  if (subset & ~all_generators()) throw UsageError("generator subset is not contained in S");
  return Element(longest_in(subset), tag_);
}

bool CoxeterSystem::bruhat_leq(const Element& y, const Element& w) const {
  check(y);
  check(w);
  return bruhat_leq(y.id(), w.id());
}

std::string CoxeterSystem::word(const Element& w) const {
  check(w);
  return word(w.id());
}

std::vector<Element> CoxeterSystem::enumerate() const {
  std::vector<Element> out;
  out.reserve(order());
  for (ElementId i = 0; i < order(); ++i) out.push_back(Element(i, tag_));
  return out;
}

}  // namespace cellkit
