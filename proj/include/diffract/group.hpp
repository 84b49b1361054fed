#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diffract/error.hpp"

namespace diffract {

/// Closure cap for permutation-generated groups; DIFFRACT_MAX_ORDER overrides
/// it in the CLI.
inline constexpr std::size_t kDefaultClosureCap = 20000;

/// Orders up to this bound get exhaustive associativity checks; larger tables
/// are sampled with 10·n² triples.
inline constexpr std::size_t kExhaustiveAssociativityBound = 200;

/// A bijection on [0, degree). Composition follows (f * g)(x) = f(g(x)):
/// the right factor acts first.
class Permutation {
public:
  /// Throws Errc::NotAPermutation unless `images` is a bijection.
  explicit Permutation(std::vector<Element> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::span<const Element> images() const { return images_; }
  Element operator()(Element x) const { return images_[x]; }

  bool is_identity() const;
  Permutation inverse() const;

  friend Permutation operator*(const Permutation &f, const Permutation &g);
  friend bool operator==(const Permutation &, const Permutation &) = default;

private:
  friend class FiniteGroup;
  struct Trusted {};
  Permutation(Trusted, std::vector<Element> images)
      : images_(std::move(images)) {}

  std::vector<Element> images_;
};

std::string to_string(const Permutation &p);

/// A validated finite group over dense indices 0..n-1 with identity 0.
/// Immutable after construction.
class FiniteGroup {
public:
  /// Validates the table eagerly (Latin square, identity at index 0,
  /// associativity, inverses). `table` is row-major: table[a*n + b] = a·b.
  /// Throws NotAGroupError on the first violation, Errc::IndexOutOfRange on
  /// malformed input.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> table,
                                std::vector<std::string> labels = {});

  /// Closure of the generators under composition, discovered breadth-first
  /// (each element popped in order is multiplied on the right by each
  /// generator in input order). The identity is index 0.
  static FiniteGroup
  from_permutations(std::size_t degree,
                    const std::vector<std::vector<Element>> &generators,
                    std::size_t cap = kDefaultClosureCap);

  std::size_t order() const { return order_; }
  Element identity() const { return 0; }

  /// Bounds-checked product; throws Errc::IndexOutOfRange.
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;

  /// Unchecked hot-path product.
  Element at(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inverse_of(Element a) const { return inverses_[a]; }

  std::span<const Element> row(Element a) const {
    return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  std::span<const Element> table() const { return table_; }
  std::span<const Element> inverses() const { return inverses_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string> &labels() const { return labels_; }
  /// The element's label, or its decimal index when unlabeled.
  std::string label(Element a) const;
  /// Resolves a label first, then a decimal index.
  std::optional<Element> find(std::string_view label_or_index) const;

  bool is_abelian() const;
  std::size_t element_order(Element a) const;

  /// Cayley's left-regular representation: images[h] = g·h.
  Permutation cayley_rho(Element g) const;

private:
  FiniteGroup() = default;
  void check_index(Element a) const;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Builtin families. Element orderings:
///   cyclic:n       index i is a^i (addition mod n)
///   klein4         e, a, b, ab with XOR multiplication
///   dihedral:n     order 2n; index i + n*j is r^i s^j, srs = r^-1
///   quaternion     1, -1, i, -i, j, -j, k, -k
///   symmetric:n    all permutations of n points in lexicographic order of
///                  their image arrays (n <= 6)
///   alternating:n  even permutations in the same order (n <= 6)
FiniteGroup builtin(std::string_view family, std::optional<long> param = {});

/// Parses "family" or "family:param", e.g. "cyclic:6", "quaternion".
FiniteGroup builtin_from_spec(std::string_view spec);

class Subgroup {
public:
  /// Smallest subgroup containing `gens`; members sorted ascending.
  static Subgroup generate(GroupPtr parent, std::span<const Element> gens);

  const FiniteGroup &parent() const { return *parent_; }
  const GroupPtr &parent_ptr() const { return parent_; }

  std::span<const Element> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Element g) const { return position_[g] >= 0; }
  /// Position within members(); only valid for members.
  std::size_t position(Element g) const {
    return static_cast<std::size_t>(position_[g]);
  }
  Element member(std::size_t pos) const { return members_[pos]; }

  /// Product of two members addressed by position, returned as a position.
  std::size_t mul_pos(std::size_t a, std::size_t b) const {
    return static_cast<std::size_t>(mul_pos_[a * members_.size() + b]);
  }

private:
  Subgroup() = default;

  GroupPtr parent_;
  std::vector<Element> members_;
  std::vector<int> position_;
  std::vector<int> mul_pos_;
};

inline Subgroup subgroup_generate(GroupPtr parent,
                                  std::span<const Element> gens) {
  return Subgroup::generate(std::move(parent), gens);
}

/// Left cosets gH. Coset ids are assigned in ascending order of each coset's
/// smallest member, so H itself is coset 0.
class CosetDecomposition {
public:
  explicit CosetDecomposition(Subgroup h);

  const Subgroup &subgroup() const { return h_; }
  const FiniteGroup &group() const { return h_.parent(); }

  std::size_t count() const { return cosets_.size(); }
  std::size_t coset_of(Element g) const { return coset_of_[g]; }
  std::span<const std::size_t> coset_ids() const { return coset_of_; }
  /// Members of coset `id`, ascending.
  std::span<const Element> coset(std::size_t id) const { return cosets_[id]; }

private:
  Subgroup h_;
  std::vector<std::size_t> coset_of_;
  std::vector<std::vector<Element>> cosets_;
};

inline CosetDecomposition left_cosets(Subgroup h) {
  return CosetDecomposition(std::move(h));
}

} // namespace diffract
