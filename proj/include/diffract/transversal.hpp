#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diffract/group.hpp"
#include "diffract/law_result.hpp"

namespace diffract {

/// How to pick one representative per left coset.
struct TransversalStrategy {
  enum class Kind { MinIndex, Random, Explicit };

  Kind kind = Kind::MinIndex;
  std::uint64_t seed = 0;
  std::vector<Element> elements; // Explicit only

  static TransversalStrategy min_index() { return {}; }
  static TransversalStrategy random(std::uint64_t seed) {
    return {Kind::Random, seed, {}};
  }
  static TransversalStrategy explicit_list(std::vector<Element> elements) {
    return {Kind::Explicit, 0, std::move(elements)};
  }

  /// "min", "random:SEED" or "list:i1,i2,...". Throws Errc::ParseError.
  static TransversalStrategy parse(std::string_view text);

  std::string describe() const;
};

/// A representative system for G/H. It is a transversal when the identity is
/// one of the representatives.
class Transversal {
public:
  const CosetDecomposition &decomposition() const { return dec_; }
  const Subgroup &subgroup() const { return dec_.subgroup(); }
  const FiniteGroup &group() const { return dec_.group(); }

  /// reps()[c] is the representative of coset c.
  std::span<const Element> reps() const { return reps_; }
  std::size_t size() const { return reps_.size(); }
  bool is_transversal() const { return is_transversal_; }

  /// The representative map: the chosen representative of gH.
  /// Throws Errc::IndexOutOfRange.
  Element bar(Element g) const;
  Element bar_unchecked(Element g) const { return bar_of_[g]; }
  std::span<const Element> bar_table() const { return bar_of_; }

  bool is_rep(Element g) const { return g < rep_pos_.size() && rep_pos_[g] >= 0; }
  /// Position of a representative in reps() (equal to its coset id).
  std::size_t rep_position(Element t) const {
    return static_cast<std::size_t>(rep_pos_[t]);
  }

  /// Copy with bar_of[g] overwritten, skipping all invariants. Mutation
  /// tests use it to confirm the law checks notice.
  Transversal with_bar_entry(Element g, Element value) const;

private:
  friend Transversal choose(const CosetDecomposition &, const TransversalStrategy &,
                            bool);
  explicit Transversal(CosetDecomposition dec) : dec_(std::move(dec)) {}
  void finish();

  CosetDecomposition dec_;
  std::vector<Element> reps_;
  std::vector<Element> bar_of_;
  std::vector<int> rep_pos_;
  bool is_transversal_ = false;
};

/// Chooses representatives. `min_index` always yields a transversal; `random`
/// draws one member per coset with the shared LCG and then resets H's
/// representative to the identity unless `allow_non_transversal`; `explicit`
/// lists are used verbatim. Throws Errc::NotARepresentativeSystem.
Transversal choose(const CosetDecomposition &dec, const TransversalStrategy &strategy,
                   bool allow_non_transversal = false);

/// Checks gH = bar(g)H and bar(g1·bar(g2)) = bar(g1·g2) for every g, g1, g2.
LawResult check_representative_calculus(const Transversal &t);

} // namespace diffract
