#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

#include "diffract/diffraction.hpp"
#include "diffract/law_result.hpp"

namespace diffract {

/// ⟨t1,h1⟩ ∘ ⟨t2,h2⟩ = ⟨γ(t1)∘γ(h1)(t2), δ(t1·h1, t2)·h2⟩, evaluated from the
/// tabulated γ and δ. Throws Errc::RequiresTransversal, Errc::InvalidSpectrum.
Spectrum bequeath_product(const Fibration &f, Spectrum p1, Spectrum p2);

/// Pair-index form of bequeath_product, for table construction and benches.
std::size_t bequeath_product_index(const Fibration &f, std::size_t p1, std::size_t p2);

/// T×H under the bequeath product, materialized as a full table.
class DiffractedGroup {
public:
  /// Fills the table from bequeath_product and re-runs the group validator
  /// on it. Throws Errc::RequiresTransversal, or NotAGroupError if the
  /// result is not a group.
  static DiffractedGroup build(Fibration f);

  const Fibration &fibration() const { return f_; }
  std::size_t order() const { return order_; }
  /// Index of ⟨e, e⟩; always 0 because H is coset 0 and e is H's first member.
  std::size_t identity() const { return 0; }

  Spectrum pair(std::size_t i) const { return f_.pair_at(i); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  std::size_t inverse(std::size_t a) const { return inverses_[a]; }
  std::span<const Element> table() const { return table_; }

  /// Copy with table[a][b] overwritten, skipping validation.
  DiffractedGroup with_table_entry(std::size_t a, std::size_t b, Element value) const;

  /// {"order", "t_size", "h_size", "pairs", "table", "identity"} with pairs
  /// as global element indices in t-major order.
  nlohmann::ordered_json to_json() const;

private:
  explicit DiffractedGroup(Fibration f) : f_(std::move(f)) {}

  Fibration f_;
  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
};

/// The internal bequeathed product g1·g2 = bar(t1·h1·t2) · δ(t1·h1, t2) · h2.
struct RewriteTrace {
  Element g1 = 0, g2 = 0;
  Element t1 = 0, h1 = 0, t2 = 0, h2 = 0;
  Element rep_part = 0;
  Element fib_part = 0;
  Element h_tail = 0;
  Element result = 0;
};

/// Throws Errc::RequiresTransversal, Errc::IndexOutOfRange.
RewriteTrace rewrite_product(const Fibration &f, Element g1, Element g2);

/// Verifies that ∇ : G → T▽H is a bijective homomorphism, that
/// ∇(ι1(h)) = ⟨e,h⟩ = ι2(h) for h ∈ H, and that table-scan inverses in D
/// agree with ∇(g⁻¹).
LawResult iso_check(const Fibration &f, const DiffractedGroup &d);

} // namespace diffract
