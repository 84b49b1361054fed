#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "diffract/group.hpp"
#include "diffract/transversal.hpp"

namespace diffract {

/// The coordinates ⟨t, h⟩ of g = t·h, with t a representative and h ∈ H.
/// Both fields are global element indices.
struct Spectrum {
  Element t = 0;
  Element h = 0;

  friend auto operator<=>(const Spectrum &, const Spectrum &) = default;
};

/// An element of H^T: position i holds f(reps[i]) as a position in H's
/// member list.
class FiberMap {
public:
  std::span<const std::size_t> values() const { return values_; }
  std::size_t operator[](std::size_t i) const { return values_[i]; }
  std::uint64_t fibration_id() const { return fibration_id_; }

  friend bool operator==(const FiberMap &, const FiberMap &) = default;

private:
  friend class Fibration;
  FiberMap(std::uint64_t id, std::vector<std::size_t> values)
      : fibration_id_(id), values_(std::move(values)) {}

  std::uint64_t fibration_id_;
  std::vector<std::size_t> values_;
};

/// The tabulated T-fibration δ(g,t) = bar(g·t)⁻¹·g·t together with the
/// Frobenius action g·t ↦ bar(g·t) on representative positions.
///
/// Permutations of degree |T|·|H| act on pairs enumerated t-major:
/// pair ⟨reps[i], H.member(j)⟩ has index i·|H| + j.
class Fibration {
public:
  /// Accepts any representative system. Throws Errc::NotARepresentativeSystem
  /// if some δ value falls outside H (only possible for a corrupted
  /// transversal).
  explicit Fibration(Transversal t);

  const Transversal &transversal() const { return t_; }
  const Subgroup &subgroup() const { return t_.subgroup(); }
  const FiniteGroup &group() const { return t_.group(); }
  bool is_transversal() const { return t_.is_transversal(); }

  std::size_t t_size() const { return t_.size(); }
  std::size_t h_size() const { return subgroup().size(); }
  std::size_t pair_count() const { return t_size() * h_size(); }

  /// Copies share an id; FiberMaps from different fibrations do not mix.
  std::uint64_t id() const { return id_; }

  // Frobenius representation.
  std::size_t gamma_pos(Element g, std::size_t tpos) const {
    return gamma_[static_cast<std::size_t>(g) * t_size() + tpos];
  }
  /// Permutation of representative positions: i ↦ pos(bar(g·reps[i])).
  Permutation gamma(Element g) const;

  // T-fibration.
  std::size_t delta_pos(Element g, std::size_t tpos) const {
    return delta_[static_cast<std::size_t>(g) * t_size() + tpos];
  }
  /// δ(g, t) as a global index. Throws Errc::NotARepresentative if t is not
  /// a representative, Errc::IndexOutOfRange for bad g.
  Element delta(Element g, Element t) const;
  /// δ(g, e) = bar(g)⁻¹·g. Throws Errc::RequiresTransversal.
  Element delta_zero(Element g) const;

  // Diffraction bijection G → T×H.
  Spectrum nabla(Element g) const;
  /// t·h. Throws Errc::InvalidSpectrum.
  Element nabla_inv(Spectrum s) const;

  std::size_t pair_index(Spectrum s) const;
  Spectrum pair_at(std::size_t index) const;
  std::size_t pair_index(std::size_t tpos, std::size_t hpos) const {
    return tpos * h_size() + hpos;
  }

  // Pointwise group H^T.
  FiberMap dual_delta(Element g) const;
  FiberMap constant_identity() const;
  /// Validates positions. Throws Errc::IndexOutOfRange.
  FiberMap fiber_map(std::vector<std::size_t> hpositions) const;
  /// Pointwise product. Throws Errc::FibrationMismatch.
  FiberMap fiber_mul(const FiberMap &a, const FiberMap &b) const;
  FiberMap fiber_inverse(const FiberMap &f) const;

  /// ⟨t, h⟩ ↦ ⟨t, f(t)·h⟩.
  Permutation beta(const FiberMap &f) const;
  /// ⟨t, h⟩ ↦ ⟨γ(g)(t), δ(g,t)·h⟩.
  Permutation alpha(Element g) const;
  /// γ(g) × id_H on pair indices.
  Permutation gamma_times_identity(Element g) const;

  /// Copy with one stored δ value replaced, skipping all invariants.
  Fibration with_delta_entry(Element g, std::size_t tpos, std::size_t hpos) const;

private:
  void require_transversal(const char *op) const;
  void check_element(Element g) const;

  Transversal t_;
  std::uint64_t id_;
  std::vector<std::size_t> gamma_;
  std::vector<std::size_t> delta_;
};

inline FiberMap fibermap_mul(const Fibration &f, const FiberMap &a, const FiberMap &b) {
  return f.fiber_mul(a, b);
}

} // namespace diffract
