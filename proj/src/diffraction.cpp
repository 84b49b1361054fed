#include "diffract/diffraction.hpp"

#include <atomic>

namespace diffract {

namespace {

std::uint64_t next_fibration_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

} // namespace

Fibration::Fibration(Transversal t) : t_(std::move(t)), id_(next_fibration_id()) {
  const FiniteGroup &g = group();
  const Subgroup &h = subgroup();
  const std::size_t n = g.order();
  const std::size_t k = t_size();
  gamma_.resize(n * k);
  delta_.resize(n * k);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < k; ++i) {
      Element xt = g.at(static_cast<Element>(x), t_.reps()[i]);
      Element rep = t_.bar_unchecked(xt);
      Element d = g.at(g.inverse_of(rep), xt);
      if (!t_.is_rep(rep) || !h.contains(d))
        throw Error(Errc::NotARepresentativeSystem,
                    "delta(" + std::to_string(x) + ", " + std::to_string(t_.reps()[i]) +
                        ") falls outside H");
      gamma_[x * k + i] = t_.rep_position(rep);
      delta_[x * k + i] = h.position(d);
    }
  }
}

void Fibration::check_element(Element g) const {
  if (g >= group().order())
    throw Error(Errc::IndexOutOfRange, "element index " + std::to_string(g) +
                                           " out of range");
}

void Fibration::require_transversal(const char *op) const {
  if (!is_transversal())
    throw Error(Errc::RequiresTransversal,
                std::string(op) + " requires a transversal (identity among the representatives)");
}

Permutation Fibration::gamma(Element g) const {
  check_element(g);
  std::vector<Element> images(t_size());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = static_cast<Element>(gamma_pos(g, i));
  return Permutation(std::move(images));
}

Element Fibration::delta(Element g, Element t) const {
  check_element(g);
  if (!t_.is_rep(t))
    throw Error(Errc::NotARepresentative,
                "element " + std::to_string(t) + " is not a representative");
  return subgroup().member(delta_pos(g, t_.rep_position(t)));
}

Element Fibration::delta_zero(Element g) const {
  require_transversal("delta_zero");
  return delta(g, 0);
}

Spectrum Fibration::nabla(Element g) const {
  require_transversal("nabla");
  return {t_.bar(g), delta_zero(g)};
}

Element Fibration::nabla_inv(Spectrum s) const {
  if (!t_.is_rep(s.t) || s.h >= group().order() || !subgroup().contains(s.h))
    throw Error(Errc::InvalidSpectrum, "spectrum <" + std::to_string(s.t) + "," +
                                           std::to_string(s.h) + "> is not in T x H");
  return group().at(s.t, s.h);
}

std::size_t Fibration::pair_index(Spectrum s) const {
  if (!t_.is_rep(s.t) || s.h >= group().order() || !subgroup().contains(s.h))
    throw Error(Errc::InvalidSpectrum, "spectrum <" + std::to_string(s.t) + "," +
                                           std::to_string(s.h) + "> is not in T x H");
  return pair_index(t_.rep_position(s.t), subgroup().position(s.h));
}

Spectrum Fibration::pair_at(std::size_t index) const {
  if (index >= pair_count())
    throw Error(Errc::IndexOutOfRange, "pair index out of range");
  return {t_.reps()[index / h_size()], subgroup().member(index % h_size())};
}

FiberMap Fibration::dual_delta(Element g) const {
  check_element(g);
  std::vector<std::size_t> values(t_size());
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] = delta_pos(g, i);
  return FiberMap(id_, std::move(values));
}

FiberMap Fibration::constant_identity() const {
  // Position 0 of H's sorted member list is the identity.
  return FiberMap(id_, std::vector<std::size_t>(t_size(), 0));
}

FiberMap Fibration::fiber_map(std::vector<std::size_t> hpositions) const {
  if (hpositions.size() != t_size())
    throw Error(Errc::IndexOutOfRange, "fiber map needs one value per representative");
  for (std::size_t v : hpositions)
    if (v >= h_size())
      throw Error(Errc::IndexOutOfRange, "fiber map value outside H");
  return FiberMap(id_, std::move(hpositions));
}

FiberMap Fibration::fiber_mul(const FiberMap &a, const FiberMap &b) const {
  if (a.fibration_id_ != id_ || b.fibration_id_ != id_)
    throw Error(Errc::FibrationMismatch, "fiber maps belong to different fibrations");
  std::vector<std::size_t> values(t_size());
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] = subgroup().mul_pos(a.values_[i], b.values_[i]);
  return FiberMap(id_, std::move(values));
}

FiberMap Fibration::fiber_inverse(const FiberMap &f) const {
  if (f.fibration_id_ != id_)
    throw Error(Errc::FibrationMismatch, "fiber map belongs to a different fibration");
  const Subgroup &h = subgroup();
  std::vector<std::size_t> values(t_size());
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] = h.position(group().inverse_of(h.member(f.values_[i])));
  return FiberMap(id_, std::move(values));
}

Permutation Fibration::beta(const FiberMap &f) const {
  if (f.fibration_id_ != id_)
    throw Error(Errc::FibrationMismatch, "fiber map belongs to a different fibration");
  const std::size_t hs = h_size();
  std::vector<Element> images(pair_count());
  for (std::size_t i = 0; i < t_size(); ++i)
    for (std::size_t j = 0; j < hs; ++j)
      images[i * hs + j] =
          static_cast<Element>(i * hs + subgroup().mul_pos(f.values_[i], j));
  return Permutation(std::move(images));
}

Permutation Fibration::alpha(Element g) const {
  check_element(g);
  const std::size_t hs = h_size();
  std::vector<Element> images(pair_count());
  for (std::size_t i = 0; i < t_size(); ++i) {
    const std::size_t target = gamma_pos(g, i) * hs;
    const std::size_t d = delta_pos(g, i);
    for (std::size_t j = 0; j < hs; ++j)
      images[i * hs + j] = static_cast<Element>(target + subgroup().mul_pos(d, j));
  }
  return Permutation(std::move(images));
}

Permutation Fibration::gamma_times_identity(Element g) const {
  check_element(g);
  const std::size_t hs = h_size();
  std::vector<Element> images(pair_count());
  for (std::size_t i = 0; i < t_size(); ++i)
    for (std::size_t j = 0; j < hs; ++j)
      images[i * hs + j] = static_cast<Element>(gamma_pos(g, i) * hs + j);
  return Permutation(std::move(images));
}

Fibration Fibration::with_delta_entry(Element g, std::size_t tpos,
                                      std::size_t hpos) const {
  Fibration copy = *this;
  copy.delta_.at(static_cast<std::size_t>(g) * t_size() + tpos) = hpos;
  return copy;
}

} // namespace diffract
