#include "diffract/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "diffract/kernels.hpp"
#include "diffract/lcg.hpp"

namespace diffract {

const char *to_string(Errc code) {
  switch (code) {
  case Errc::IndexOutOfRange: return "IndexOutOfRange";
  case Errc::NotAGroup: return "NotAGroup";
  case Errc::NotAPermutation: return "NotAPermutation";
  case Errc::GroupTooLarge: return "GroupTooLarge";
  case Errc::UnknownBuiltin: return "UnknownBuiltin";
  case Errc::ParamOutOfRange: return "ParamOutOfRange";
  case Errc::NotARepresentativeSystem: return "NotARepresentativeSystem";
  case Errc::NotARepresentative: return "NotARepresentative";
  case Errc::RequiresTransversal: return "RequiresTransversal";
  case Errc::InvalidSpectrum: return "InvalidSpectrum";
  case Errc::FibrationMismatch: return "FibrationMismatch";
  case Errc::UnknownLawId: return "UnknownLawId";
  case Errc::TooLargeForExhaustive: return "TooLargeForExhaustive";
  case Errc::ParseError: return "ParseError";
  case Errc::UnknownElement: return "UnknownElement";
  }
  return "Unknown";
}

const char *to_string(GroupViolation v) {
  switch (v) {
  case GroupViolation::NonLatinSquare: return "non-latin-square";
  case GroupViolation::NoIdentity: return "no-identity";
  case GroupViolation::NonAssociative: return "non-associative";
  case GroupViolation::MissingInverse: return "missing-inverse";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Permutation

namespace {

bool is_bijection(std::span<const Element> images) {
  std::vector<bool> seen(images.size(), false);
  for (Element x : images) {
    if (x >= images.size() || seen[x])
      return false;
    seen[x] = true;
  }
  return true;
}

} // namespace

Permutation::Permutation(std::vector<Element> images)
    : images_(std::move(images)) {
  if (images_.empty() || !is_bijection(images_))
    throw Error(Errc::NotAPermutation,
                "image array is not a bijection on [0, degree)");
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Element> images(degree);
  std::iota(images.begin(), images.end(), Element{0});
  return Permutation(Trusted{}, std::move(images));
}

bool Permutation::is_identity() const {
  return kernels::first_moved(images_) == images_.size();
}

Permutation Permutation::inverse() const {
  std::vector<Element> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[images_[i]] = static_cast<Element>(i);
  return Permutation(Trusted{}, std::move(out));
}

Permutation operator*(const Permutation &f, const Permutation &g) {
  if (f.degree() != g.degree())
    throw Error(Errc::NotAPermutation, "composing permutations of different degree");
  std::vector<Element> out(g.degree());
  kernels::compose(f.images_, g.images_, out);
  return Permutation(Permutation::Trusted{}, std::move(out));
}

std::string to_string(const Permutation &p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.degree(); ++i)
    os << (i ? "," : "") << p(static_cast<Element>(i));
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Validation

namespace {

[[noreturn]] void reject(GroupViolation v, Element a, Element b, Element c,
                         const std::string &detail) {
  std::ostringstream os;
  os << to_string(v) << " at (" << a << "," << b << "," << c << ")";
  if (!detail.empty())
    os << ": " << detail;
  throw NotAGroupError(v, a, b, c, os.str());
}

void check_latin(std::size_t n, std::span<const Element> table) {
  std::vector<std::size_t> where(n);
  std::vector<bool> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t b = 0; b < n; ++b) {
      Element v = table[a * n + b];
      if (seen[v])
        reject(GroupViolation::NonLatinSquare, static_cast<Element>(a),
               static_cast<Element>(where[v]), static_cast<Element>(b),
               "row repeats a value");
      seen[v] = true;
      where[v] = b;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t a = 0; a < n; ++a) {
      Element v = table[a * n + b];
      if (seen[v])
        reject(GroupViolation::NonLatinSquare, static_cast<Element>(where[v]),
               static_cast<Element>(b), static_cast<Element>(a),
               "column repeats a value");
      seen[v] = true;
      where[v] = a;
    }
  }
}

void check_identity(std::size_t n, std::span<const Element> table) {
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x] != x || table[x * n] != x)
      reject(GroupViolation::NoIdentity, 0, static_cast<Element>(x),
             static_cast<Element>(x), "index 0 is not a two-sided identity");
  }
}

// (a·b)·c = a·(b·c) for all c is row(a·b) == row(a)∘row(b).
void check_associative(std::size_t n, std::span<const Element> table) {
  auto row = [&](std::size_t a) { return table.subspan(a * n, n); };
  if (n <= kExhaustiveAssociativityBound) {
    std::vector<Element> rhs(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        kernels::compose(row(a), row(b), rhs);
        std::size_t c = kernels::first_mismatch(row(table[a * n + b]), rhs);
        if (c != n)
          reject(GroupViolation::NonAssociative, static_cast<Element>(a),
                 static_cast<Element>(b), static_cast<Element>(c), "");
      }
    }
    return;
  }
  Lcg rng(0x9E3779B97F4A7C15ULL);
  const std::size_t samples = 10 * n * n;
  const auto bound = static_cast<std::uint32_t>(n);
  for (std::size_t s = 0; s < samples; ++s) {
    std::size_t a = rng.below(bound), b = rng.below(bound), c = rng.below(bound);
    if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]])
      reject(GroupViolation::NonAssociative, static_cast<Element>(a),
             static_cast<Element>(b), static_cast<Element>(c), "sampled");
  }
}

std::vector<Element> compute_inverses(std::size_t n,
                                      std::span<const Element> table) {
  std::vector<Element> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto r = table.subspan(a * n, n);
    auto it = std::find(r.begin(), r.end(), Element{0});
    auto x = static_cast<std::size_t>(it - r.begin());
    if (it == r.end() || table[x * n + a] != 0)
      reject(GroupViolation::MissingInverse, static_cast<Element>(a),
             static_cast<Element>(x < n ? x : 0), 0, "");
    inv[a] = static_cast<Element>(x);
  }
  return inv;
}

} // namespace

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Element> table,
                                    std::vector<std::string> labels) {
  if (order == 0)
    throw Error(Errc::IndexOutOfRange, "group order must be positive");
  if (table.size() != order * order)
    throw Error(Errc::IndexOutOfRange, "table must hold order*order entries");
  for (Element v : table)
    if (v >= order)
      throw Error(Errc::IndexOutOfRange,
                  "table entry " + std::to_string(v) + " out of range");
  if (!labels.empty() && labels.size() != order)
    throw Error(Errc::IndexOutOfRange, "label count must equal the order");

  check_latin(order, table);
  check_identity(order, table);
  check_associative(order, table);

  FiniteGroup g;
  g.order_ = order;
  g.inverses_ = compute_inverses(order, table);
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  return g;
}

// ---------------------------------------------------------------------------
// Permutation groups

namespace {

std::string cycle_label(std::span<const Element> images) {
  std::vector<bool> done(images.size(), false);
  std::ostringstream os;
  bool any = false;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (done[start] || images[start] == start)
      continue;
    any = true;
    os << '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      os << (first ? "" : " ") << x;
      first = false;
      x = images[x];
    }
    os << ')';
  }
  return any ? os.str() : "e";
}

struct ElementsAndTable {
  std::vector<Element> table;
  std::vector<std::string> labels;
};

// Multiplication table for an explicit list of distinct permutations that is
// closed under composition.
ElementsAndTable tabulate(std::size_t degree,
                          const std::vector<std::vector<Element>> &elements) {
  std::map<std::vector<Element>, Element> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    index.emplace(elements[i], static_cast<Element>(i));
  const std::size_t n = elements.size();
  ElementsAndTable out;
  out.table.resize(n * n);
  std::vector<Element> prod(degree);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      kernels::compose(elements[a], elements[b], prod);
      out.table[a * n + b] = index.at(prod);
    }
  }
  out.labels.reserve(n);
  for (const auto &e : elements)
    out.labels.push_back(cycle_label(e));
  return out;
}

FiniteGroup from_closed_permutations(std::size_t degree,
                                     const std::vector<std::vector<Element>> &elements) {
  auto t = tabulate(degree, elements);
  return FiniteGroup::from_table(elements.size(), std::move(t.table),
                                 std::move(t.labels));
}

} // namespace

FiniteGroup
FiniteGroup::from_permutations(std::size_t degree,
                               const std::vector<std::vector<Element>> &generators,
                               std::size_t cap) {
  if (degree == 0)
    throw Error(Errc::NotAPermutation, "degree must be positive");
  for (const auto &g : generators)
    if (g.size() != degree || !is_bijection(g))
      throw Error(Errc::NotAPermutation,
                  "generator is not a bijection on [0, " + std::to_string(degree) + ")");

  std::vector<std::vector<Element>> elements;
  std::map<std::vector<Element>, Element> index;
  auto id = Permutation::identity(degree);
  elements.emplace_back(id.images().begin(), id.images().end());
  index.emplace(elements.back(), 0);

  std::vector<Element> prod(degree);
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const auto &gen : generators) {
      kernels::compose(elements[next], gen, prod);
      if (index.contains(prod))
        continue;
      if (elements.size() >= cap)
        throw Error(Errc::GroupTooLarge,
                    "closure exceeds the cap of " + std::to_string(cap) + " elements");
      index.emplace(prod, static_cast<Element>(elements.size()));
      elements.push_back(prod);
    }
  }
  return from_closed_permutations(degree, elements);
}

// ---------------------------------------------------------------------------
// Accessors

void FiniteGroup::check_index(Element a) const {
  if (a >= order_)
    throw Error(Errc::IndexOutOfRange, "element index " + std::to_string(a) +
                                           " out of range for order " +
                                           std::to_string(order_));
}

Element FiniteGroup::mul(Element a, Element b) const {
  check_index(a);
  check_index(b);
  return at(a, b);
}

Element FiniteGroup::inv(Element a) const {
  check_index(a);
  return inverses_[a];
}

std::string FiniteGroup::label(Element a) const {
  if (a < labels_.size())
    return labels_[a];
  return std::to_string(a);
}

std::optional<Element> FiniteGroup::find(std::string_view text) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == text)
      return static_cast<Element>(i);
  Element value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc{} && ptr == text.data() + text.size() && value < order_)
    return value;
  return std::nullopt;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (table_[a * order_ + b] != table_[b * order_ + a])
        return false;
  return true;
}

std::size_t FiniteGroup::element_order(Element a) const {
  check_index(a);
  std::size_t k = 1;
  for (Element x = a; x != 0; x = at(x, a))
    ++k;
  return k;
}

Permutation FiniteGroup::cayley_rho(Element g) const {
  check_index(g);
  auto r = row(g);
  return Permutation(Permutation::Trusted{}, std::vector<Element>(r.begin(), r.end()));
}

// ---------------------------------------------------------------------------
// Builtins

namespace {

[[noreturn]] void out_of_range(std::string_view family, const std::string &why) {
  throw Error(Errc::ParamOutOfRange, std::string(family) + ": " + why);
}

long require_param(std::string_view family, std::optional<long> param, long lo,
                   long hi) {
  if (!param)
    out_of_range(family, "missing parameter");
  if (*param < lo || *param > hi)
    out_of_range(family, "parameter must lie in [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]");
  return *param;
}

FiniteGroup make_cyclic(std::size_t n) {
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "e" : i == 1 ? "a" : "a^" + std::to_string(i);
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = static_cast<Element>((i + j) % n);
  }
  return FiniteGroup::from_table(n, std::move(table), std::move(labels));
}

FiniteGroup make_klein4() {
  std::vector<Element> table(16);
  for (Element i = 0; i < 4; ++i)
    for (Element j = 0; j < 4; ++j)
      table[i * 4 + j] = i ^ j;
  return FiniteGroup::from_table(4, std::move(table), {"e", "a", "b", "ab"});
}

FiniteGroup make_dihedral(std::size_t n) {
  const std::size_t order = 2 * n;
  std::vector<Element> table(order * order);
  std::vector<std::string> labels(order);
  auto rpow = [](std::size_t i) -> std::string {
    return i == 0 ? "" : i == 1 ? "r" : "r^" + std::to_string(i);
  };
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      std::string l = rpow(i) + (j ? "s" : "");
      labels[i + n * j] = l.empty() ? "e" : l;
    }
  // (r^i s^j)(r^k s^l) = r^(i + (-1)^j k) s^(j+l)
  for (std::size_t a = 0; a < order; ++a) {
    std::size_t i = a % n, j = a / n;
    for (std::size_t b = 0; b < order; ++b) {
      std::size_t k = b % n, l = b / n;
      std::size_t r = j ? (i + n - k) % n : (i + k) % n;
      table[a * order + b] = static_cast<Element>(r + n * ((j + l) % 2));
    }
  }
  return FiniteGroup::from_table(order, std::move(table), std::move(labels));
}

FiniteGroup make_quaternion() {
  // Index 2u + s encodes sign (-1)^s times unit u in {1, i, j, k}.
  // unit_mul[u][v] = (sign, unit) of u·v.
  static constexpr int kSign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static constexpr int kUnit[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<Element> table(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, sa = a % 2, ub = b / 2, sb = b % 2;
      int s = (sa + sb + kSign[ua][ub]) % 2;
      table[a * 8 + b] = static_cast<Element>(2 * kUnit[ua][ub] + s);
    }
  return FiniteGroup::from_table(8, std::move(table),
                                 {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup make_symmetric(std::size_t n, bool even_only) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::vector<std::vector<Element>> elements;
  do {
    if (even_only) {
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          inversions += p[i] > p[j];
      if (inversions % 2)
        continue;
    }
    elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return from_closed_permutations(n, elements);
}

} // namespace

FiniteGroup builtin(std::string_view family, std::optional<long> param) {
  if (family == "cyclic")
    return make_cyclic(static_cast<std::size_t>(
        require_param(family, param, 1, static_cast<long>(kDefaultClosureCap))));
  if (family == "dihedral")
    return make_dihedral(static_cast<std::size_t>(
        require_param(family, param, 1, static_cast<long>(kDefaultClosureCap / 2))));
  if (family == "symmetric")
    return make_symmetric(static_cast<std::size_t>(require_param(family, param, 1, 6)),
                          false);
  if (family == "alternating")
    return make_symmetric(static_cast<std::size_t>(require_param(family, param, 1, 6)),
                          true);
  if (family == "quaternion" || family == "klein4") {
    if (param)
      out_of_range(family, "takes no parameter");
    return family == "klein4" ? make_klein4() : make_quaternion();
  }
  throw Error(Errc::UnknownBuiltin, "unknown builtin group '" + std::string(family) + "'");
}

FiniteGroup builtin_from_spec(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    return builtin(spec);
  auto family = spec.substr(0, colon);
  auto digits = spec.substr(colon + 1);
  long value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
    throw Error(Errc::ParseError, "bad builtin parameter in '" + std::string(spec) + "'");
  return builtin(family, value);
}

// ---------------------------------------------------------------------------
// Subgroups and cosets

Subgroup Subgroup::generate(GroupPtr parent, std::span<const Element> gens) {
  const FiniteGroup &g = *parent;
  const std::size_t n = g.order();
  for (Element x : gens)
    if (x >= n)
      throw Error(Errc::IndexOutOfRange,
                  "generator " + std::to_string(x) + " out of range");

  std::vector<bool> in(n, false);
  std::vector<Element> found{0};
  in[0] = true;
  for (Element x : gens)
    if (!in[x]) {
      in[x] = true;
      found.push_back(x);
    }
  // Closure under right multiplication by generators suffices in a finite group.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (Element s : gens) {
      Element p = g.at(found[i], s);
      if (!in[p]) {
        in[p] = true;
        found.push_back(p);
      }
    }

  Subgroup h;
  h.parent_ = std::move(parent);
  h.members_ = std::move(found);
  std::sort(h.members_.begin(), h.members_.end());
  if (n % h.members_.size() != 0)
    throw Error(Errc::NotAGroup, "subgroup order does not divide group order");
  h.position_.assign(n, -1);
  for (std::size_t i = 0; i < h.members_.size(); ++i)
    h.position_[h.members_[i]] = static_cast<int>(i);

  const std::size_t m = h.members_.size();
  h.mul_pos_.resize(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      int p = h.position_[g.at(h.members_[a], h.members_[b])];
      if (p < 0)
        throw Error(Errc::NotAGroup, "generated set is not closed");
      h.mul_pos_[a * m + b] = p;
    }
  for (Element x : h.members_)
    if (!h.contains(g.inverse_of(x)))
      throw Error(Errc::NotAGroup, "generated set is not closed under inverses");
  return h;
}

CosetDecomposition::CosetDecomposition(Subgroup h) : h_(std::move(h)) {
  const FiniteGroup &g = h_.parent();
  const std::size_t n = g.order();
  constexpr auto kUnassigned = static_cast<std::size_t>(-1);
  coset_of_.assign(n, kUnassigned);
  // Scanning g ascending assigns ids in order of each coset's minimum.
  for (std::size_t x = 0; x < n; ++x) {
    if (coset_of_[x] != kUnassigned)
      continue;
    std::vector<Element> members;
    members.reserve(h_.size());
    for (Element k : h_.members())
      members.push_back(g.at(static_cast<Element>(x), k));
    std::sort(members.begin(), members.end());
    for (Element y : members)
      coset_of_[y] = cosets_.size();
    cosets_.push_back(std::move(members));
  }
}

} // namespace diffract
