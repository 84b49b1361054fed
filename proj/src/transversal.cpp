#include "diffract/transversal.hpp"

#include <charconv>
#include <sstream>

#include "diffract/lcg.hpp"

namespace diffract {

namespace {

[[noreturn]] void bad_strategy(std::string_view text) {
  throw Error(Errc::ParseError, "bad strategy '" + std::string(text) +
                                    "' (expected min, random:SEED or list:i1,i2,...)");
}

template <typename T> T parse_number(std::string_view digits, std::string_view whole) {
  T value{};
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
    bad_strategy(whole);
  return value;
}

} // namespace

TransversalStrategy TransversalStrategy::parse(std::string_view text) {
  if (text == "min")
    return min_index();
  if (text.starts_with("random:"))
    return random(parse_number<std::uint64_t>(text.substr(7), text));
  if (text.starts_with("list:")) {
    std::vector<Element> elements;
    std::string_view rest = text.substr(5);
    while (true) {
      auto comma = rest.find(',');
      elements.push_back(parse_number<Element>(rest.substr(0, comma), text));
      if (comma == std::string_view::npos)
        break;
      rest = rest.substr(comma + 1);
    }
    return explicit_list(std::move(elements));
  }
  bad_strategy(text);
}

std::string TransversalStrategy::describe() const {
  switch (kind) {
  case Kind::MinIndex:
    return "min";
  case Kind::Random:
    return "random:" + std::to_string(seed);
  case Kind::Explicit: {
    std::ostringstream os;
    os << "list:";
    for (std::size_t i = 0; i < elements.size(); ++i)
      os << (i ? "," : "") << elements[i];
    return os.str();
  }
  }
  return "?";
}

Element Transversal::bar(Element g) const {
  if (g >= bar_of_.size())
    throw Error(Errc::IndexOutOfRange, "element index " + std::to_string(g) +
                                           " out of range");
  return bar_of_[g];
}

void Transversal::finish() {
  const std::size_t n = group().order();
  bar_of_.resize(n);
  for (std::size_t g = 0; g < n; ++g)
    bar_of_[g] = reps_[dec_.coset_of(static_cast<Element>(g))];
  rep_pos_.assign(n, -1);
  for (std::size_t c = 0; c < reps_.size(); ++c)
    rep_pos_[reps_[c]] = static_cast<int>(c);
  is_transversal_ = rep_pos_[0] >= 0;
}

Transversal Transversal::with_bar_entry(Element g, Element value) const {
  Transversal copy = *this;
  copy.bar_of_.at(g) = value;
  return copy;
}

Transversal choose(const CosetDecomposition &dec, const TransversalStrategy &strategy,
                   bool allow_non_transversal) {
  Transversal t(dec);
  const std::size_t count = dec.count();
  t.reps_.resize(count);

  switch (strategy.kind) {
  case TransversalStrategy::Kind::MinIndex:
    for (std::size_t c = 0; c < count; ++c)
      t.reps_[c] = dec.coset(c).front();
    break;
  case TransversalStrategy::Kind::Random: {
    Lcg rng(strategy.seed);
    for (std::size_t c = 0; c < count; ++c) {
      auto members = dec.coset(c);
      t.reps_[c] = members[rng.below(static_cast<std::uint32_t>(members.size()))];
    }
    if (!allow_non_transversal)
      t.reps_[dec.coset_of(0)] = 0;
    break;
  }
  case TransversalStrategy::Kind::Explicit: {
    const std::size_t n = dec.group().order();
    std::vector<bool> filled(count, false);
    for (Element x : strategy.elements) {
      if (x >= n)
        throw Error(Errc::NotARepresentativeSystem,
                    "element " + std::to_string(x) + " out of range");
      std::size_t c = dec.coset_of(x);
      if (filled[c])
        throw Error(Errc::NotARepresentativeSystem,
                    "coset " + std::to_string(c) + " represented twice");
      filled[c] = true;
      t.reps_[c] = x;
    }
    for (std::size_t c = 0; c < count; ++c)
      if (!filled[c])
        throw Error(Errc::NotARepresentativeSystem,
                    "coset " + std::to_string(c) + " has no representative");
    break;
  }
  }
  t.finish();
  return t;
}

LawResult check_representative_calculus(const Transversal &t) {
  LawResult r;
  r.law_id = "representative-calculus";
  const FiniteGroup &g = t.group();
  const auto &dec = t.decomposition();
  const auto n = static_cast<Element>(g.order());

  for (Element x = 0; x < n; ++x) {
    ++r.checks_run;
    Element b = t.bar_unchecked(x);
    if (b >= n || dec.coset_of(x) != dec.coset_of(b))
      r.fail({{{"g", x}, {"bar_g", b}}, "g and bar(g) lie in different cosets"});
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      ++r.checks_run;
      Element bb = t.bar_unchecked(b);
      if (bb >= n) {
        r.fail({{{"g1", a}, {"g2", b}}, "bar(g2) out of range"});
        continue;
      }
      if (t.bar_unchecked(g.at(a, bb)) != t.bar_unchecked(g.at(a, b)))
        r.fail({{{"g1", a}, {"g2", b}}, "bar(g1*bar(g2)) != bar(g1*g2)"});
    }
  return r;
}

} // namespace diffract
