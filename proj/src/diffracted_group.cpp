#include "diffract/diffracted_group.hpp"

namespace diffract {

namespace {

void require_transversal(const Fibration &f, const char *op) {
  if (!f.is_transversal())
    throw Error(Errc::RequiresTransversal,
                std::string(op) + " requires a transversal (identity among the representatives)");
}

} // namespace

std::size_t bequeath_product_index(const Fibration &f, std::size_t p1, std::size_t p2) {
  const FiniteGroup &g = f.group();
  const Subgroup &h = f.subgroup();
  const std::size_t hs = f.h_size();
  const std::size_t t1 = p1 / hs, h1 = p1 % hs;
  const std::size_t t2 = p2 / hs, h2 = p2 % hs;
  // γ(t1)∘γ(h1) applied to t2, then δ(t1·h1, t2)·h2.
  const std::size_t tp = f.gamma_pos(f.transversal().reps()[t1], f.gamma_pos(h.member(h1), t2));
  const Element t1h1 = g.at(f.transversal().reps()[t1], h.member(h1));
  const std::size_t hp = h.mul_pos(f.delta_pos(t1h1, t2), h2);
  return f.pair_index(tp, hp);
}

Spectrum bequeath_product(const Fibration &f, Spectrum p1, Spectrum p2) {
  require_transversal(f, "bequeath_product");
  return f.pair_at(bequeath_product_index(f, f.pair_index(p1), f.pair_index(p2)));
}

DiffractedGroup DiffractedGroup::build(Fibration f) {
  require_transversal(f, "diffracted group");
  DiffractedGroup d(std::move(f));
  const std::size_t m = d.f_.pair_count();
  d.order_ = m;
  d.table_.resize(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      d.table_[a * m + b] = static_cast<Element>(bequeath_product_index(d.f_, a, b));
  auto validated = FiniteGroup::from_table(m, d.table_);
  d.inverses_.assign(validated.inverses().begin(), validated.inverses().end());
  return d;
}

DiffractedGroup DiffractedGroup::with_table_entry(std::size_t a, std::size_t b,
                                                  Element value) const {
  DiffractedGroup copy = *this;
  copy.table_.at(a * order_ + b) = value;
  return copy;
}

nlohmann::ordered_json DiffractedGroup::to_json() const {
  nlohmann::ordered_json j;
  j["order"] = order_;
  j["t_size"] = f_.t_size();
  j["h_size"] = f_.h_size();
  auto pairs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < order_; ++i) {
    Spectrum s = pair(i);
    pairs.push_back({s.t, s.h});
  }
  j["pairs"] = std::move(pairs);
  auto table = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < order_; ++a)
    table.push_back(std::vector<Element>(table_.begin() + static_cast<std::ptrdiff_t>(a * order_),
                                         table_.begin() + static_cast<std::ptrdiff_t>((a + 1) * order_)));
  j["table"] = std::move(table);
  j["identity"] = identity();
  return j;
}

RewriteTrace rewrite_product(const Fibration &f, Element g1, Element g2) {
  require_transversal(f, "rewrite_product");
  const FiniteGroup &g = f.group();
  RewriteTrace r;
  r.g1 = g1;
  r.g2 = g2;
  Spectrum s1 = f.nabla(g1), s2 = f.nabla(g2);
  r.t1 = s1.t;
  r.h1 = s1.h;
  r.t2 = s2.t;
  r.h2 = s2.h;
  const Element t1h1 = g.at(r.t1, r.h1);
  r.rep_part = f.transversal().bar(g.at(t1h1, r.t2));
  r.fib_part = f.delta(t1h1, r.t2);
  r.h_tail = r.h2;
  r.result = g.at(g1, g2);
  return r;
}

LawResult iso_check(const Fibration &f, const DiffractedGroup &d) {
  LawResult r;
  r.law_id = "diffraction-isomorphism";
  if (!f.is_transversal())
    return LawResult::skipped(r.law_id, "requires-transversal");
  const FiniteGroup &g = f.group();
  const auto n = static_cast<Element>(g.order());

  if (d.order() != n) {
    r.fail({{}, "|T x H| differs from |G|"});
    return r;
  }
  std::vector<std::size_t> image(n);
  for (Element x = 0; x < n; ++x)
    image[x] = f.pair_index(f.nabla(x));

  // Bijectivity.
  std::vector<bool> hit(n, false);
  for (Element x = 0; x < n; ++x) {
    ++r.checks_run;
    if (hit[image[x]])
      r.fail({{{"g", x}}, "nabla is not injective"});
    hit[image[x]] = true;
  }

  // Homomorphism into the bequeath table.
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      ++r.checks_run;
      if (d.mul(image[a], image[b]) != image[g.at(a, b)])
        r.fail({{{"g1", a}, {"g2", b}}, "nabla(g1*g2) != nabla(g1) o nabla(g2)"});
    }

  // Embedding triangle ∇∘ι1 = ι2.
  const Subgroup &h = f.subgroup();
  for (std::size_t j = 0; j < h.size(); ++j) {
    ++r.checks_run;
    Element hm = h.member(j);
    if (image[hm] != f.pair_index(0, j))
      r.fail({{{"h", hm}}, "nabla(iota1(h)) != iota2(h)"});
  }

  // Table-scan inverses against ∇(g⁻¹).
  for (Element x = 0; x < n; ++x) {
    ++r.checks_run;
    if (d.inverse(image[x]) != image[g.inverse_of(x)])
      r.fail({{{"g", x}}, "inverse in T x H disagrees with nabla(g^-1)"});
  }
  return r;
}

} // namespace diffract
