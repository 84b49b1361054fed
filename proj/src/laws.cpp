#include "diffract/laws.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "diffract/kernels.hpp"

namespace diffract {

const char *to_string(LawStatus s) {
  switch (s) {
  case LawStatus::Pass: return "pass";
  case LawStatus::Fail: return "fail";
  case LawStatus::Skipped: return "skipped";
  }
  return "?";
}

namespace {

constexpr std::size_t kFiberClosureCap = 65536;
constexpr const char *kNeedsTransversal = "requires-transversal";

constexpr std::array<std::string_view, 13> kLawIds = {
    "alpha-faithful",
    "bequeathed-rewrite",
    "beta-faithful",
    "cayley-representation",
    "cocycle",
    "diffracted-group",
    "diffraction-decomposition",
    "diffraction-isomorphism",
    "fiber-action",
    "fibration-containment",
    "frobenius-homomorphism",
    "gset-isomorphism",
    "representative-calculus",
};

// Shared state for one run: the diffracted group is built at most once.
struct Context {
  const Fibration &f;
  const DiffractedGroup *prebuilt;
  std::optional<DiffractedGroup> built;
  std::optional<NotAGroupError> build_error;
  bool attempted = false;

  const DiffractedGroup *diffracted() {
    if (prebuilt)
      return prebuilt;
    if (!attempted) {
      attempted = true;
      try {
        built.emplace(DiffractedGroup::build(f));
      } catch (const NotAGroupError &e) {
        build_error.emplace(e);
      }
    }
    return built ? &*built : nullptr;
  }
};

LawResult start(std::string_view id) {
  LawResult r;
  r.law_id = std::string(id);
  return r;
}

Element el(std::size_t x) { return static_cast<Element>(x); }

// --- Cayley ----------------------------------------------------------------

LawResult cayley_representation(Context &ctx) {
  LawResult r = start("cayley-representation");
  const FiniteGroup &g = ctx.f.group();
  const std::size_t n = g.order();

  std::vector<Permutation> rho;
  rho.reserve(n);
  for (std::size_t x = 0; x < n; ++x)
    rho.push_back(g.cayley_rho(el(x)));

  ++r.checks_run;
  if (!rho[0].is_identity())
    r.fail({{{"g", 0}}, "rho(e) is not the identity"});

  // Diagram (3): g·h read off rho(g).
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      ++r.checks_run;
      if (rho[a](el(b)) != g.at(el(a), el(b)))
        r.fail({{{"g", el(a)}, {"h", el(b)}}, "g*h != rho(g)(h)"});
    }

  std::vector<Element> comp(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      ++r.checks_run;
      kernels::compose(rho[a].images(), rho[b].images(), comp);
      if (kernels::first_mismatch(comp, rho[g.at(el(a), el(b))].images()) != n)
        r.fail({{{"g1", el(a)}, {"g2", el(b)}}, "rho(g1*g2) != rho(g1) o rho(g2)"});
    }

  std::map<std::vector<Element>, Element> seen;
  for (std::size_t a = 0; a < n; ++a) {
    ++r.checks_run;
    std::vector<Element> key(rho[a].images().begin(), rho[a].images().end());
    auto [it, fresh] = seen.emplace(std::move(key), el(a));
    if (!fresh)
      r.fail({{{"g1", it->second}, {"g2", el(a)}}, "rho is not injective"});
  }
  return r;
}

// --- Frobenius -------------------------------------------------------------

LawResult frobenius_homomorphism(Context &ctx) {
  LawResult r = start("frobenius-homomorphism");
  const Fibration &f = ctx.f;
  const FiniteGroup &g = f.group();
  const std::size_t n = g.order();
  const std::size_t k = f.t_size();

  std::vector<Permutation> gam;
  gam.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    ++r.checks_run;
    try {
      gam.push_back(f.gamma(el(x)));
    } catch (const Error &) {
      r.fail({{{"g", el(x)}}, "gamma(g) is not a permutation of T"});
      return r;
    }
  }
  ++r.checks_run;
  if (!gam[0].is_identity())
    r.fail({{{"g", 0}}, "gamma(e) is not the identity"});

  std::vector<Element> comp(k);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      ++r.checks_run;
      kernels::compose(gam[a].images(), gam[b].images(), comp);
      if (kernels::first_mismatch(comp, gam[g.at(el(a), el(b))].images()) != k)
        r.fail({{{"g1", el(a)}, {"g2", el(b)}}, "gamma(g1*g2) != gamma(g1) o gamma(g2)"});
    }
  return r;
}

// --- Fibration -------------------------------------------------------------

LawResult fibration_containment(Context &ctx) {
  LawResult r = start("fibration-containment");
  const Fibration &f = ctx.f;
  const FiniteGroup &g = f.group();
  const Subgroup &h = f.subgroup();
  const Transversal &t = f.transversal();
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < f.t_size(); ++i) {
      ++r.checks_run;
      Element rep = t.reps()[i];
      Element gt = g.at(el(x), rep);
      Element expected = g.at(g.inverse_of(t.bar_unchecked(gt)), gt);
      Element stored = h.member(f.delta_pos(el(x), i));
      if (!h.contains(expected))
        r.fail({{{"g", el(x)}, {"t", rep}}, "bar(gt)^-1 g t is not in H"});
      else if (stored != expected)
        r.fail({{{"g", el(x)}, {"t", rep}, {"stored", stored}},
                "stored delta(g,t) != bar(gt)^-1 g t"});
      else if (x == 0 && stored != 0)
        r.fail({{{"t", rep}}, "delta(e,t) != e"});
    }
  return r;
}

LawResult cocycle(Context &ctx) {
  LawResult r = start("cocycle");
  const Fibration &f = ctx.f;
  const FiniteGroup &g = f.group();
  const Subgroup &h = f.subgroup();
  const std::size_t n = g.order();
  const std::size_t k = f.t_size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Element ab = g.at(el(a), el(b));
      for (std::size_t i = 0; i < k; ++i) {
        ++r.checks_run;
        std::size_t lhs = f.delta_pos(ab, i);
        std::size_t rhs = h.mul_pos(f.delta_pos(el(a), f.gamma_pos(el(b), i)),
                                    f.delta_pos(el(b), i));
        if (lhs != rhs)
          r.fail({{{"g1", el(a)}, {"g2", el(b)}, {"t", f.transversal().reps()[i]}},
                  "delta(g1 g2, t) != delta(g1, gamma(g2)(t)) delta(g2, t)"});
      }
    }
  return r;
}

// --- Diffraction map -------------------------------------------------------

LawResult diffraction_decomposition(Context &ctx) {
  LawResult r = start("diffraction-decomposition");
  const Fibration &f = ctx.f;
  if (!f.is_transversal())
    return LawResult::skipped(r.law_id, kNeedsTransversal);
  const FiniteGroup &g = f.group();
  const Subgroup &h = f.subgroup();
  const Transversal &t = f.transversal();
  const std::size_t n = g.order();

  for (std::size_t x = 0; x < n; ++x) {
    ++r.checks_run;
    Spectrum s = f.nabla(el(x));
    Element rep = t.bar_unchecked(el(x));
    Element tail = g.at(g.inverse_of(rep), el(x));
    if (s.t != rep || s.h != tail)
      r.fail({{{"g", el(x)}}, "nabla(g) != <bar(g), bar(g)^-1 g>"});
    else if (!t.is_rep(s.t) || !h.contains(s.h))
      r.fail({{{"g", el(x)}}, "nabla(g) leaves T x H"});
    else if (f.nabla_inv(s) != el(x))
      r.fail({{{"g", el(x)}}, "nabla_inv(nabla(g)) != g"});
  }

  // Every g factors as t·h in exactly one way.
  std::vector<std::size_t> hits(n, 0);
  for (std::size_t i = 0; i < f.t_size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j) {
      ++r.checks_run;
      Spectrum s{t.reps()[i], h.member(j)};
      Element x = f.nabla_inv(s);
      ++hits[x];
      if (f.nabla(x) != s)
        r.fail({{{"t", s.t}, {"h", s.h}}, "nabla(nabla_inv(<t,h>)) != <t,h>"});
    }
  for (std::size_t x = 0; x < n; ++x)
    if (hits[x] != 1)
      r.fail({{{"g", el(x)}}, "g does not factor uniquely as t*h"});
  return r;
}

// --- Pointwise group and beta ----------------------------------------------

std::vector<FiberMap> dual_images(const Fibration &f) {
  std::vector<FiberMap> out;
  out.reserve(f.group().order());
  for (std::size_t x = 0; x < f.group().order(); ++x)
    out.push_back(f.dual_delta(el(x)));
  return out;
}

LawResult fiber_action(Context &ctx) {
  LawResult r = start("fiber-action");
  const Fibration &f = ctx.f;
  const std::size_t hs = f.h_size();
  const FiberMap one = f.constant_identity();
  auto images = dual_images(f);

  ++r.checks_run;
  if (!f.beta(one).is_identity())
    r.fail({{}, "beta(constant e) is not the identity"});

  for (std::size_t x = 0; x < images.size(); ++x) {
    const FiberMap &d = images[x];
    ++r.checks_run;
    if (f.fiber_mul(d, one) != d || f.fiber_mul(one, d) != d)
      r.fail({{{"g", el(x)}}, "constant e is not neutral for dual_delta(g)"});
    ++r.checks_run;
    if (f.fiber_mul(d, f.fiber_inverse(d)) != one)
      r.fail({{{"g", el(x)}}, "dual_delta(g) times its pointwise inverse is not constant e"});
    ++r.checks_run;
    Permutation b = f.beta(d);
    for (std::size_t p = 0; p < b.degree(); ++p)
      if (b(el(p)) / hs != p / hs) {
        r.fail({{{"g", el(x)}, {"pair", el(p), false}}, "beta moves the t coordinate"});
        break;
      }
  }
  return r;
}

LawResult beta_faithful(Context &ctx) {
  LawResult r = start("beta-faithful");
  const Fibration &f = ctx.f;
  const std::size_t n = f.group().order();
  const FiberMap one = f.constant_identity();
  auto images = dual_images(f);

  std::vector<Permutation> beta;
  beta.reserve(n);
  for (const auto &d : images)
    beta.push_back(f.beta(d));

  const std::size_t deg = f.pair_count();
  std::vector<Element> comp(deg);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      ++r.checks_run;
      kernels::compose(beta[a].images(), beta[b].images(), comp);
      Permutation prod = f.beta(f.fiber_mul(images[a], images[b]));
      if (kernels::first_mismatch(comp, prod.images()) != deg)
        r.fail({{{"g1", el(a)}, {"g2", el(b)}},
                "beta(dd(g1) dd(g2)) != beta(dd(g1)) o beta(dd(g2))"});
    }

  // Subgroup of H^T generated by the dual images, breadth-first.
  using Key = std::vector<std::size_t>;
  auto key = [](const FiberMap &m) { return Key(m.values().begin(), m.values().end()); };
  std::set<Key> image_set;
  for (const auto &d : images)
    image_set.insert(key(d));

  std::vector<FiberMap> generated{one};
  std::set<Key> known{key(one)};
  bool truncated = false;
  for (std::size_t i = 0; i < generated.size() && !truncated; ++i)
    for (const auto &gen : images) {
      FiberMap p = f.fiber_mul(generated[i], gen);
      if (known.insert(key(p)).second) {
        if (generated.size() >= kFiberClosureCap) {
          truncated = true;
          break;
        }
        generated.push_back(std::move(p));
      }
    }

  for (const auto &m : generated) {
    ++r.checks_run;
    bool trivial = m == one;
    if (f.beta(m).is_identity() != trivial) {
      Witness w{{}, "beta(f) = id does not match f = constant e"};
      for (std::size_t i = 0; i < m.values().size(); ++i)
        w.elements.push_back({"f" + std::to_string(i), f.subgroup().member(m[i])});
      r.fail(std::move(w));
    }
  }

  bool closed = true;
  for (const auto &a : image_set) {
    for (const auto &b : image_set) {
      Key prod(a.size());
      for (std::size_t i = 0; i < a.size(); ++i)
        prod[i] = f.subgroup().mul_pos(a[i], b[i]);
      if (!image_set.contains(prod)) {
        closed = false;
        break;
      }
    }
    if (!closed)
      break;
  }

  r.details["image_size"] = image_set.size();
  r.details["dual_delta_injective"] = image_set.size() == n;
  r.details["image_closed"] = closed;
  r.details["generated_order"] = generated.size();
  r.details["closure_truncated"] = truncated;
  return r;
}

// --- alpha -----------------------------------------------------------------

LawResult alpha_faithful(Context &ctx) {
  LawResult r = start("alpha-faithful");
  const Fibration &f = ctx.f;
  const FiniteGroup &g = f.group();
  const std::size_t n = g.order();
  const std::size_t deg = f.pair_count();

  std::vector<Permutation> alpha;
  alpha.reserve(n);
  for (std::size_t x = 0; x < n; ++x)
    alpha.push_back(f.alpha(el(x)));

  ++r.checks_run;
  if (!alpha[0].is_identity())
    r.fail({{{"g", 0}}, "alpha(e) is not the identity"});

  std::vector<Element> comp(deg);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      ++r.checks_run;
      kernels::compose(alpha[a].images(), alpha[b].images(), comp);
      if (kernels::first_mismatch(comp, alpha[g.at(el(a), el(b))].images()) != deg)
        r.fail({{{"g1", el(a)}, {"g2", el(b)}}, "alpha(g1*g2) != alpha(g1) o alpha(g2)"});
    }

  std::map<std::vector<Element>, Element> seen;
  for (std::size_t a = 0; a < n; ++a) {
    ++r.checks_run;
    std::vector<Element> k(alpha[a].images().begin(), alpha[a].images().end());
    auto [it, fresh] = seen.emplace(std::move(k), el(a));
    if (!fresh)
      r.fail({{{"g1", it->second}, {"g2", el(a)}}, "alpha is not injective"});
  }

  for (std::size_t a = 0; a < n; ++a) {
    ++r.checks_run;
    Permutation factored = f.gamma_times_identity(el(a)) * f.beta(f.dual_delta(el(a)));
    if (factored != alpha[a])
      r.fail({{{"g", el(a)}}, "alpha(g) != (gamma(g) x id) o beta(dual_delta(g))"});
  }

  if (!f.is_transversal())
    r.details["note"] = "unverified-faithfulness: representative system is not a transversal";
  return r;
}

// --- G-set square ----------------------------------------------------------

LawResult gset_isomorphism(Context &ctx) {
  LawResult r = start("gset-isomorphism");
  const Fibration &f = ctx.f;
  if (!f.is_transversal())
    return LawResult::skipped(r.law_id, kNeedsTransversal);
  const FiniteGroup &g = f.group();
  const std::size_t n = g.order();
  std::vector<std::size_t> nab(n);
  for (std::size_t x = 0; x < n; ++x)
    nab[x] = f.pair_index(f.nabla(el(x)));
  for (std::size_t a = 0; a < n; ++a) {
    Permutation al = f.alpha(el(a));
    for (std::size_t k = 0; k < n; ++k) {
      ++r.checks_run;
      if (nab[g.at(el(a), el(k))] != al(el(nab[k])))
        r.fail({{{"g", el(a)}, {"k", el(k)}}, "nabla(g*k) != alpha(g)(nabla(k))"});
    }
  }
  return r;
}

// --- Diffracted group ------------------------------------------------------

LawResult diffracted_group(Context &ctx) {
  LawResult r = start("diffracted-group");
  const Fibration &f = ctx.f;
  if (!f.is_transversal())
    return LawResult::skipped(r.law_id, kNeedsTransversal);
  const FiniteGroup &g = f.group();
  const Transversal &t = f.transversal();
  const Subgroup &h = f.subgroup();
  const std::size_t n = g.order();

  // First coordinate of the bequeath product is bar(t1·h1·t2).
  for (std::size_t i1 = 0; i1 < f.t_size(); ++i1)
    for (std::size_t j = 0; j < h.size(); ++j)
      for (std::size_t i2 = 0; i2 < f.t_size(); ++i2) {
        ++r.checks_run;
        Element t1 = t.reps()[i1], h1 = h.member(j), t2 = t.reps()[i2];
        std::size_t lhs = f.gamma_pos(t1, f.gamma_pos(h1, i2));
        std::size_t rhs = t.rep_position(t.bar_unchecked(g.at(g.at(t1, h1), t2)));
        if (lhs != rhs)
          r.fail({{{"t1", t1}, {"h1", h1}, {"t2", t2}},
                  "gamma(t1) o gamma(h1)(t2) != bar(t1 h1 t2)"});
      }

  const DiffractedGroup *d = ctx.diffracted();
  if (!d) {
    const auto &e = *ctx.build_error;
    r.fail({{{"a", e.witness()[0], false}, {"b", e.witness()[1], false},
             {"c", e.witness()[2], false}},
            std::string("bequeath table is not a group: ") + e.what()});
    return r;
  }

  ++r.checks_run;
  std::vector<Element> copy(d->table().begin(), d->table().end());
  try {
    FiniteGroup::from_table(d->order(), std::move(copy));
  } catch (const NotAGroupError &e) {
    r.fail({{{"a", e.witness()[0], false}, {"b", e.witness()[1], false},
             {"c", e.witness()[2], false}},
            std::string("bequeath table is not a group: ") + e.what()});
  } catch (const Error &e) {
    r.fail({{}, std::string("bequeath table is malformed: ") + e.what()});
  }

  ++r.checks_run;
  if (f.pair_at(d->identity()) != Spectrum{0, 0})
    r.fail({{}, "identity of T x H is not <e,e>"});

  // Oracle: the bequeath table is G's table relabeled through nabla.
  std::vector<std::size_t> nab(n);
  for (std::size_t x = 0; x < n; ++x)
    nab[x] = f.pair_index(f.nabla(el(x)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      ++r.checks_run;
      if (d->mul(nab[a], nab[b]) != nab[g.at(el(a), el(b))])
        r.fail({{{"g1", el(a)}, {"g2", el(b)}},
                "table_D[nabla(g1)][nabla(g2)] != nabla(g1*g2)"});
    }
  return r;
}

LawResult diffraction_isomorphism(Context &ctx) {
  if (!ctx.f.is_transversal())
    return LawResult::skipped("diffraction-isomorphism", kNeedsTransversal);
  const DiffractedGroup *d = ctx.diffracted();
  if (!d) {
    LawResult r = start("diffraction-isomorphism");
    r.fail({{}, std::string("diffracted group could not be built: ") +
                    ctx.build_error->what()});
    return r;
  }
  return iso_check(ctx.f, *d);
}

LawResult bequeathed_rewrite(Context &ctx) {
  LawResult r = start("bequeathed-rewrite");
  const Fibration &f = ctx.f;
  if (!f.is_transversal())
    return LawResult::skipped(r.law_id, kNeedsTransversal);
  const FiniteGroup &g = f.group();
  const Transversal &t = f.transversal();
  const Subgroup &h = f.subgroup();
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      ++r.checks_run;
      RewriteTrace tr = rewrite_product(f, el(a), el(b));
      bool ok = t.is_rep(tr.rep_part) && h.contains(tr.fib_part) &&
                h.contains(tr.h_tail) && g.at(tr.t1, tr.h1) == tr.g1 &&
                g.at(tr.t2, tr.h2) == tr.g2 &&
                g.at(g.at(tr.rep_part, tr.fib_part), tr.h_tail) == g.at(el(a), el(b));
      if (!ok)
        r.fail({{{"g1", el(a)}, {"g2", el(b)}, {"rep_part", tr.rep_part},
                 {"fib_part", tr.fib_part}, {"h_tail", tr.h_tail}},
                "rep_part * fib_part * h_tail != g1*g2"});
    }
  return r;
}

LawResult representative_calculus(Context &ctx) {
  return check_representative_calculus(ctx.f.transversal());
}

using LawFn = LawResult (*)(Context &);

LawFn law_fn(std::string_view id) {
  static const std::map<std::string_view, LawFn> table = {
      {"alpha-faithful", alpha_faithful},
      {"bequeathed-rewrite", bequeathed_rewrite},
      {"beta-faithful", beta_faithful},
      {"cayley-representation", cayley_representation},
      {"cocycle", cocycle},
      {"diffracted-group", diffracted_group},
      {"diffraction-decomposition", diffraction_decomposition},
      {"diffraction-isomorphism", diffraction_isomorphism},
      {"fiber-action", fiber_action},
      {"fibration-containment", fibration_containment},
      {"frobenius-homomorphism", frobenius_homomorphism},
      {"gset-isomorphism", gset_isomorphism},
      {"representative-calculus", representative_calculus},
  };
  auto it = table.find(id);
  if (it == table.end())
    throw Error(Errc::UnknownLawId, "unknown law id '" + std::string(id) + "'");
  return it->second;
}

} // namespace

std::span<const std::string_view> law_ids() { return kLawIds; }

std::vector<std::string> parse_law_selection(std::string_view text) {
  std::vector<std::string> out;
  if (text == "all") {
    for (auto id : kLawIds)
      out.emplace_back(id);
    return out;
  }
  while (!text.empty()) {
    auto comma = text.find(',');
    auto id = text.substr(0, comma);
    if (std::find(kLawIds.begin(), kLawIds.end(), id) == kLawIds.end())
      throw Error(Errc::UnknownLawId, "unknown law id '" + std::string(id) + "'");
    out.emplace_back(id);
    if (comma == std::string_view::npos)
      break;
    text = text.substr(comma + 1);
  }
  if (out.empty())
    throw Error(Errc::UnknownLawId, "empty law selection");
  return out;
}

const LawResult *LawReport::find(std::string_view id) const {
  for (const auto &r : results)
    if (r.law_id == id)
      return &r;
  return nullptr;
}

LawReport run_laws(const Fibration &f, std::span<const std::string> selection,
                   InstanceDescriptor instance, const DiffractedGroup *prebuilt) {
  if (f.group().order() > kMaxLawOrder)
    throw Error(Errc::TooLargeForExhaustive,
                "law suite is exhaustive only up to order " + std::to_string(kMaxLawOrder));
  std::vector<std::string> ids(selection.begin(), selection.end());
  for (const auto &id : ids)
    law_fn(id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  LawReport report;
  if (instance.group_order == 0)
    instance.group_order = f.group().order();
  if (instance.h_members.empty())
    instance.h_members.assign(f.subgroup().members().begin(), f.subgroup().members().end());
  report.instance = std::move(instance);

  Context ctx{f, prebuilt, {}, {}, false};
  for (const auto &id : ids) {
    report.results.push_back(law_fn(id)(ctx));
    if (report.results.back().failed())
      report.overall = false;
  }
  return report;
}

LawReport run_laws(const Transversal &t, std::span<const std::string> selection,
                   InstanceDescriptor instance) {
  if (t.group().order() > kMaxLawOrder)
    throw Error(Errc::TooLargeForExhaustive,
                "law suite is exhaustive only up to order " + std::to_string(kMaxLawOrder));
  return run_laws(Fibration(t), selection, std::move(instance));
}

nlohmann::ordered_json to_json(const LawResult &r, const FiniteGroup *g) {
  nlohmann::ordered_json j;
  j["law_id"] = r.law_id;
  j["status"] = to_string(r.status);
  j["reason"] = r.status == LawStatus::Skipped ? nlohmann::ordered_json(r.skip_reason)
                                               : nlohmann::ordered_json(nullptr);
  j["checks_run"] = r.checks_run;
  if (r.counterexample) {
    nlohmann::ordered_json cx;
    cx["message"] = r.counterexample->message;
    auto entries = nlohmann::ordered_json::array();
    for (const auto &e : r.counterexample->elements) {
      nlohmann::ordered_json item;
      item["name"] = e.name;
      item["index"] = e.value;
      if (e.is_element && g && g->has_labels() && e.value < g->order())
        item["label"] = g->label(e.value);
      entries.push_back(std::move(item));
    }
    cx["elements"] = std::move(entries);
    j["counterexample"] = std::move(cx);
  } else {
    j["counterexample"] = nullptr;
  }
  j["details"] = r.details;
  return j;
}

std::string to_json_lines(const LawReport &report, const FiniteGroup *g) {
  std::ostringstream os;
  for (const auto &r : report.results)
    os << to_json(r, g).dump() << '\n';
  return os.str();
}

} // namespace diffract
