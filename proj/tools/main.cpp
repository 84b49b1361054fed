// diffract: command-line front end for the diffraction library.
//
//   diffract load      --builtin symmetric:3
//   diffract diffract  --builtin symmetric:4 --subgroup-gens 3,8 --json
//   diffract verify    --builtin quaternion --subgroup-gens -1 --laws all
//   diffract rewrite   --builtin symmetric:3 --subgroup-gens 1 3 4
//   diffract bench     --builtin symmetric:4 --subgroup-gens 3,8 --reps 100000

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "diffract/diffracted_group.hpp"
#include "diffract/kernels.hpp"
#include "diffract/laws.hpp"
#include "diffract/lcg.hpp"
#include "session.hpp"

using namespace diffract;
using namespace diffract::cli;
using ojson = nlohmann::ordered_json;

namespace {

struct Options {
  GroupSource source;
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t max_order = 0;
  std::string subgroup_gens;
  bool have_subgroup = false;
  std::string strategy = "min";
  bool allow_non_transversal = false;
  std::string emit;
  std::string laws = "all";
  std::string inject_fault;
  std::string g1, g2;
  std::size_t reps = 0;
  std::vector<CLI::Option *> subgroup_flags;
};

std::size_t resolve_max_order(const Options &o) {
  if (o.max_order)
    return o.max_order;
  if (const char *env = std::getenv("DIFFRACT_MAX_ORDER")) {
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return kDefaultClosureCap;
}

Session open_session(const Options &o) {
  SessionConfig cfg;
  cfg.max_order = resolve_max_order(o);
  cfg.json = o.json;
  cfg.seed = o.seed;
  Session s(o.source, cfg);
  if (o.have_subgroup)
    s.set_subgroup(o.subgroup_gens);
  s.set_strategy(o.strategy, o.allow_non_transversal);
  return s;
}

std::string join_labels(const FiniteGroup &g, std::span<const Element> xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? ", " : "") + g.label(xs[i]);
  return out + "}";
}

ojson index_array(std::span<const Element> xs) {
  return ojson(std::vector<Element>(xs.begin(), xs.end()));
}

// --- subcommands -----------------------------------------------------------

int cmd_load(const Options &o) {
  Session s = open_session(o);
  const FiniteGroup &g = s.group();
  if (o.json) {
    ojson j;
    j["order"] = g.order();
    j["abelian"] = g.is_abelian();
    j["identity"] = g.label(0);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "order " << g.order() << ", " << (g.is_abelian() ? "abelian" : "non-abelian")
              << ", identity " << g.label(0) << '\n';
  }
  return kOk;
}

int cmd_info(const Options &o) {
  Session s = open_session(o);
  const FiniteGroup &g = s.group();
  const auto n = static_cast<Element>(g.order());
  if (o.json) {
    ojson j;
    j["name"] = s.group_name();
    j["order"] = g.order();
    j["abelian"] = g.is_abelian();
    auto elements = ojson::array();
    for (Element x = 0; x < n; ++x) {
      ojson e;
      e["index"] = x;
      e["label"] = g.label(x);
      e["order"] = g.element_order(x);
      e["inverse"] = g.inverse_of(x);
      elements.push_back(std::move(e));
    }
    j["elements"] = std::move(elements);
    j["kernels"] = kernels::active().name;
    std::cout << j.dump() << '\n';
    return kOk;
  }
  std::cout << s.group_name() << ": order " << g.order() << ", "
            << (g.is_abelian() ? "abelian" : "non-abelian") << ", kernels "
            << kernels::active().name << '\n';
  for (Element x = 0; x < n; ++x)
    std::cout << "  " << std::setw(3) << x << "  " << std::left << std::setw(16) << g.label(x)
              << std::right << " order " << g.element_order(x) << ", inverse "
              << g.label(g.inverse_of(x)) << '\n';
  return kOk;
}

int cmd_subgroup(const Options &o) {
  Session s = open_session(o);
  const Subgroup &h = s.subgroup();
  if (o.json) {
    ojson j;
    j["order"] = h.size();
    j["members"] = index_array(h.members());
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "order " << h.size() << ": " << join_labels(s.group(), h.members()) << '\n';
  }
  return kOk;
}

int cmd_cosets(const Options &o) {
  Session s = open_session(o);
  const CosetDecomposition &d = s.cosets();
  if (o.json) {
    ojson j;
    std::vector<std::size_t> ids(d.coset_ids().begin(), d.coset_ids().end());
    j["coset_of"] = ids;
    auto cosets = ojson::array();
    for (std::size_t c = 0; c < d.count(); ++c)
      cosets.push_back(index_array(d.coset(c)));
    j["cosets"] = std::move(cosets);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << d.count() << " cosets of size " << d.subgroup().size() << '\n';
    for (std::size_t c = 0; c < d.count(); ++c)
      std::cout << "  " << c << ": " << join_labels(s.group(), d.coset(c)) << '\n';
  }
  return kOk;
}

int cmd_transversal(const Options &o) {
  Session s = open_session(o);
  const Transversal &t = s.transversal();
  if (o.json) {
    ojson j;
    j["strategy"] = s.strategy().describe();
    j["reps"] = index_array(t.reps());
    j["is_transversal"] = t.is_transversal();
    j["bar"] = index_array(t.bar_table());
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "strategy " << s.strategy().describe() << ": reps "
              << join_labels(s.group(), t.reps()) << ", "
              << (t.is_transversal() ? "transversal" : "representative system (not a transversal)")
              << '\n';
  }
  return kOk;
}

int cmd_diffract(const Options &o) {
  Session s = open_session(o);
  const Fibration &f = s.fibration();
  if (!f.is_transversal()) {
    std::cerr << "diffract: the chosen representatives do not include the identity; "
                 "T x H is only a group over a transversal. Use `verify` for the laws "
                 "that hold for any representative system.\n";
    return kRequiresTransversal;
  }
  DiffractedGroup d = DiffractedGroup::build(f);
  LawResult iso = iso_check(f, d);
  ojson j = d.to_json();
  if (!o.emit.empty()) {
    std::ofstream out(o.emit, std::ios::binary);
    if (!out)
      throw Error(Errc::ParseError, "cannot write '" + o.emit + "'");
    out << j.dump() << '\n';
  }
  if (o.json)
    std::cout << j.dump() << '\n';
  else
    std::cout << "|T| = " << f.t_size() << ", |H| = " << f.h_size() << ", order "
              << d.order() << ", " << (iso.passed() ? "verified" : "NOT verified") << '\n';
  if (!iso.passed()) {
    std::cerr << to_json(iso, &s.group()).dump() << '\n';
    return kLawFailure;
  }
  return kOk;
}

// "fibration:G:TPOS" or "bequeath:A:B"
struct Fault {
  std::string kind;
  std::size_t a = 0, b = 0;
};

Fault parse_fault(const std::string &text) {
  Fault f;
  auto c1 = text.find(':');
  auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw Error(Errc::ParseError, "fault must look like fibration:G:TPOS or bequeath:A:B");
  f.kind = text.substr(0, c1);
  try {
    f.a = std::stoul(text.substr(c1 + 1, c2 - c1 - 1));
    f.b = std::stoul(text.substr(c2 + 1));
  } catch (const std::exception &) {
    throw Error(Errc::ParseError, "bad fault coordinates in '" + text + "'");
  }
  if (f.kind != "fibration" && f.kind != "bequeath")
    throw Error(Errc::ParseError, "unknown fault kind '" + f.kind + "'");
  return f;
}

int cmd_verify(const Options &o) {
  Session s = open_session(o);
  auto selection = parse_law_selection(o.laws);
  InstanceDescriptor desc;
  desc.group_name = s.group_name();
  desc.strategy = s.strategy().describe();
  if (s.strategy().kind == TransversalStrategy::Kind::Random)
    desc.seed = s.strategy().seed;

  const Fibration &base = s.fibration();
  LawReport report;
  if (o.inject_fault.empty()) {
    report = run_laws(base, selection, desc);
  } else {
    Fault fault = parse_fault(o.inject_fault);
    if (fault.kind == "fibration") {
      if (fault.a >= s.group().order() || fault.b >= base.t_size() || base.h_size() < 2)
        throw Error(Errc::ParseError, "fibration fault out of range (needs |H| > 1)");
      auto g = static_cast<Element>(fault.a);
      std::size_t wrong = (base.delta_pos(g, fault.b) + 1) % base.h_size();
      report = run_laws(base.with_delta_entry(g, fault.b, wrong), selection, desc);
    } else {
      DiffractedGroup d = DiffractedGroup::build(base);
      if (fault.a >= d.order() || fault.b >= d.order() || d.order() < 2)
        throw Error(Errc::ParseError, "bequeath fault out of range");
      auto wrong = static_cast<Element>((d.mul(fault.a, fault.b) + 1) % d.order());
      DiffractedGroup bad = d.with_table_entry(fault.a, fault.b, wrong);
      report = run_laws(base, selection, desc, &bad);
    }
  }
  std::cout << to_json_lines(report, &s.group());
  return report.overall ? kOk : kLawFailure;
}

int cmd_rewrite(const Options &o) {
  Session s = open_session(o);
  const Element a = s.resolve(o.g1), b = s.resolve(o.g2);
  const Fibration &f = s.fibration();
  RewriteTrace tr = rewrite_product(f, a, b);
  const FiniteGroup &g = s.group();
  if (o.json) {
    ojson j;
    j["g1"] = tr.g1;
    j["g2"] = tr.g2;
    j["t1"] = tr.t1;
    j["h1"] = tr.h1;
    j["t2"] = tr.t2;
    j["h2"] = tr.h2;
    j["rep_part"] = tr.rep_part;
    j["fib_part"] = tr.fib_part;
    j["h_tail"] = tr.h_tail;
    j["result"] = tr.result;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << g.label(tr.g1) << "*" << g.label(tr.g2) << " = " << g.label(tr.rep_part)
              << " * " << g.label(tr.fib_part) << " * " << g.label(tr.h_tail) << '\n';
  }
  const bool ok =
      g.at(g.at(tr.rep_part, tr.fib_part), tr.h_tail) == tr.result;
  return ok ? kOk : kLawFailure;
}

// Three ways to multiply: (a) G's table through the batched lookup kernel,
// (b) the bequeath product on spectra via the γ and δ tables, (c) factor back
// to G, multiply there, and re-diffract.
int cmd_bench(const Options &o) {
  Session s = open_session(o);
  const Fibration &f = s.fibration();
  if (!f.is_transversal()) {
    std::cerr << "bench: needs a transversal\n";
    return kRequiresTransversal;
  }
  const FiniteGroup &g = s.group();
  const std::size_t reps = o.reps;

  std::vector<Element> lhs(reps), rhs(reps);
  Lcg rng(o.seed);
  const auto n = static_cast<std::uint32_t>(g.order());
  for (std::size_t i = 0; i < reps; ++i) {
    lhs[i] = rng.below(n);
    rhs[i] = rng.below(n);
  }
  std::vector<std::size_t> nab(g.order());
  for (Element x = 0; x < n; ++x)
    nab[x] = f.pair_index(f.nabla(x));
  std::vector<std::size_t> plhs(reps), prhs(reps);
  for (std::size_t i = 0; i < reps; ++i) {
    plhs[i] = nab[lhs[i]];
    prhs[i] = nab[rhs[i]];
  }

  using clock = std::chrono::steady_clock;
  auto per_op = [reps](clock::duration d) {
    return reps ? std::chrono::duration<double, std::nano>(d).count() / static_cast<double>(reps)
                : 0.0;
  };

  std::vector<Element> direct(reps);
  auto t0 = clock::now();
  kernels::active().lookup(g.table().data(), g.order(), lhs.data(), rhs.data(), direct.data(),
                           reps);
  auto t1 = clock::now();

  std::vector<std::size_t> bequeath(reps);
  for (std::size_t i = 0; i < reps; ++i)
    bequeath[i] = bequeath_product_index(f, plhs[i], prhs[i]);
  auto t2 = clock::now();

  std::vector<std::size_t> roundtrip(reps);
  for (std::size_t i = 0; i < reps; ++i) {
    Element a = f.nabla_inv(f.pair_at(plhs[i]));
    Element b = f.nabla_inv(f.pair_at(prhs[i]));
    roundtrip[i] = f.pair_index(f.nabla(g.at(a, b)));
  }
  auto t3 = clock::now();

  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < reps; ++i)
    if (nab[direct[i]] != bequeath[i] || bequeath[i] != roundtrip[i])
      ++disagreements;

  if (o.json) {
    ojson j;
    j["reps"] = reps;
    j["kernels"] = kernels::active().name;
    j["table_ns"] = per_op(t1 - t0);
    j["bequeath_ns"] = per_op(t2 - t1);
    j["roundtrip_ns"] = per_op(t3 - t2);
    j["disagreements"] = disagreements;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "path             ns/op   (" << reps << " products, kernels "
              << kernels::active().name << ")\n";
    if (reps) {
      std::cout << std::fixed << std::setprecision(2);
      std::cout << "table            " << per_op(t1 - t0) << '\n';
      std::cout << "bequeath         " << per_op(t2 - t1) << '\n';
      std::cout << "nabla-roundtrip  " << per_op(t3 - t2) << '\n';
    }
  }
  if (disagreements) {
    std::cerr << "bench: " << disagreements << " products disagree between paths\n";
    return kLawFailure;
  }
  return kOk;
}

void add_group_options(CLI::App *cmd, Options &o) {
  cmd->add_option("--builtin", o.source.builtin,
                  "cyclic:N, dihedral:N, symmetric:N, alternating:N, quaternion, klein4");
  cmd->add_option("--table", o.source.table_file, ".gtab multiplication table file");
  cmd->add_option("--gens", o.source.gens_file, ".gens permutation generator file");
}

void add_pipeline_options(CLI::App *cmd, Options &o) {
  add_group_options(cmd, o);
  o.subgroup_flags.push_back(
      cmd->add_option("--subgroup-gens", o.subgroup_gens,
                      "comma-separated generators of H (labels or indices); empty for {e}"));
  cmd->add_option("--strategy", o.strategy, "min | random:SEED | list:i1,i2,...");
  cmd->add_flag("--allow-non-transversal", o.allow_non_transversal,
                "keep a random pick for H's coset instead of forcing the identity");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"diffract: transversal rewriting and diffracted groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--seed", o.seed, "seed for sampled inputs (bench)");
  app.add_option("--max-order", o.max_order, "closure cap for generated groups");

  auto *load = app.add_subcommand("load", "load a group and print a summary");
  add_group_options(load, o);
  auto *info = app.add_subcommand("info", "print every element with order and inverse");
  add_group_options(info, o);
  auto *subgroup = app.add_subcommand("subgroup", "print the generated subgroup H");
  add_pipeline_options(subgroup, o);
  auto *cosets = app.add_subcommand("cosets", "print the left cosets of H");
  add_pipeline_options(cosets, o);
  auto *transversal = app.add_subcommand("transversal", "choose representatives of G/H");
  add_pipeline_options(transversal, o);
  auto *diffract = app.add_subcommand("diffract", "build the diffracted group T x H");
  add_pipeline_options(diffract, o);
  diffract->add_option("--emit", o.emit, "write the diffracted group JSON to FILE");
  auto *verify = app.add_subcommand("verify", "run the law suite, JSON lines on stdout");
  add_pipeline_options(verify, o);
  verify->add_option("--laws", o.laws, "all or a comma-separated list of law ids");
  verify->add_option("--inject-fault", o.inject_fault,
                     "corrupt one entry first: fibration:G:TPOS or bequeath:A:B");
  auto *rewrite = app.add_subcommand("rewrite", "rewrite g1*g2 as rep * fibre * tail");
  add_pipeline_options(rewrite, o);
  rewrite->add_option("g1", o.g1)->required();
  rewrite->add_option("g2", o.g2)->required();
  auto *bench = app.add_subcommand("bench", "time three multiplication paths");
  add_pipeline_options(bench, o);
  bench->add_option("--reps", o.reps, "number of random products")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }
  for (auto *flag : o.subgroup_flags)
    if (flag->count() > 0)
      o.have_subgroup = true;

  try {
    if (*load) return cmd_load(o);
    if (*info) return cmd_info(o);
    if (*subgroup) return cmd_subgroup(o);
    if (*cosets) return cmd_cosets(o);
    if (*transversal) return cmd_transversal(o);
    if (*diffract) return cmd_diffract(o);
    if (*verify) return cmd_verify(o);
    if (*rewrite) return cmd_rewrite(o);
    if (*bench) return cmd_bench(o);
  } catch (const NotAGroupError &e) {
    std::cerr << "not a group: " << e.what() << '\n';
    return kNotAGroup;
  } catch (const Error &e) {
    std::cerr << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kParse;
}
