#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "diffract/diffracted_group.hpp"
#include "diffract/diffraction.hpp"
#include "diffract/group.hpp"
#include "diffract/transversal.hpp"

namespace diffract::cli {

enum ExitCode : int {
  kOk = 0,
  kLawFailure = 1,
  kParse = 2,
  kNotAGroup = 3,
  kRequiresTransversal = 4,
  kUnknownLaw = 5,
  kUnknownElement = 6,
};

int exit_code_for(Errc code);

struct SessionConfig {
  std::size_t max_order = kDefaultClosureCap;
  bool json = false;
  std::uint64_t seed = 1;
};

struct GroupSource {
  std::string builtin;
  std::string table_file;
  std::string gens_file;
};

/// The pipeline group → H → T → δ → T▽H, each stage built on demand from
/// the previous one. Stage accessors throw when a prerequisite is missing.
class Session {
public:
  Session(const GroupSource &source, SessionConfig config);

  const SessionConfig &config() const { return config_; }
  const FiniteGroup &group() const { return *group_; }
  const GroupPtr &group_ptr() const { return group_; }
  const std::string &group_name() const { return name_; }

  /// Comma-separated labels or indices; empty means the trivial subgroup.
  void set_subgroup(const std::string &gens);
  void set_strategy(const std::string &strategy, bool allow_non_transversal);

  bool has_subgroup() const { return subgroup_.has_value(); }
  const Subgroup &subgroup() const;
  const CosetDecomposition &cosets();
  const Transversal &transversal();
  const Fibration &fibration();
  const TransversalStrategy &strategy() const { return strategy_; }

  /// Resolves a label or decimal index. Throws Errc::UnknownElement.
  Element resolve(const std::string &text) const;

private:
  SessionConfig config_;
  GroupPtr group_;
  std::string name_;
  std::optional<Subgroup> subgroup_;
  std::optional<CosetDecomposition> cosets_;
  std::optional<Transversal> transversal_;
  std::optional<Fibration> fibration_;
  TransversalStrategy strategy_;
  bool allow_non_transversal_ = false;
};

} // namespace diffract::cli
