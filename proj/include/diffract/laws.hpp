#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "diffract/diffracted_group.hpp"
#include "diffract/diffraction.hpp"
#include "diffract/law_result.hpp"

namespace diffract {

/// Largest group order the law suite quantifies over exhaustively.
inline constexpr std::size_t kMaxLawOrder = 200;

/// Registered law ids in report order (ascending).
std::span<const std::string_view> law_ids();

/// "all" or a comma-separated list of ids. Throws Errc::UnknownLawId.
std::vector<std::string> parse_law_selection(std::string_view text);

struct InstanceDescriptor {
  std::string group_name;
  std::size_t group_order = 0;
  std::vector<Element> h_members;
  std::string strategy;
  std::optional<std::uint64_t> seed;
};

struct LawReport {
  InstanceDescriptor instance;
  std::vector<LawResult> results;
  bool overall = true;

  const LawResult *find(std::string_view id) const;
};

/// Runs every selected law exhaustively over the fibration's instance.
/// Laws that need a transversal report skipped("requires-transversal") on
/// other representative systems. When `prebuilt` is given, the diffracted
/// group laws check it instead of building a fresh one.
/// Throws Errc::UnknownLawId, Errc::TooLargeForExhaustive.
LawReport run_laws(const Fibration &f, std::span<const std::string> selection,
                   InstanceDescriptor instance = {},
                   const DiffractedGroup *prebuilt = nullptr);

LawReport run_laws(const Transversal &t, std::span<const std::string> selection,
                   InstanceDescriptor instance = {});

/// One compact JSON object per law, keys in the order law_id, status,
/// reason, checks_run, counterexample, details. Witness labels come from
/// `g` when it has labels.
nlohmann::ordered_json to_json(const LawResult &r, const FiniteGroup *g = nullptr);

std::string to_json_lines(const LawReport &report, const FiniteGroup *g = nullptr);

} // namespace diffract
