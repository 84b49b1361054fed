#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "diffract/error.hpp"

namespace diffract {

/// One named index in a counterexample. `is_element` is false for indices
/// that are not elements of G (pair indices, positions).
struct WitnessEntry {
  std::string name;
  Element value = 0;
  bool is_element = true;
};

/// Named indices that falsify a law, e.g. {"g1", 3}, {"t", 1}.
struct Witness {
  std::vector<WitnessEntry> elements;
  std::string message;
};

enum class LawStatus { Pass, Fail, Skipped };

const char *to_string(LawStatus s);

struct LawResult {
  std::string law_id;
  LawStatus status = LawStatus::Pass;
  std::size_t checks_run = 0;
  std::optional<Witness> counterexample;
  std::string skip_reason;
  /// Free-form measurements (closure flags, notes). Keys in insertion order.
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  bool passed() const { return status == LawStatus::Pass; }
  bool failed() const { return status == LawStatus::Fail; }

  /// Records the first failure only; later calls are ignored.
  void fail(Witness w) {
    if (status == LawStatus::Fail)
      return;
    status = LawStatus::Fail;
    counterexample = std::move(w);
  }

  static LawResult skipped(std::string id, std::string reason) {
    LawResult r;
    r.law_id = std::move(id);
    r.status = LawStatus::Skipped;
    r.skip_reason = std::move(reason);
    return r;
  }
};

} // namespace diffract
