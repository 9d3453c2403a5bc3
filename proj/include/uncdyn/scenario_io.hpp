#pragma once

#include <string>
#include <utility>
#include <vector>

#include "uncdyn/verifier.hpp"

namespace uncdyn {

/// Parses a scenario document (JSON, strict: unknown keys are rejected) and
/// validates the resulting Scenario. Throws std::invalid_argument with the
/// offending key on schema violations; JSON syntax errors propagate with
/// their position.
Scenario parse_scenario(const std::string& text);

/// parse_scenario on the contents of `path`.
Scenario load_scenario(const std::string& path);

/// Canonical CSV: header plus one row per record in t1-major order, numbers
/// at 17 significant digits. Oracle columns are left empty when the report
/// has none.
std::string emit_csv(const SweepReport& report);

/// The eight built-in sweeps (four spin pairs, four oscillator pairs) with
/// natural units, a 21x21 grid on [0, 2pi] and theta = pi/3.
std::vector<std::pair<std::string, Scenario>> demo_scenarios();

}  // namespace uncdyn
