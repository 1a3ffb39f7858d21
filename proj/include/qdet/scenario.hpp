#pragma once

#include "qdet/response.hpp"

#include <string>

namespace qdet {

// Result of parsing a scenario document (INI-style sections [physics],
// [source], [detector], [numerics]; '#' or ';' comments; unknown keys are
// errors with a nearest-key suggestion).
struct ParsedScenario {
    Scenario scenario{};
    QuadratureConfig numerics{};
    DetectorKind kind = DetectorKind::UDD;
    bool kind_given = false;
};

ParsedScenario parse_scenario(const std::string& text);
ParsedScenario parse_scenario_file(const std::string& path);

} // namespace qdet
