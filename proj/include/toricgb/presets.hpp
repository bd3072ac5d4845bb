#ifndef TORICGB_PRESETS_HPP
#define TORICGB_PRESETS_HPP

#include <string>
#include <vector>

namespace toricgb {

struct PresetCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // expected vs computed on mismatch
};

struct PresetOutcome {
    std::string preset;
    std::vector<PresetCheck> checks;
    bool ok() const;
};

// Fixed-expectation verification suites. Unknown names raise InputError.
PresetOutcome run_preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace toricgb

#endif
