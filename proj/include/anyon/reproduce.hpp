#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace anyon {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ReproduceOptions {
    std::optional<std::string> only;  // run a single named check
    bool inject_fault = false;        // perturb one published det(F_8) coefficient
};

/// Names of the golden checks, in run order.
const std::vector<std::string>& reproduce_items();

/// Runs the golden checks (independent checks may run concurrently; results
/// come back in run order). Throws InvalidArgument for an unknown `only`.
std::vector<CheckResult> reproduce(const ReproduceOptions& options = {});

nlohmann::json to_json(const std::vector<CheckResult>& results);

}  // namespace anyon
