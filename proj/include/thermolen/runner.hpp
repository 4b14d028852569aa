#pragma once

#include "thermolen/bounds.hpp"
#include "thermolen/config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace thermolen {

struct RunResult {
    int rows = 0;
    std::string out_path;
    std::vector<std::string> violations; ///< lower-bound chain breaks; CLI exits 2 on any
    std::vector<std::string> warnings;   ///< upper-bound breaches, unconverged grids
};

/// Evaluate the config and stream the CSV to `csv`. Inequality violations
/// are collected in the result, not thrown; real failures propagate.
RunResult run(const RunConfig& config, std::ostream& csv);

/// Same, writing the CSV to config.out_path.
RunResult run_to_file(const RunConfig& config);

struct CheckReport {
    bool ok = true;
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
};

/// Static validation of a parsed config: column plan, protocol shape, grid
/// adequacy from closed-form variances. Integrates nothing, builds no kernels.
CheckReport check_config(const RunConfig& config);

/// Shortest round-trip decimal form; infinities render as "inf"/"-inf".
std::string format_double(double v);

} // namespace thermolen
