#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace solhnn::cli {

// exit codes: 0 success, 1 computation-level error, 2 parse/usage error
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// documented mapping from library operations to the subcommands that reach
// them; the test suite checks it is complete
struct CoverageEntry {
    std::string operation;
    std::vector<std::string> subcommands;
};
const std::vector<CoverageEntry> &coverage_map();
const std::vector<std::string> &documented_operations();
const std::vector<std::string> &subcommand_list();

} // namespace solhnn::cli
