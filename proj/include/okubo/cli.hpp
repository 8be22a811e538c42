#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end.
 */

#include <ostream>
#include <string>
#include <vector>

namespace okubo::cli {

/// args excludes the program name. Returns 0, 1 (some check failed) or 2 (usage error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace okubo::cli
