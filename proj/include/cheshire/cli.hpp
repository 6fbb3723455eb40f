#pragma once

#include <ostream>
#include <string>
#include <vector>

// Command-line front end. Subcommands: weak-values, decompose, claims,
// inequality, contexts, simulate, infer. Reports are JSON on stdout
// (schema_version "1"); sweep and count tables support --format csv.
// Exit codes: 0 success, 2 usage error, 3 numerical-validation failure.

namespace cheshire::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cheshire::cli
