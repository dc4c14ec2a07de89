#pragma once

// Command-line front end. Each verb parses its options, calls the library
// and prints JSON (default) or an aligned text table.

#include <iosfwd>
#include <string>
#include <vector>

namespace grascat {

// Exit status: 0 success, 1 computation error (a JSON error object is
// printed on `out`), 2 usage error (message on `err`).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grascat
