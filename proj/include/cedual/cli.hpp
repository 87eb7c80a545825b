#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace cedual::cli {

inline constexpr const char* version = "0.1.0";

enum ExitCode : int {
    ok = 0,
    not_ok = 1,
    parse_error = 2,
    validation_error = 3,
    hypothesis_error = 4,
    internal_error = 5,
};

/// Runs one command line (args excludes the program name). The report goes to
/// `out`, diagnostics to `err`; a document is read from --input or from `in`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in = std::cin);

/// 1-based (line, column) of a byte offset into text.
std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte);

} // namespace cedual::cli
