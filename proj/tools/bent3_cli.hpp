#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bent3/analysis.hpp"
#include "bent3/ternary_function.hpp"

namespace bent3::cli {

enum ExitCode : int { kVerified = 0, kPropertyFails = 1, kUsage = 2 };

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "TBF v1" table files.
void write_table(std::ostream& os, const TernaryFn& f);
TernaryFn read_table(std::istream& is);
TernaryFn read_table_file(const std::string& path);

std::string sha256_hex(std::string_view data);
/// SHA-256 of the table written as one '0'/'1'/'2' character per element.
std::string table_sha256(const TernaryFn& f);

std::string format_certificate(const Certificate& cert, const TernaryFn& f);
std::map<std::string, std::string> parse_certificate(std::istream& is);

}  // namespace bent3::cli
