#pragma once

// qdirac <catalog|verify|continuity|packet> --config <path> [--out <path>]
//        [--format json|csv|text] [--tol <float>] [--seed <u64>]
//
// Exit codes: 0 success, 1 verification failure, 2 configuration error,
// 3 internal certification failure.

#include <iosfwd>
#include <string>

namespace qdirac {

enum ExitCode : int { kExitOk = 0, kExitVerify = 1, kExitConfig = 2, kExitCertification = 3 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Writes content to a sibling temporary file and renames it over path.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace qdirac
