#pragma once

#include <ostream>
#include <string_view>
#include <vector>

#include "hyperpde/algebra.hpp"

namespace hyperpde::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFalse = 1;
inline constexpr int kExitInputError = 2;

/// Parses the command-line basis micro-syntax: comma-separated elements, each
/// either an explicit coordinate vector "[a0,a1,...]" or a polynomial in t
/// ("1", "t", "2*t^2-1") where t stands for e_1 and t^k for its algebra power.
/// The first element must be the unit.
SubspaceBasis parse_basis_spec(const Algebra& algebra, std::string_view spec);

/// Runs the CLI with the given arguments (argv[0] included).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperpde::cli
