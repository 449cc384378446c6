//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file dimerdiff/cli.hpp
//! Command implementations behind the dimerdiff executable.
//---------------------------------------------------------------------------//
#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

namespace dimerdiff
{
namespace exit_code
{
inline constexpr int success = 0;
inline constexpr int usage = 1;
inline constexpr int config_error = 2;
inline constexpr int solver_failure = 3;
}  // namespace exit_code

struct CommandOptions
{
    std::filesystem::path config;
    std::optional<std::filesystem::path> out;
    int threads = 1;
    double quadrature_scale = 1.0;
};

int cmd_bound_states(CommandOptions const& options, std::ostream& out, std::ostream& err);
int cmd_pattern(CommandOptions const& options, std::ostream& out, std::ostream& err);
int cmd_pp_diagnostics(CommandOptions const& options, std::ostream& out, std::ostream& err);

// Parse argv and dispatch to a subcommand
int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dimerdiff
