// SPDX-License-Identifier: MIT
//
// commands.hpp
//
// The three CLI commands as pure functions from options to a report and an
// exit status: 0 success, 1 mathematical failure, 2 input error.

#ifndef HTT_COMMANDS_HPP
#define HTT_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace htt
{

inline constexpr int kExitOk = 0;
inline constexpr int kExitMath = 1;
inline constexpr int kExitInput = 2;

struct CommandResult
{
    int exit_code = kExitOk;
    std::string report;
};

// Validates every structure, morphism, homotopy and retract in a document.
CommandResult cmd_check(const std::string& path);

struct TransferOptions
{
    std::string path;
    std::string method = "both";  // kernels, hpl or both
    int arity = 0;
    // "auto" builds the harmonious retract; empty uses the document's
    // retract, falling back to auto when it has none.
    std::string retract;
    std::string structure;  // empty: the retract's structure or the only one
    std::string output;     // empty: no output document
};

CommandResult cmd_transfer(const TransferOptions& opts);

struct SelftestOptions
{
    int corpus_size = 0;
    std::uint64_t seed = 0;
    int arity = 0;
    std::optional<int> instance;  // rerun a single corpus member
    bool mutants = true;
};

CommandResult cmd_selftest(const SelftestOptions& opts);

}  // namespace htt

#endif
