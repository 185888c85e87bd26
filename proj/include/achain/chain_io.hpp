#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "achain/chain.hpp"

namespace achain {

// chain-v1 text format:
//
//   # chain-v1
//   1
//   2 0 0
//   3 1 0
//
// One decimal element per line in ascending order, optionally followed by the
// 0-based justification indices "i j". Justifications are all-or-nothing: when
// every line after the first carries them they are checked and kept, when none
// do they are recomputed by validate().

inline constexpr const char* kChainHeader = "# chain-v1";

Chain read_chain(std::istream& in);
Chain read_chain_file(const std::filesystem::path& path);

void write_chain(std::ostream& out, const Chain& c, bool with_steps = true);
std::string to_chain_text(const Chain& c, bool with_steps = true);

}  // namespace achain
