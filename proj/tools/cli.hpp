#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "orbitcodes/gfq.hpp"

namespace orbitcodes::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,  // bad flags, unparsable input, unreadable files
  kExitDomain = 3,
  kExitMismatch = 4,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// F_q from its size. Prime powers p^r use `base_modulus` (over Z_p) or, if
/// absent, the first monic irreducible of degree r.
Field base_field(std::uint64_t q, const std::optional<std::string>& base_modulus);

}  // namespace orbitcodes::cli
