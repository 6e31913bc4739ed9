#ifndef CLARR_CLI_COMMANDS_HPP
#define CLARR_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "clarr/groebner.hpp"

namespace clarr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

enum class Format { kText, kJson };

struct CommonFlags {
  std::uint64_t seed = CoordinateChangeStream::kDefaultSeed;
  Format format = Format::kText;
  int max_degree = 0;  ///< 0: engine default (3d)
  bool quiet = false;
  bool strict = false;  ///< require at least one line and one conic
};

int analyze_command(const std::string& path, const CommonFlags& flags, std::ostream& out,
                    std::ostream& err);

/// Exit 0 when the two files form a weak Ziegler pair, 1 when not (swapped
/// by invert_exit), 2 on error.
int compare_command(const std::string& first, const std::string& second,
                    const CommonFlags& flags, bool invert_exit, std::ostream& out,
                    std::ostream& err);

/// Writes to `output_path`, or to `out` when it is empty or "-".
int render_command(const std::string& path, const std::string& window, double scale,
                   const std::string& output_path, std::ostream& out, std::ostream& err);

/// Full command line, subcommand included.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace clarr::cli

#endif  // CLARR_CLI_COMMANDS_HPP
