#ifndef CLARR_CLI_ARRANGEMENT_FILE_HPP
#define CLARR_CLI_ARRANGEMENT_FILE_HPP

#include <string>
#include <string_view>

#include "clarr/arrangement.hpp"

namespace clarr::cli {

/// Line-oriented text format:
///
///   # comment
///   arrangement CL1
///   conic 1 1 -25 0 0 0      # axx ayy azz axy axz ayz
///   line 1 0 -4              # a b c  for  ax + by + cz
///
/// Components keep file order. Returns a validated arrangement; syntax
/// problems raise ParseError, semantic ones the matching validation error
/// with the record's line number in the message.
Arrangement parse_arrangement(std::string_view text,
                              ArrangementMode mode = ArrangementMode::kAnyLinesAndConics);

Arrangement load_arrangement(const std::string& path,
                             ArrangementMode mode = ArrangementMode::kAnyLinesAndConics);

/// Inverse of parse_arrangement for validated arrangements.
std::string serialize_arrangement(const Arrangement& arrangement);

}  // namespace clarr::cli

#endif  // CLARR_CLI_ARRANGEMENT_FILE_HPP
