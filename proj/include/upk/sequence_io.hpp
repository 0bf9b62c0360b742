#pragma once

// Sequence file format: UTF-8 text, one decimal size per line. Lines whose
// first non-blank character is '#' and blank lines are ignored.

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "upk/core.hpp"

namespace upk {

// Throws ParseError (with a 1-based line number) on malformed numbers or
// sizes outside (0, 1].
RequestSequence parse_sequence(std::string_view text);
RequestSequence read_sequence_file(const std::filesystem::path& path);

// Shortest round-trip decimal form, one size per line.
void write_sequence(std::ostream& out, const RequestSequence& seq);
void write_sequence_file(const std::filesystem::path& path,
                         const RequestSequence& seq);

}  // namespace upk
