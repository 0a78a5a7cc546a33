// On-disk group format: a JSON object
//   {"format_version": 1, "identity": "e", "elements": ["e", ...],
//    "table": [[["e","e"], ...], ...]}
// with one table row per line. Reading puts the identity first and sorts
// every cell by element index, so write(read(f)) is the canonical form of f.

#ifndef TVG_GROUP_FILE_HPP
#define TVG_GROUP_FILE_HPP

#include <string>

#include "tvg/core.hpp"

namespace tvg {

inline constexpr int kGroupFormatVersion = 1;

// Throws ParseError (with the offending field) or NonSquareTable.
TwoValuedGroup parse_group(const std::string& text);
std::string serialize_group(const TwoValuedGroup& X);

TwoValuedGroup read_group(const std::string& path);
void write_group(const TwoValuedGroup& X, const std::string& path);

}  // namespace tvg

#endif  // TVG_GROUP_FILE_HPP
