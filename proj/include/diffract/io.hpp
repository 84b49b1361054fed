#pragma once

#include <string>
#include <string_view>

#include "diffract/group.hpp"

namespace diffract::io {

// .gtab: line 1 is the order n; the next n lines hold n space-separated
// indices (row i, column j = gi·gj); index 0 must be the identity. An
// optional block of exactly n label lines may follow (one label per line,
// surrounding blanks trimmed). Anything else is
// rejected with Errc::ParseError.
FiniteGroup parse_gtab(std::string_view text);
std::string format_gtab(const FiniteGroup &g);

// .gens: line 1 is `degree k` (or just `k`); each further line holds the k
// images of 0..k-1 for one generator.
FiniteGroup parse_gens(std::string_view text, std::size_t cap = kDefaultClosureCap);

/// Reads a whole file; throws Errc::ParseError if it cannot be opened.
std::string read_file(const std::string &path);

} // namespace diffract::io
