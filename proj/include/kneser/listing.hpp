#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kneser/extensions.hpp"

namespace kneser {

enum class VertexFormat { bits, sets };

// "0110" with position 1 first, or "2 3" with elements numbered from 1.
std::string format_vertex(const CyclicBitstring& x, VertexFormat fmt);
// Accepts either format; throws ParameterError on malformed text.
CyclicBitstring parse_vertex(const std::string& line, int n);

// Header line: "n k family", followed by s for the Johnson-type families.
std::string listing_header(const GraphSpec& spec);
GraphSpec parse_listing_header(const std::string& line);

// Header, an optional "# path" marker, then one vertex per line.
void write_listing(std::ostream& out, const Tour& tour, VertexFormat fmt);

struct Listing {
  GraphSpec spec;
  bool path = false;  // marked as a Hamilton path rather than a cycle
  std::vector<CyclicBitstring> vertices;
};

Listing read_listing(std::istream& in);

}  // namespace kneser
