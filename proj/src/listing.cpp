#include "kneser/listing.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace kneser {

std::string format_vertex(const CyclicBitstring& x, VertexFormat fmt) {
  if (fmt == VertexFormat::bits) return x.str();
  std::string out;
  for (int i : x.ones()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i + 1);
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

int parse_int(const std::string& token) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParameterError("not an integer: '" + token + "'");
  }
  return v;
}

}  // namespace

CyclicBitstring parse_vertex(const std::string& raw, int n) {
  std::string line = trim(raw);
  bool bits = static_cast<int>(line.size()) == n &&
              line.find_first_not_of("01") == std::string::npos;
  if (bits) return CyclicBitstring::parse(line);
  std::vector<int> ones;
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    int v = parse_int(token);
    if (v < 1 || v > n) throw ParameterError("element out of range: " + token);
    ones.push_back(v - 1);
  }
  return CyclicBitstring(n, ones);
}

std::string listing_header(const GraphSpec& spec) {
  std::string h = std::to_string(spec.n) + " " + std::to_string(spec.k) + " " +
                  family_name(spec.family);
  if (spec.family == Family::johnson || spec.family == Family::gen_kneser) {
    h += " " + std::to_string(spec.s);
  }
  return h;
}

GraphSpec parse_listing_header(const std::string& line) {
  std::istringstream in(line);
  std::string n, k, fam, s;
  if (!(in >> n >> k >> fam)) throw ParameterError("bad header: '" + line + "'");
  auto family = parse_family(fam);
  if (!family) throw ParameterError("unknown family '" + fam + "'");
  GraphSpec spec{*family, parse_int(n), parse_int(k), 0};
  if (*family == Family::johnson || *family == Family::gen_kneser) {
    if (!(in >> s)) throw ParameterError("header needs s for " + fam);
    spec.s = parse_int(s);
  }
  spec.validate();
  return spec;
}

void write_listing(std::ostream& out, const Tour& tour, VertexFormat fmt) {
  out << listing_header(tour.spec) << '\n';
  if (tour.outcome == Outcome::path) {
    out << "# path: no Hamilton cycle exists, listing a Hamilton path\n";
  }
  for (const auto& v : tour.vertices) out << format_vertex(v, fmt) << '\n';
}

Listing read_listing(std::istream& in) {
  Listing l;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      if (t.find("path") != std::string::npos) l.path = true;
      continue;
    }
    if (!have_header) {
      l.spec = parse_listing_header(t);
      have_header = true;
      continue;
    }
    l.vertices.push_back(parse_vertex(t, l.spec.n));
  }
  if (!have_header) throw ParameterError("missing header line");
  return l;
}

}  // namespace kneser
