#include "atomwalk/catalog.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unordered_set>

#include "atomwalk/errors.hpp"

namespace atomwalk {

namespace {

constexpr std::string_view kWhitespace = " \t\r";

struct Field {
  std::string_view text;
  std::size_t column;  // 1-based column of the first non-blank character
};

Field trim(std::string_view raw, std::size_t column) {
  const auto first = raw.find_first_not_of(kWhitespace);
  if (first == std::string_view::npos) return {{}, column + raw.size()};
  const auto last = raw.find_last_not_of(kWhitespace);
  return {raw.substr(first, last - first + 1), column + first};
}

std::vector<Field> split_fields(std::string_view line) {
  std::vector<Field> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    const auto raw = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
    fields.push_back(trim(raw, start + 1));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_number(const Field& f, std::string_view what, std::size_t line_no) {
  if (f.text.empty()) throw ParseError("missing " + std::string(what), line_no, f.column);
  double value = 0.0;
  const char* begin = f.text.data();
  const char* end = begin + f.text.size();
  // from_chars rejects a leading '+', accept it for hand-edited files.
  if (*begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(std::string(what) + " is not a number: '" + std::string(f.text) + "'", line_no,
                     f.column + static_cast<std::size_t>(ptr - f.text.data()));
  }
  return value;
}

bool is_skippable(std::string_view line) {
  const auto first = line.find_first_not_of(kWhitespace);
  return first == std::string_view::npos || line[first] == '#';
}

void append_number(std::string& out, double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

}  // namespace

void validate_species(const Species& s) {
  if (s.name.empty()) throw ValidationError("species name is empty");
  if (s.name.find_first_of(",\n\r") != std::string::npos || s.name.front() == '#' ||
      trim(s.name, 1).text.size() != s.name.size()) {
    throw ValidationError("species name '" + s.name + "' cannot be stored in a catalog line");
  }
  if (s.transition_label.find_first_of(",\n\r") != std::string::npos ||
      trim(s.transition_label, 1).text.size() != s.transition_label.size()) {
    throw ValidationError("transition label of '" + s.name + "' cannot be stored in a catalog line");
  }
  if (!(s.mass_u > 0.0) || !std::isfinite(s.mass_u)) {
    throw ValidationError("mass of '" + s.name + "' must be positive and finite");
  }
  if (!(s.wavelength_nm > 0.0) || !std::isfinite(s.wavelength_nm)) {
    throw ValidationError("wavelength of '" + s.name + "' must be positive and finite");
  }
}

Catalog::Catalog(std::vector<Species> entries, std::string source_tag)
    : entries_(std::move(entries)), source_tag_(std::move(source_tag)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& s : entries_) {
    validate_species(s);
    if (!seen.insert(s.name).second) throw ValidationError("duplicate species name '" + s.name + "'");
  }
}

std::optional<Species> Catalog::find(std::string_view name) const {
  for (const auto& s : entries_) {
    if (s.name == name) return s;
  }
  return std::nullopt;
}

const Species& Catalog::at(std::string_view name) const {
  for (const auto& s : entries_) {
    if (s.name == name) return s;
  }
  throw ValidationError("species '" + std::string(name) + "' not in catalog " + source_tag_);
}

Catalog parse_catalog(std::string_view text, std::string source_tag) {
  std::vector<Species> entries;
  std::unordered_set<std::string> seen;
  bool header_seen = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (is_skippable(line)) continue;
    const auto fields = split_fields(line);

    if (!header_seen) {
      std::string normalized;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) normalized += ',';
        normalized += fields[i].text;
      }
      if (normalized != kCatalogHeader) {
        throw ParseError("expected header '" + std::string(kCatalogHeader) + "'", line_no,
                         fields.front().column);
      }
      header_seen = true;
      continue;
    }

    if (fields.size() != 4) {
      const auto col = fields.size() > 4 ? fields[4].column - 1 : line.size() + 1;
      throw ParseError("expected 4 comma-separated fields, found " + std::to_string(fields.size()),
                       line_no, col);
    }

    Species s;
    s.name = std::string(fields[0].text);
    if (s.name.empty()) throw ParseError("missing species name", line_no, fields[0].column);
    s.mass_u = parse_number(fields[1], "mass", line_no);
    s.transition_label = std::string(fields[2].text);
    s.wavelength_nm = parse_number(fields[3], "wavelength", line_no);

    try {
      validate_species(s);
    } catch (const ValidationError& e) {
      throw ValidationError(e.what(), line_no);
    }
    if (!seen.insert(s.name).second) {
      throw ValidationError("duplicate species name '" + s.name + "'", line_no);
    }
    entries.push_back(std::move(s));
  }

  if (!header_seen) throw ParseError("missing header line", line_no, 1);
  return Catalog(std::move(entries), std::move(source_tag));
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::system_error(std::make_error_code(std::errc::no_such_file_or_directory),
                            "cannot open catalog '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str(), path);
}

std::string serialize_catalog(const Catalog& catalog) {
  std::string out(kCatalogHeader);
  out += '\n';
  for (const auto& s : catalog) {
    out += s.name;
    out += ',';
    append_number(out, s.mass_u);
    out += ',';
    out += s.transition_label;
    out += ',';
    append_number(out, s.wavelength_nm);
    out += '\n';
  }
  return out;
}

}  // namespace atomwalk
