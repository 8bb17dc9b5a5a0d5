#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace atomwalk {

/// One element or isotope driven on a single ground-to-excited transition.
struct Species {
  std::string name;              // e.g. "Mg-24"
  double mass_u = 0.0;           // atomic mass units
  std::string transition_label;  // spectroscopic designation, stored verbatim
  double wavelength_nm = 0.0;

  bool operator==(const Species&) const = default;
};

inline constexpr std::string_view kCatalogHeader = "name,mass_u,transition,wavelength_nm";

/// Ordered, duplicate-free list of species. Immutable once built.
class Catalog {
 public:
  Catalog() = default;
  /// Throws ValidationError on duplicate names or invalid fields.
  Catalog(std::vector<Species> entries, std::string source_tag);

  const std::vector<Species>& entries() const noexcept { return entries_; }
  const std::string& source_tag() const noexcept { return source_tag_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  std::optional<Species> find(std::string_view name) const;
  /// Like find() but throws ValidationError when the name is absent.
  const Species& at(std::string_view name) const;

 private:
  std::vector<Species> entries_;
  std::string source_tag_;
};

/// Throws ValidationError if the species cannot be stored in a catalog file.
void validate_species(const Species& s);

/// Parses the comma-delimited catalog format. The first non-blank, non-comment
/// line must be the header. Throws ParseError for malformed lines and
/// ValidationError (carrying the line number) for invariant violations.
Catalog parse_catalog(std::string_view text, std::string source_tag = "text");

/// Reads and parses a catalog file. Throws std::system_error when unreadable.
Catalog load_catalog(const std::string& path);

/// Header plus one line per species. Numbers use shortest round-trip form.
std::string serialize_catalog(const Catalog& catalog);

/// The 24 reference species with masses and wavelengths as tabulated.
const Catalog& embedded_table1();

}  // namespace atomwalk
