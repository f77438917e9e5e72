#pragma once

// Deterministic SVG pictures of lattice colorings and single orbits.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aughts/statistics.hpp"

namespace aughts {

enum class RenderMode { mod_color, diametral, projection, single_orbit };

RenderMode parse_render_mode(const std::string& s);
std::string to_string(RenderMode m);

/// Nineteen distinct colors, enough for every residue class mod 19.
const std::vector<std::string>& default_palette();

inline constexpr const char* kDiametralColor = "#d62728";
inline constexpr const char* kOtherColor = "#1f77b4";
inline constexpr std::uint64_t kDefaultPointBudget = 1'000'000;

struct RenderSpec {
  Region region = Region::sym_square(8);
  RenderMode mode = RenderMode::mod_color;
  std::optional<std::int64_t> modulus;
  std::vector<std::string> palette = default_palette();
  int scale = 8;  // pixels per lattice unit
  std::uint64_t max_points = kDefaultPointBudget;
  Point2 seed = Point2(10, 0);  // single_orbit only
  SeedOrder order = SeedOrder::k1_first;
};

/// Residues of the orbit lengths over the region, ascending.
std::vector<std::int64_t> used_residues(const Region& region, std::int64_t modulus);

/// Colour of residue r. With at least d colours the residue indexes the palette
/// directly; a shorter palette is assigned to the used residues in ascending order.
std::string residue_color(const std::vector<std::string>& palette, const std::vector<std::int64_t>& used,
                          std::int64_t modulus, std::int64_t residue);

/// Validates the request (ArgumentError) and the point budget (ResourceError).
std::string render_svg(const RenderSpec& spec);

/// Parses "#rrggbb,#rrggbb,..."; throws ArgumentError on a malformed entry.
std::vector<std::string> parse_palette(const std::string& list);

}  // namespace aughts
