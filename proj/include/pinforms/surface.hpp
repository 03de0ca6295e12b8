#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace pinforms {

/// Compact connected surface, described by orientability, genus (handle
/// count when orientable, crosscap count otherwise) and the number of
/// boundary circles.
///
/// Spec strings: "O<g>" or "N<h>", optionally followed by ":b=<k>".
/// Aliases: sphere = O0, torus = O1, rp2 = N1, klein = N2.
struct SurfaceSpec {
  bool orientable = true;
  int genus = 0;     // handles if orientable, crosscaps if not
  int boundary = 0;  // number of boundary circles

  bool closed() const { return boundary == 0; }
  int euler_characteristic() const {
    return orientable ? 2 - 2 * genus - boundary : 2 - genus - boundary;
  }

  /// Canonical spec string ("O1", "N2:b=1", ...).
  std::string name() const;

  /// Parses a spec string. Throws std::invalid_argument on malformed
  /// syntax and std::domain_error on syntactically valid but
  /// inadmissible surfaces (non-orientable with zero crosscaps,
  /// negative counts).
  static SurfaceSpec parse(std::string_view text);

  auto operator<=>(const SurfaceSpec&) const = default;
};

}  // namespace pinforms
