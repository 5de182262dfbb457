#pragma once

#include "bfh/gspace.hpp"
#include "bfh/topology.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace bfh {

/// Space file, one directive per line, '#' starts a comment:
///
///   points a b c d
///   open a b          # U_0
///   open a            # U_1, ...
///
/// `open` with no names is the empty basic open.
FinTopSpace parse_space(std::string_view text);
std::string to_text(const FinTopSpace& space);

/// G-space file:
///
///   elements e r              # element 0 is the identity
///   mult e r                  # row g: the products g*h, h in element order
///   mult r e
///   gopen e r                 # V_0, must be the whole group
///   gopen e                   # V_1, ...
///   space sierpinski.space    # or inline `points` / `open` lines
///   action e a b c d          # images of the points, in point order
///   action r b a d c
///
/// Relative `space` paths are resolved against `base_dir`.
GSpaceInstance parse_gspace(std::string_view text, const std::filesystem::path& base_dir = {});
/// Self-contained form with the space inline.
std::string to_text(const GSpaceInstance& inst);

/// Whole file contents; InputError if it cannot be read.
std::string read_file(const std::filesystem::path& path);

} // namespace bfh
