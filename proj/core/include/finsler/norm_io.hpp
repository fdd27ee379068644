#pragma once

#include <filesystem>
#include <string_view>

#include "finsler/norm.hpp"

namespace finsler {

/// Parses a norm definition. Two forms are accepted:
///
///   expression form           built-in shorthand
///   ---------------           ------------------
///   dim = 2                   family = randers        (or riemannian, mthroot)
///   F = sqrt(y1^2+y2^2)       A = [[1, 0], [0, 1]]
///                             b = [0.5, 0]            (randers only)
///                             m = 4                   (mthroot only)
///                             c = [1, 1]              (mthroot only)
///
/// Blank lines and '#' comments are ignored. Every FinslerNorm prints
/// itself back in one of these forms via definition().
FinslerNorm parse_norm_definition(std::string_view text);

/// parse_norm_definition over the contents of a file.
FinslerNorm load_norm_file(const std::filesystem::path& path);

}  // namespace finsler
