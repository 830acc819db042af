#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "forbid/geometry.hpp"

namespace forbid {

enum class LayoutFormat {
    /// {"nodes": [{"id", "x", "y", "w", "h"}...], "edges": [[idA, idB]...]}
    Native,
    /// Best-effort import of agora-dataset graph files.
    Agora,
};

/// Parses a layout document. Unknown fields are ignored; every schema violation
/// throws InputError naming the offending node or edge.
Layout parse_layout(std::string_view text, LayoutFormat format = LayoutFormat::Native);

/// Canonical native JSON: nodes in layout order, keys id/x/y/w/h, shortest
/// round-trip number formatting.
std::string serialize_layout(const Layout& layout);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

Layout load_layout(const std::filesystem::path& path, LayoutFormat format = LayoutFormat::Native);

}  // namespace forbid
