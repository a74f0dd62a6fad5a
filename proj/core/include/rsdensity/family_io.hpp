#pragma once

// JSON file schemas shared by the library and the CLI. The exact layout is
// documented in docs/file_formats.md.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rsdensity/repmodel.hpp"

namespace rsd {

inline constexpr int kFamilyFormatVersion = 1;

// Serialized text is deterministic: fixed key order, shortest round-trip
// decimals, two-space indentation.
std::string family_to_json(const Family& family);
// Structural parse only; call validate() for the mathematical invariants.
// Throws InputError on malformed documents.
Family family_from_json(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
Family load_family(const std::filesystem::path& path);

// Flat list of [re, im] pairs.
std::vector<Complex> complex_list_from_json(std::string_view text);
// List of rows, each a list of [re, im] pairs; all rows of equal length.
std::vector<std::vector<Complex>> complex_matrix_from_json(std::string_view text);

}  // namespace rsd
