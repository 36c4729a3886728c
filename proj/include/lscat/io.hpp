#pragma once

#include <string>
#include <string_view>

#include "lscat/complex.hpp"
#include "lscat/finspace.hpp"

namespace lscat {

/// {"points": [...], "order": [[lo, hi], ...]}. Throws ParseError on invalid
/// JSON and InputError (with the offending field) on a bad document.
FinSpace parse_space_json(std::string_view text);
/// {"maximal_faces": [[v, ...], ...]}; vertices are numbered in order of
/// first appearance.
SimplicialComplex parse_complex_json(std::string_view text);

/// Whole file contents; InputError if unreadable.
std::string read_text_file(const std::string& path);

/// A builtin space name ("circle4", "chain(3)", ...) or a JSON file path.
FinSpace load_space(const std::string& name_or_path);
/// A builtin complex name ("rp2_6", "torus7") or a JSON file path.
SimplicialComplex load_complex(const std::string& name_or_path);

/// Directory of the shipped data files (LSCAT_DATA_DIR overrides).
std::string data_dir();

}  // namespace lscat
