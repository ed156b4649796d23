#pragma once

#include <filesystem>
#include <string>

#include "rio/wom_code.hpp"

namespace rio {

// Code-spec file format (JSON):
//   n, k, t        code parameters
//   decode         2^n k-bit strings, entry s = info word decoded from the
//                  read whose state string equals s written in binary
//   write_tables   one object per write, keyed by prior-state bitstring;
//                  each row maps info bitstrings to successor bitstrings
// Saving a code without explicit write tables materializes them first, so
// load(save(code)) always round-trips to the same spec.
std::string wom_code_to_json(const WomCodeSpec& code);
WomCodeSpec wom_code_from_json(const std::string& text);

void save_wom_code(const WomCodeSpec& code, const std::filesystem::path& path);
WomCodeSpec load_wom_code(const std::filesystem::path& path);

} // namespace rio
