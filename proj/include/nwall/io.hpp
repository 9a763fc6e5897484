#pragma once

#include <string>

#include "nwall/wall.hpp"

namespace nwall {

// Versioned binary wall dump: header (magic "NWAL", version, p, r0, a0,
// ranges) followed by row-major residues, one byte per cell with 0xFF
// reserved for Undefined. Requires p <= 255.
std::string wall_to_bytes(const Wall& w);
Wall wall_from_bytes(const std::string& bytes);

void write_file(const std::string& path, const std::string& bytes);
std::string read_file(const std::string& path);

} // namespace nwall
