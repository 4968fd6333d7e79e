#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "fcair/context.hpp"

namespace fcair {

// Burmeister .cxt format:
//   B
//   <blank or name line>
//   <object count>
//   <attribute count>
//   <blank>
//   object names, one per line
//   attribute names, one per line
//   one row per object of 'X' (incident) and '.' (not incident)
FormalContext read_cxt(std::istream& in);
FormalContext load_cxt(const std::string& path);
void write_cxt(std::ostream& out, const FormalContext& ctx);

}  // namespace fcair
