#pragma once

#include <iosfwd>

#include "capcup/witness.hpp"

namespace capcup {

// Line format, self-delimiting:
//   certificate <kind> <n> <a> <b>
//   <payload lines>
//   end
// Payloads reuse the witness line forms "cap v0 v1 ...", "cup v0 v1 ...",
// and "gon weak|strong <a> <b>" followed by its two chain lines. Laced cups
// serialize as a "cup" line plus "left"/"right" lacing lines.
void write_certificate(std::ostream& out, const certificate& c);
certificate read_certificate(std::istream& in);

}  // namespace capcup
