#ifndef OPUC_IO_HPP
#define OPUC_IO_HPP

#include <string>

// Deterministic numeric formatting for CSV output: fixed 17-significant-
// digit shortest form via snprintf, independent of locale and stream
// state, so identical runs produce byte-identical files.

namespace opuc {

std::string format_double(double x);

}  // namespace opuc

#endif
