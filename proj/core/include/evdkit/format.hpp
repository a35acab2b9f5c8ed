#pragma once

#include <string>

namespace evdkit {

/// Shortest decimal text that reads back to the same double ("nan", "inf"
/// and "-inf" for non-finite values). Locale independent.
std::string format_double(double value);

}  // namespace evdkit
