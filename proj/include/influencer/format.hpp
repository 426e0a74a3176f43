#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace influencer {

/// Fixed six-decimal rendering used by every CSV table.
inline std::string fixed6(double value) {
    if (value == 0.0) value = 0.0; // no "-0.000000"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    std::string s = buf;
    if (s == "-0.000000") s.erase(0, 1);
    return s;
}

} // namespace influencer
