#ifndef MSCS_CSV_HPP
#define MSCS_CSV_HPP

#include <cstdio>
#include <string>

namespace mscs {

// CSV number format: 6 significant digits, '.' decimal separator. snprintf
// with %g honors the "C" locale, which this program never changes.
inline std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace mscs

#endif
