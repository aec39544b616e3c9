#include "wavegraph/format.hpp"

#include <algorithm>
#include <charconv>
#include <system_error>

namespace wavegraph {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_real(const Real& v) {
    int digits = std::max<long>(6, v.precision() / 3);
    return v.decimal(static_cast<int>(digits));
}

}  // namespace wavegraph
