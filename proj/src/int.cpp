#include "tss/int.hpp"

#include <stdexcept>

namespace tss {

std::string to_decimal(const Int& v) { return v.str(); }

Int parse_decimal(std::string_view s) {
    std::string_view digits = s;
    bool negative = false;
    if (!digits.empty() && digits.front() == '-') {
        negative = true;
        digits.remove_prefix(1);
    }
    if (digits.empty()) throw std::invalid_argument("empty decimal string");
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("non-digit in decimal string");
    }
    if (digits.size() > 1 && digits.front() == '0')
        throw std::invalid_argument("leading zeros in decimal string");
    if (negative && digits == "0") throw std::invalid_argument("negative zero");
    Int v{std::string(digits)};
    return negative ? Int(-v) : v;
}

}  // namespace tss
