#include "matchbound/bigcount.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace matchbound {

BigCount factorial_exact(unsigned k) {
    BigCount r = 1;
    for (unsigned j = 2; j <= k; ++j) r *= j;
    return r;
}

double log_of_count(const BigCount& x) {
    if (x <= 0) throw std::domain_error("log_of_count: argument must be positive");
    // Shift down to a 53-bit mantissa, take its log, and add back the
    // shift. Exact for small x; a few ulp otherwise.
    const unsigned bits = boost::multiprecision::msb(x) + 1;
    if (bits <= 62) return std::log(static_cast<double>(x.convert_to<long long>()));
    const unsigned shift = bits - 53;
    const BigCount mantissa = x >> shift;
    return std::log(static_cast<double>(mantissa.convert_to<long long>())) +
           static_cast<double>(shift) * std::numbers::ln2;
}

}  // namespace matchbound
