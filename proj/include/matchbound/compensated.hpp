#pragma once

#include <cmath>

namespace matchbound {

// Compensated (Neumaier) accumulator: running sum plus a correction term
// capturing the low-order bits each add loses.
struct NeumaierSum {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            compensation += (sum - t) + x;
        } else {
            compensation += (x - t) + sum;
        }
        sum = t;
    }

    double value() const { return sum + compensation; }
};

}  // namespace matchbound
