#ifndef GLK_SUMMATION_HPP
#define GLK_SUMMATION_HPP

#include <cmath>

namespace glk {

/// Neumaier's variant of Kahan summation; the running compensation also
/// covers terms larger than the accumulated sum.
class CompensatedSum {
public:
    CompensatedSum& operator+=(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            compensation_ += (sum_ - t) + x;
        else
            compensation_ += (x - t) + sum_;
        sum_ = t;
        return *this;
    }

    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

} // namespace glk

#endif // GLK_SUMMATION_HPP
