#include "finsphere/indicators/series.hpp"

#include <cmath>

#include "finsphere/common/errors.hpp"

namespace finsphere::indicators {

namespace {
void check_finite(const std::vector<double>& values) {
    for (double v : values)
        if (!std::isfinite(v))
            throw ValidationError("series values must be finite");
}
}  // namespace

Series::Series(std::vector<double> values) : values_(std::move(values)) {
    check_finite(values_);
}

Series::Series(std::vector<Date> dates, std::vector<double> values)
    : dates_(std::move(dates)), values_(std::move(values)) {
    check_finite(values_);
    if (!dates_.empty() && dates_.size() != values_.size())
        throw ValidationError("series date index length mismatch");
}

Series Series::tail(std::size_t n) const {
    if (n >= size()) return *this;
    const std::size_t start = size() - n;
    std::vector<double> v(values_.begin() + static_cast<std::ptrdiff_t>(start), values_.end());
    if (!has_dates()) return Series(std::move(v));
    std::vector<Date> d(dates_.begin() + static_cast<std::ptrdiff_t>(start), dates_.end());
    return Series(std::move(d), std::move(v));
}

}  // namespace finsphere::indicators
