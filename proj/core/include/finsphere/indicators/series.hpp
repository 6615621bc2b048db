#pragma once

#include <cstddef>
#include <vector>

#include "finsphere/common/time.hpp"

namespace finsphere::indicators {

/// Ordered list of finite reals, optionally aligned to a date index.
/// Construction rejects NaN and infinities.
class Series {
public:
    Series() = default;
    explicit Series(std::vector<double> values);
    Series(std::vector<Date> dates, std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double front() const { return values_.front(); }
    double back() const { return values_.back(); }

    const std::vector<double>& values() const { return values_; }
    const std::vector<Date>& dates() const { return dates_; }
    bool has_dates() const { return !dates_.empty(); }
    Date date_at(std::size_t i) const {
        return has_dates() ? dates_[i] : Date();
    }

    /// Last `n` points (whole series when shorter).
    Series tail(std::size_t n) const;

private:
    std::vector<Date> dates_;
    std::vector<double> values_;
};

}  // namespace finsphere::indicators
