#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace finsphere {

/// Calendar day, stored as days since 1970-01-01 (proleptic Gregorian).
class Date {
public:
    constexpr Date() = default;
    Date(int year, int month, int day);

    static Date parse(std::string_view iso);       // "YYYY-MM-DD"
    static constexpr Date from_serial(std::int32_t days) {
        Date d;
        d.serial_ = days;
        return d;
    }

    std::string to_string() const;
    int year() const;
    int month() const;
    int day() const;

    constexpr std::int32_t serial() const { return serial_; }
    constexpr bool valid() const { return serial_ != kInvalid; }

    Date plus_days(int n) const { return from_serial(serial_ + n); }
    /// Next Monday-to-Friday day strictly after this one.
    Date next_weekday() const;
    bool is_weekend() const;

    friend constexpr auto operator<=>(Date a, Date b) = default;

private:
    static constexpr std::int32_t kInvalid = INT32_MIN;
    std::int32_t serial_ = kInvalid;
};

/// Point in time, seconds since the Unix epoch (UTC).
class Instant {
public:
    constexpr Instant() = default;
    static constexpr Instant from_epoch_seconds(std::int64_t s) {
        Instant t;
        t.seconds_ = s;
        return t;
    }

    /// Accepts "YYYY-MM-DD" or "YYYY-MM-DDTHH:MM:SS" (optional trailing 'Z').
    /// A bare date is read as the end of that day: daily records become
    /// visible once their session has closed.
    static Instant parse(std::string_view iso);

    static Instant start_of_day(Date d);
    static Instant end_of_day(Date d);

    Date date() const;
    std::string to_string() const;  // "YYYY-MM-DDTHH:MM:SS"

    constexpr std::int64_t epoch_seconds() const { return seconds_; }
    constexpr bool valid() const { return seconds_ != kInvalid; }

    friend constexpr auto operator<=>(Instant a, Instant b) = default;

private:
    static constexpr std::int64_t kInvalid = INT64_MIN;
    std::int64_t seconds_ = kInvalid;
};

}  // namespace finsphere
