#include "finsphere/common/time.hpp"

#include <array>
#include <charconv>
#include <cstdio>

#include "finsphere/common/errors.hpp"

namespace finsphere {
namespace {

// Civil-calendar conversions after Howard Hinnant's chrono algorithms.
std::int32_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2) / 5 +
                         static_cast<unsigned>(d) - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int32_t>(doe) - 719468;
}

struct Civil {
    int y;
    unsigned m;
    unsigned d;
};

Civil civil_from_days(std::int32_t z) {
    z += 719468;
    const std::int32_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int y = static_cast<int>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return {y + (m <= 2), m, d};
}

bool is_leap(int y) { return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0); }

int days_in_month(int y, int m) {
    static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30,
                                                  31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return kDays[static_cast<std::size_t>(m - 1)];
}

int parse_int(std::string_view s, std::string_view what) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw ParseError("invalid " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

}  // namespace

Date::Date(int year, int month, int day) {
    if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month))
        throw ParseError("invalid calendar date " + std::to_string(year) + "-" +
                         std::to_string(month) + "-" + std::to_string(day));
    serial_ = days_from_civil(year, month, day);
}

Date Date::parse(std::string_view iso) {
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-')
        throw ParseError("invalid date '" + std::string(iso) + "', expected YYYY-MM-DD");
    return Date(parse_int(iso.substr(0, 4), "year"), parse_int(iso.substr(5, 2), "month"),
                parse_int(iso.substr(8, 2), "day"));
}

std::string Date::to_string() const {
    const Civil c = civil_from_days(serial_);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", c.y, c.m, c.d);
    return buf;
}

int Date::year() const { return civil_from_days(serial_).y; }
int Date::month() const { return static_cast<int>(civil_from_days(serial_).m); }
int Date::day() const { return static_cast<int>(civil_from_days(serial_).d); }

bool Date::is_weekend() const {
    // 1970-01-01 was a Thursday; serial 2 = Saturday.
    const int dow = ((serial_ % 7) + 7 + 4) % 7;  // 0 = Sunday
    return dow == 0 || dow == 6;
}

Date Date::next_weekday() const {
    Date d = plus_days(1);
    while (d.is_weekend()) d = d.plus_days(1);
    return d;
}

Instant Instant::start_of_day(Date d) {
    return from_epoch_seconds(static_cast<std::int64_t>(d.serial()) * 86400);
}

Instant Instant::end_of_day(Date d) {
    return from_epoch_seconds(static_cast<std::int64_t>(d.serial() + 1) * 86400 - 1);
}

Instant Instant::parse(std::string_view iso) {
    if (!iso.empty() && (iso.back() == 'Z' || iso.back() == 'z')) iso.remove_suffix(1);
    if (iso.size() == 10) return end_of_day(Date::parse(iso));
    if (iso.size() != 19 || (iso[10] != 'T' && iso[10] != ' ') || iso[13] != ':' ||
        iso[16] != ':')
        throw ParseError("invalid instant '" + std::string(iso) +
                         "', expected YYYY-MM-DD[THH:MM:SS]");
    const Date day = Date::parse(iso.substr(0, 10));
    const int h = parse_int(iso.substr(11, 2), "hour");
    const int m = parse_int(iso.substr(14, 2), "minute");
    const int s = parse_int(iso.substr(17, 2), "second");
    if (h > 23 || m > 59 || s > 59)
        throw ParseError("invalid time of day in '" + std::string(iso) + "'");
    return from_epoch_seconds(static_cast<std::int64_t>(day.serial()) * 86400 + h * 3600 +
                              m * 60 + s);
}

Date Instant::date() const {
    std::int64_t days = seconds_ / 86400;
    if (seconds_ < 0 && seconds_ % 86400 != 0) --days;
    return Date::from_serial(static_cast<std::int32_t>(days));
}

std::string Instant::to_string() const {
    const Date d = date();
    const std::int64_t rem =
        seconds_ - static_cast<std::int64_t>(d.serial()) * 86400;
    char buf[24];
    std::snprintf(buf, sizeof buf, "T%02d:%02d:%02d", static_cast<int>(rem / 3600),
                  static_cast<int>((rem / 60) % 60), static_cast<int>(rem % 60));
    return d.to_string() + buf;
}

}  // namespace finsphere
