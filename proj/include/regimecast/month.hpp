#pragma once

#include <compare>
#include <string>

namespace regimecast {

// Calendar month, the native resolution of every series in the pipeline.
struct Month {
    int index = 0;  // year * 12 + (month - 1)

    static Month from_ym(int year, int month) { return Month{year * 12 + (month - 1)}; }

    // Accepts "YYYYMM" (EIA style), "YYYY-MM" and "YYYY-MM-DD" (FRED/ISO style).
    // Throws DataError naming the token when it cannot be parsed.
    static Month parse(const std::string& token);

    int year() const { return index / 12; }
    int month() const { return index % 12 + 1; }

    std::string iso() const;  // "YYYY-MM-01"

    auto operator<=>(const Month&) const = default;
};

}  // namespace regimecast
