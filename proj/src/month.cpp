#include "regimecast/month.hpp"

#include <cctype>
#include <cstdio>

#include "regimecast/errors.hpp"

namespace regimecast {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Month Month::parse(const std::string& token) {
    if (all_digits(token) && token.size() == 6) {
        int year = std::stoi(token.substr(0, 4));
        int month = std::stoi(token.substr(4, 2));
        if (month >= 1 && month <= 12) return from_ym(year, month);
    }
    // ISO: YYYY-MM or YYYY-MM-DD
    if (token.size() >= 7 && token[4] == '-') {
        std::string y = token.substr(0, 4);
        std::string m = token.substr(5, 2);
        if (all_digits(y) && all_digits(m)) {
            int month = std::stoi(m);
            if (month >= 1 && month <= 12) return from_ym(std::stoi(y), month);
        }
    }
    throw DataError("unparseable date token: '" + token + "'");
}

std::string Month::iso() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-01", year(), month());
    return buf;
}

}  // namespace regimecast
