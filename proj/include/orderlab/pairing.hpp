#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace orderlab {

/// Cantor pairing codec: code(x,y) = (x+y)(x+y+1)/2 + y.
/// Column-structured sets elsewhere read the first coordinate as the column
/// index, so column(code(i,n)) == i.
struct Pairing {
    static constexpr const char* name = "cantor";

    static std::int64_t encode(std::int64_t x, std::int64_t y) {
        if (x < 0 || y < 0) throw std::invalid_argument("pairing: negative coordinate");
        std::int64_t t = x + y;
        if (t > 3000000000LL) throw std::overflow_error("pairing: coordinate overflow");
        return t * (t + 1) / 2 + y;
    }

    static std::pair<std::int64_t, std::int64_t> decode(std::int64_t z) {
        if (z < 0) throw std::invalid_argument("pairing: negative code");
        // t = floor((sqrt(8z+1)-1)/2), fixed up to be exact in integers.
        std::int64_t t = static_cast<std::int64_t>((std::sqrt(8.0 * static_cast<double>(z) + 1.0) - 1.0) / 2.0);
        while (t * (t + 1) / 2 > z) --t;
        while ((t + 1) * (t + 2) / 2 <= z) ++t;
        std::int64_t y = z - t * (t + 1) / 2;
        return {t - y, y};
    }

    static std::int64_t column_of(std::int64_t z) { return decode(z).first; }
};

} // namespace orderlab
