#include "lefschetz/characteristic.hpp"

#include <limits>
#include <stdexcept>

#include "lefschetz/numeric.hpp"

namespace lefschetz {

Characteristic Characteristic::prime(std::uint32_t p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("characteristic must be 0 or a prime, got " +
                                    std::to_string(p));
    }
    Characteristic c;
    c.value_ = p;
    return c;
}

Characteristic Characteristic::of(std::int64_t value) {
    if (value == 0) return zero();
    if (value < 0 || value > std::numeric_limits<std::uint32_t>::max()) {
        throw std::invalid_argument("characteristic out of range: " +
                                    std::to_string(value));
    }
    return prime(static_cast<std::uint32_t>(value));
}

std::string Characteristic::str() const {
    return std::to_string(value_);
}

} // namespace lefschetz
