#ifndef LEFSCHETZ_CHARACTERISTIC_HPP
#define LEFSCHETZ_CHARACTERISTIC_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace lefschetz {

/// Field characteristic: 0 (rationals) or a prime p.  Construction rejects
/// composite values with a deterministic trial-division check.
class Characteristic {
public:
    Characteristic() : value_(0) {}

    static Characteristic zero() { return Characteristic(); }
    static Characteristic prime(std::uint32_t p);

    // Accepts 0 or a prime; throws std::invalid_argument otherwise.
    static Characteristic of(std::int64_t value);

    bool is_zero() const { return value_ == 0; }
    std::uint32_t value() const { return value_; }

    std::string str() const;

    friend bool operator==(const Characteristic&, const Characteristic&) = default;
    friend auto operator<=>(const Characteristic&, const Characteristic&) = default;

private:
    std::uint32_t value_;
};

} // namespace lefschetz

#endif
