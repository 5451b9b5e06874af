#include "lefschetz/numeric.hpp"

namespace lefschetz {

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint32_t residue_mod(const Integer& c, std::uint32_t p) {
    Integer r = c % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r.get_ui());
}

} // namespace lefschetz
