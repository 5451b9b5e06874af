#ifndef LEFSCHETZ_NUMERIC_HPP
#define LEFSCHETZ_NUMERIC_HPP

#include <cstdint>
#include <gmpxx.h>

namespace lefschetz {

// All coefficient arithmetic is exact. Integer coefficients live in mpz,
// rational matrix entries in mpq; residues mod p are kept as canonical
// 0..p-1 machine words.
using Integer = mpz_class;
using Rational = mpq_class;

Integer binomial(unsigned n, unsigned k);

bool is_prime(std::uint64_t n);

// Canonical residue of c modulo p, in 0..p-1.
std::uint32_t residue_mod(const Integer& c, std::uint32_t p);

} // namespace lefschetz

#endif
