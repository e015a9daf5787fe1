#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace twistsieve {

/// Natural number big enough to hold exponents like 2^23209. Only what
/// square-and-multiply needs: bit access and a bit length.
class BigNat {
public:
    BigNat() = default;
    static BigNat from_u64(std::uint64_t v);
    static BigNat pow2(std::size_t k);  // the value 2^k

    std::size_t bit_length() const;
    bool bit(std::size_t i) const;
    bool is_zero() const { return bit_length() == 0; }

private:
    std::vector<std::uint64_t> limbs_;  // little-endian 64-bit limbs
};

/// Dense polynomial over GF(2), coefficient of x^i at bit i.
class Gf2Poly {
public:
    Gf2Poly() = default;  // the zero polynomial

    static Gf2Poly zero() { return {}; }
    static Gf2Poly one();
    static Gf2Poly x();
    // Bit i of `bits` is the coefficient of x^i; handy for exhaustive
    // enumeration up to degree 63.
    static Gf2Poly from_integer(std::uint64_t bits);
    // One byte per coefficient (0/1), index i -> x^i.
    static Gf2Poly from_coeff_bits(std::span<const std::uint8_t> bits);

    bool is_zero() const { return words_.empty(); }
    // Degree of the zero polynomial is reported as -1 (the spec's -inf
    // sentinel).
    int degree() const;
    bool coeff(std::size_t i) const;
    void set_coeff(std::size_t i, bool v);

    Gf2Poly operator+(const Gf2Poly& o) const;  // XOR of coefficients
    Gf2Poly operator*(const Gf2Poly& o) const;
    Gf2Poly operator%(const Gf2Poly& modulus) const;
    Gf2Poly square() const;
    Gf2Poly shifted_left(std::size_t k) const;  // multiply by x^k

    static Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

    bool operator==(const Gf2Poly&) const = default;

    // Little-endian coefficient bytes (bit i of byte j = coeff of
    // x^(8j+i)), exactly ceil((degree+1)/8) bytes. Canonical payload for
    // digests.
    std::vector<std::uint8_t> to_bytes_le() const;

    // Human-readable form like "x^3 + x + 1"; "0" for the zero polynomial.
    std::string to_string() const;

    std::span<const std::uint64_t> words() const { return words_; }

private:
    void trim();
    std::vector<std::uint64_t> words_;  // bit-packed, LSB = x^0
};

// (p * q) mod modulus. Throws std::invalid_argument("zero modulus") when
// modulus is zero, and for modulus of degree < 1.
Gf2Poly poly_mul_mod(const Gf2Poly& p, const Gf2Poly& q, const Gf2Poly& modulus);

// Square-and-multiply; exponents as large as 2^23209 are fine because
// squaring mod the modulus is a linear-time coefficient spread plus one
// reduction.
Gf2Poly poly_pow_mod(const Gf2Poly& base, const BigNat& exponent,
                     const Gf2Poly& modulus);
Gf2Poly poly_pow_mod(const Gf2Poly& base, std::uint64_t exponent,
                     const Gf2Poly& modulus);

// Minimal polynomial (monic, degree = shortest LFSR length) of the bit
// sequence, via Berlekamp-Massey. The all-zero sequence gives the
// polynomial 1. Throws on an empty sequence.
Gf2Poly berlekamp_massey(std::span<const std::uint8_t> bits);

// Rabin irreducibility test: p of degree d is irreducible iff
// x^(2^d) == x (mod p) and gcd(x^(2^(d/q)) - x, p) == 1 for every prime
// q | d. Throws for degree < 1 ("constant polynomial").
bool is_irreducible(const Gf2Poly& p);

}  // namespace twistsieve
