#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace capacheck {

// Errors ---------------------------------------------------------------

struct FieldError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// p = 2 gets its own type: the whole theory assumes an odd prime.
struct EvenPrimeError : FieldError {
    EvenPrimeError() : FieldError("p = 2 is not supported; the modulus must be an odd prime") {}
};

struct DimMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Modulus --------------------------------------------------------------

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Valid moduli are odd primes with 3 <= p < 2^16.
inline void check_modulus(uint32_t p) {
    if (p == 2) throw EvenPrimeError();
    if (p >= (1u << 16))
        throw FieldError("modulus too large: p must be < 2^16, got " + std::to_string(p));
    if (!is_prime_u32(p))
        throw FieldError("modulus must be an odd prime, got " + std::to_string(p));
}

// Arithmetic on residues in [0, p) -------------------------------------

inline uint32_t fp_reduce(int64_t x, uint32_t p) {
    int64_t r = x % static_cast<int64_t>(p);
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
}

inline uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline uint32_t fp_neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

inline uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

inline uint32_t fp_pow(uint32_t a, uint64_t e, uint32_t p) {
    uint32_t r = 1 % p;
    while (e) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline uint32_t fp_inv(uint32_t a, uint32_t p) {
    if (a == 0) throw FieldError("division by zero mod p");
    return fp_pow(a, p - 2, p);
}

// n(n-1)/2 mod p, safe for any uint32 n.
inline uint32_t fp_binom2(uint32_t n, uint32_t p) {
    uint64_t v = (static_cast<uint64_t>(n) * (n - (n ? 1 : 0))) / 2;
    return static_cast<uint32_t>(v % p);
}

} // namespace capacheck
