#ifndef EGH_PRIME_FIELD_HPP
#define EGH_PRIME_FIELD_HPP

#include <cstdint>

#include "egh/errors.hpp"

namespace egh {

// Scalars of GF(p) are plain uint32_t values in [0, p).
using Scalar = std::uint32_t;

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// Arithmetic in GF(p) for a prime p < 2^31.
class PrimeField {
  public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2 || p >= (1u << 31) || !is_prime(p))
            throw input_error("modulus must be a prime in [2, 2^31)");
    }

    std::uint32_t modulus() const { return p_; }

    Scalar reduce(std::uint64_t v) const { return static_cast<Scalar>(v % p_); }

    Scalar add(Scalar a, Scalar b) const {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return s >= p_ ? static_cast<Scalar>(s - p_) : static_cast<Scalar>(s);
    }

    Scalar sub(Scalar a, Scalar b) const {
        return a >= b ? a - b : static_cast<Scalar>(a + p_ - b);
    }

    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }

    Scalar mul(Scalar a, Scalar b) const {
        return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
    }

    // Multiplicative inverse of a nonzero scalar (extended Euclid).
    Scalar inv(Scalar a) const {
        if (a == 0) throw input_error("inverse of zero in GF(p)");
        std::int64_t t = 0, newt = 1;
        std::int64_t r = p_, newr = a;
        while (newr != 0) {
            std::int64_t q = r / newr;
            t -= q * newt;
            std::swap(t, newt);
            r -= q * newr;
            std::swap(r, newr);
        }
        if (t < 0) t += p_;
        return static_cast<Scalar>(t);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  private:
    std::uint32_t p_;
};

}  // namespace egh

#endif
