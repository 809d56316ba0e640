#ifndef MSSRED_MODARITH_HPP
#define MSSRED_MODARITH_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mssred {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

/// Inverse modulo m via extended Euclid; throws std::domain_error when none exists.
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    __int128 t = 0, nt = 1;
    __int128 r = m, nr = a % m;
    while (nr != 0) {
        __int128 q = r / nr;
        __int128 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::domain_error("element is not invertible");
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

/// Distinct prime factors by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Multiplicative order of a modulo prime p (a != 0).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p);

// Dense polynomials over F_p with p < 2^32, coefficients lowest degree first.
using CoeffVec = std::vector<std::uint32_t>;

void trim(CoeffVec& v);

/// Full product of a and b modulo p (length na + nb - 1, untrimmed).
CoeffVec poly_mul(const std::uint32_t* a, std::size_t na, const std::uint32_t* b, std::size_t nb,
                  std::uint32_t p);
inline CoeffVec poly_mul(const CoeffVec& a, const CoeffVec& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    return poly_mul(a.data(), a.size(), b.data(), b.size(), p);
}

/// Remainder of a modulo a monic polynomial f.
CoeffVec poly_rem_monic(CoeffVec a, const CoeffVec& f, std::uint32_t p);

/// Remainder modulo any nonzero polynomial b.
CoeffVec poly_rem(CoeffVec a, const CoeffVec& b, std::uint32_t p);

/// Monic gcd (empty for gcd(0, 0)).
CoeffVec poly_gcd(CoeffVec a, CoeffVec b, std::uint32_t p);

/// Ben-Or irreducibility test for a monic f of degree >= 1.
bool is_irreducible(const CoeffVec& f, std::uint32_t p);

}  // namespace mssred

#endif
