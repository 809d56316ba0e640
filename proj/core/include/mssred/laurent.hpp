#ifndef MSSRED_LAURENT_HPP
#define MSSRED_LAURENT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mssred/exactnum.hpp"
#include "mssred/modarith.hpp"

namespace mssred {

/// sum_i c[i] * g^(low + i) over F_p; c has no zero at either end, zero is empty.
struct LaurentPoly {
    std::int64_t low = 0;
    CoeffVec c;
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    bool is_zero() const { return c.empty(); }
    /// Lowest exponent with a nonzero coefficient.
    std::optional<std::int64_t> valuation() const {
        if (c.empty()) return std::nullopt;
        return low;
    }
    std::optional<std::int64_t> degree() const {
        if (c.empty()) return std::nullopt;
        return low + static_cast<std::int64_t>(c.size()) - 1;
    }
};

/// Laurent polynomials F_p[g, 1/g], p < 2^32.
class LaurentRing {
   public:
    using Elem = LaurentPoly;

    explicit LaurentRing(std::uint32_t p);
    std::uint32_t p() const { return p_; }

    Elem zero() const { return {}; }
    Elem from_int(long long v) const;
    Elem from_bigint(const BigInt& v) const;
    Elem monomial(std::int64_t e, std::uint32_t coef = 1) const;
    /// Reads the decimal digits of v as coefficients of g^0, g^1, ...
    Elem from_digits(const BigInt& v) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(const Elem& a, std::uint64_t s) const;
    Elem shift(const Elem& a, std::int64_t k) const;
    Elem pow(const Elem& a, std::uint64_t e) const;
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool less(const Elem& a, const Elem& b) const;
    std::vector<Elem> power_sums(const std::vector<Elem>& v, std::size_t d) const;

    // Interface used by the gadget builder: the base is g.
    Elem base_pow(std::uint64_t e) const { return monomial(static_cast<std::int64_t>(e)); }
    Elem div_base_pow(const Elem& a, std::uint64_t e) const { return shift(a, -static_cast<std::int64_t>(e)); }
    /// Division by an integer k that is invertible mod p; throws std::domain_error otherwise.
    Elem div_small(const Elem& a, std::uint64_t k) const;

   private:
    std::uint32_t p_;
    void normalize(Elem& a) const;
};

}  // namespace mssred

#endif
