#ifndef MSSRED_FIELDS_HPP
#define MSSRED_FIELDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mssred/exactnum.hpp"
#include "mssred/modarith.hpp"

namespace mssred {

/// Exact below 2^64; above that, BPSW (no known counterexample).
bool is_prime(const BigInt& n);

/// Smallest prime strictly greater than bound.
BigInt find_prime_above(const BigInt& bound);

/// The t-th prime strictly greater than bound (t >= 1).
BigInt nth_prime_above(const BigInt& bound, std::uint64_t t);

enum class FieldKind { rational, prime, extension };

struct FieldDescriptor {
    FieldKind kind = FieldKind::rational;
    BigInt p;                            // characteristic for prime and extension kinds
    std::size_t ell = 1;                 // extension degree
    std::vector<std::uint32_t> modulus;  // monic, ell + 1 coefficients, lowest first

    static FieldDescriptor rational() { return {}; }
    static FieldDescriptor prime(BigInt p) { return {FieldKind::prime, std::move(p), 1, {}}; }

    /// 0 for the rationals.
    BigInt characteristic() const { return kind == FieldKind::rational ? BigInt(0) : p; }
    std::string to_string() const;
    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

/// The rationals.
class RationalField {
   public:
    using Elem = BigRat;

    Elem zero() const { return {}; }
    Elem one() const { return 1; }
    Elem from_int(long long v) const { return v; }
    Elem from_bigint(const BigInt& v) const { return v; }
    Elem from_rational(const BigRat& v) const { return v; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const { return Elem(1) / a; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem pow(const Elem& a, std::uint64_t e) const { return mssred::pow(a, e); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool less(const Elem& a, const Elem& b) const { return a < b; }
    std::string to_string(const Elem& a) const { return a.to_string(); }
    Elem parse(std::string_view s) const { return BigRat::parse(s); }
    BigInt characteristic() const { return 0; }
    FieldDescriptor descriptor() const { return FieldDescriptor::rational(); }
    /// Power sums with the integer-grouping fast path.
    std::vector<Elem> power_sums(const std::vector<Elem>& v, std::size_t d) const {
        return mssred::power_sums(v, d);
    }
};

/// F_p for an arbitrary-size prime p; elements are residues in [0, p).
class PrimeField {
   public:
    using Elem = BigInt;

    /// Throws std::invalid_argument if p is not prime.
    explicit PrimeField(BigInt p);

    const BigInt& p() const { return p_; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long long v) const { return mod(BigInt(v), p_); }
    Elem from_bigint(const BigInt& v) const { return mod(v, p_); }
    /// Throws std::domain_error if the denominator vanishes mod p.
    Elem from_rational(const BigRat& v) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const { return a.is_zero() ? a : p_ - a; }
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem pow(const Elem& a, std::uint64_t e) const;
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool less(const Elem& a, const Elem& b) const { return a < b; }
    std::string to_string(const Elem& a) const { return a.to_string(); }
    Elem parse(std::string_view s) const { return from_bigint(BigInt::parse(s)); }
    BigInt characteristic() const { return p_; }
    FieldDescriptor descriptor() const { return FieldDescriptor::prime(p_); }
    std::vector<Elem> power_sums(const std::vector<Elem>& v, std::size_t d) const;

   private:
    BigInt p_;
    bool mersenne_ = false;
    std::size_t mersenne_bits_ = 0;
    void reduce(mpz_class& x) const;
};

/// F_p for p < 2^32 with machine-word elements; used by samplers and small oracles.
class SmallPrimeField {
   public:
    using Elem = std::uint64_t;

    explicit SmallPrimeField(std::uint64_t p);

    std::uint64_t p() const { return p_; }
    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        return static_cast<Elem>(r < 0 ? r + static_cast<long long>(p_) : r);
    }
    Elem from_bigint(const BigInt& v) const { return mod(v, BigInt(static_cast<long long>(p_))).to_u64(); }
    Elem from_rational(const BigRat& v) const { return div(from_bigint(v.num()), from_bigint(v.den())); }
    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return a * b % p_; }
    Elem inv(Elem a) const { return invmod(a, p_); }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const { return powmod(a, e, p_); }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    bool less(Elem a, Elem b) const { return a < b; }
    std::string to_string(Elem a) const { return std::to_string(a); }
    Elem parse(std::string_view s) const { return from_bigint(BigInt::parse(s)); }
    BigInt characteristic() const { return BigInt(static_cast<long long>(p_)); }
    FieldDescriptor descriptor() const { return FieldDescriptor::prime(characteristic()); }
    std::vector<Elem> power_sums(const std::vector<Elem>& v, std::size_t d) const;

   private:
    std::uint64_t p_;
};

/// Element of F_{p^l} in the basis 1, g, ..., g^{l-1}; trailing zeros trimmed.
struct ExtElem {
    CoeffVec c;
    friend bool operator==(const ExtElem&, const ExtElem&) = default;
};

/// Index of the highest nonzero coordinate, none for zero.
std::optional<std::size_t> ext_magnitude(const ExtElem& v);

/// F_{p^l} as F_p[x] / (modulus), p < 2^32.
class ExtField {
   public:
    using Elem = ExtElem;

    /// Validates primality of p and irreducibility for small degrees.
    ExtField(std::uint32_t p, CoeffVec modulus);
    explicit ExtField(const FieldDescriptor& d);

    std::uint32_t p() const { return p_; }
    std::size_t degree() const { return ell_; }
    const CoeffVec& modulus() const { return mod_; }

    Elem zero() const { return {}; }
    Elem one() const { return {{1}}; }
    Elem from_int(long long v) const;
    Elem from_bigint(const BigInt& v) const;
    Elem from_rational(const BigRat& v) const { return div(from_bigint(v.num()), from_bigint(v.den())); }
    /// Coefficients reduced mod p, then mod the modulus.
    Elem from_coeffs(CoeffVec c) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(const Elem& a, std::uint64_t s) const;
    /// Throws std::domain_error on zero.
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem pow(const Elem& a, std::uint64_t e) const;
    /// gamma^e for any integer e; gamma is invertible because the modulus has c0 != 0.
    Elem gamma_pow(std::int64_t e) const;
    bool is_zero(const Elem& a) const { return a.c.empty(); }
    bool eq(const Elem& a, const Elem& b) const { return a.c == b.c; }
    /// Numeric order of the coefficient vector read as a base-p number.
    bool less(const Elem& a, const Elem& b) const;
    std::string to_string(const Elem& a) const;
    /// Comma-separated coefficients, lowest first.
    Elem parse(std::string_view s) const;
    BigInt characteristic() const { return BigInt(static_cast<long long>(p_)); }
    FieldDescriptor descriptor() const;
    std::vector<Elem> power_sums(const std::vector<Elem>& v, std::size_t d) const;

   private:
    std::uint32_t p_;
    std::size_t ell_;
    CoeffVec mod_;
    Elem gamma_inv_;
};

/// Extension field with the first irreducible modulus in lexicographic order
/// (constant coefficient least significant, c0 = 0 skipped).
/// Throws std::invalid_argument if p is not prime, p >= 2^32 or ell == 0, and
/// std::runtime_error when no modulus can be found within the search cap.
FieldDescriptor make_ext_field(const BigInt& p, std::size_t ell);

/// Whether x^ell + c0 is irreducible over F_p (binomial criterion).
bool binomial_irreducible(std::uint64_t p, std::size_t ell, std::uint64_t c0);

/// Smallest degree >= min_ell admitting an irreducible binomial modulus over F_p.
std::size_t suggest_ext_degree(std::uint64_t p, std::size_t min_ell);

using AnyField = std::variant<RationalField, PrimeField, ExtField>;
AnyField make_field(const FieldDescriptor& d);

/// Smallest entry of the Mersenne-prime table exceeding bound; none beyond the table.
std::optional<BigInt> mersenne_prime_above(const BigInt& bound);

}  // namespace mssred

#endif
