#ifndef MSSRED_EXACTNUM_HPP
#define MSSRED_EXACTNUM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mssred {

/// Arbitrary-precision signed integer.
///
/// Thin value wrapper over a GMP integer. Zero always has positive sign and
/// no limbs, so equality is representation equality.
class BigInt {
   public:
    BigInt() = default;
    BigInt(long long v) : v_(static_cast<long>(v)) {}  // NOLINT: implicit from literals
    explicit BigInt(mpz_class v) : v_(std::move(v)) {}

    /// Parses an optional-sign decimal string. Throws std::invalid_argument.
    static BigInt parse(std::string_view text);
    static BigInt pow10(std::uint64_t e);

    std::string to_string() const { return v_.get_str(10); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    BigInt abs() const { return BigInt(mpz_class(::abs(v_))); }
    BigInt pow(std::uint64_t e) const;

    /// Exact number of decimal digits of |x|; 0 has one digit.
    std::size_t decimal_digits() const;
    std::size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2); }
    bool fits_u64() const;
    std::uint64_t to_u64() const;
    bool divisible_by(const BigInt& d) const { return mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t()) != 0; }

    BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
    BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
    BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

    friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ + b.v_)); }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ - b.v_)); }
    friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ * b.v_)); }
    /// Truncating division; throws std::domain_error on a zero divisor.
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    /// Remainder with the sign of the dividend.
    friend BigInt operator%(const BigInt& a, const BigInt& b);
    BigInt operator-() const { return BigInt(mpz_class(-v_)); }

    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

    const mpz_class& raw() const { return v_; }
    mpz_class& raw() { return v_; }

   private:
    mpz_class v_;
};

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
/// Floor modulus, result in [0, |m|).
BigInt mod(const BigInt& a, const BigInt& m);
std::ostream& operator<<(std::ostream& os, const BigInt& x);

/// Canonical rational: gcd(|num|, den) = 1, den > 0, zero is 0/1.
class BigRat {
   public:
    BigRat() = default;
    BigRat(long long v) : v_(static_cast<long>(v)) {}  // NOLINT
    BigRat(const BigInt& v) : v_(v.raw()) {}             // NOLINT
    explicit BigRat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    /// Wraps a value the caller guarantees is already canonical.
    static BigRat from_canonical(mpq_class v) {
        BigRat r;
        r.v_ = std::move(v);
        return r;
    }

    /// Builds the reduced form of num/den. Throws std::domain_error if den == 0.
    static BigRat normalize(const BigInt& num, const BigInt& den);
    /// Parses "n" or "n/d". Throws std::invalid_argument.
    static BigRat parse(std::string_view text);

    /// "num/den", with the denominator omitted when it is 1.
    std::string to_string() const;

    BigInt num() const { return BigInt(v_.get_num()); }
    BigInt den() const { return BigInt(v_.get_den()); }
    const mpz_class& num_raw() const { return v_.get_num(); }
    const mpz_class& den_raw() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    BigRat abs() const { return from_canonical(mpq_class(::abs(v_))); }

    BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
    BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
    BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }

    friend BigRat operator+(const BigRat& a, const BigRat& b) { return from_canonical(mpq_class(a.v_ + b.v_)); }
    friend BigRat operator-(const BigRat& a, const BigRat& b) { return from_canonical(mpq_class(a.v_ - b.v_)); }
    friend BigRat operator*(const BigRat& a, const BigRat& b) { return from_canonical(mpq_class(a.v_ * b.v_)); }
    /// Throws std::domain_error on division by zero.
    friend BigRat operator/(const BigRat& a, const BigRat& b);
    BigRat operator-() const { return from_canonical(mpq_class(-v_)); }

    friend bool operator==(const BigRat& a, const BigRat& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

    const mpq_class& raw() const { return v_; }

   private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigRat& x);

inline BigRat rat_normalize(const BigInt& num, const BigInt& den) { return BigRat::normalize(num, den); }

/// Ordering of |x| against 10^e, computed exactly.
std::strong_ordering cmp_pow10(const BigRat& x, std::int64_t e);

BigRat pow(const BigRat& x, std::uint64_t e);

/// Sum of x^k over the values. Values sharing a denominator are summed as
/// integers first, which keeps mass power sums over gadget values cheap.
BigRat power_sum(std::span<const BigRat> values, std::uint64_t k);

/// All power sums for k = 1..d in one pass.
std::vector<BigRat> power_sums(std::span<const BigRat> values, std::uint64_t d);

/// Least common multiple of the denominators.
BigInt common_denominator(std::span<const BigRat> values);

/// Number of decimal digits of the numerator and denominator.
struct DigitLengths {
    std::size_t numerator = 1;
    std::size_t denominator = 1;
};
DigitLengths digit_lengths(const BigRat& x);

BigInt factorial(std::uint64_t n);
/// Binomial coefficient as BigInt.
BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace mssred

#endif
