#include "mssred/exactnum.hpp"

#include <algorithm>

#include <map>
#include <ostream>
#include <stdexcept>

namespace mssred {

namespace {

bool valid_integer_text(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

BigInt BigInt::parse(std::string_view text) {
    if (!valid_integer_text(text))
        throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    std::string s(text);
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(mpz_class(s, 10));
}

BigInt BigInt::pow10(std::uint64_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return BigInt(std::move(r));
}

BigInt BigInt::pow(std::uint64_t e) const {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
    return BigInt(std::move(r));
}

std::size_t BigInt::decimal_digits() const {
    if (is_zero()) return 1;
    // mpz_sizeinbase may overshoot by one for base 10.
    std::size_t est = mpz_sizeinbase(v_.get_mpz_t(), 10);
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, est - 1);
    return mpz_cmpabs(v_.get_mpz_t(), p.get_mpz_t()) >= 0 ? est : est - 1;
}

bool BigInt::fits_u64() const {
    return sgn(v_) >= 0 && mpz_sizeinbase(v_.get_mpz_t(), 2) <= 64;
}

std::uint64_t BigInt::to_u64() const {
    if (!fits_u64()) throw std::out_of_range("BigInt does not fit in 64 bits");
    std::uint64_t r = 0;
    mpz_export(&r, nullptr, -1, sizeof r, 0, 0, v_.get_mpz_t());
    return r;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("integer division by zero");
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return BigInt(std::move(q));
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("integer division by zero");
    mpz_class r;
    mpz_tdiv_r(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return BigInt(std::move(r));
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return BigInt(std::move(r));
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return BigInt(std::move(r));
}

BigInt mod(const BigInt& a, const BigInt& m) {
    if (m.is_zero()) throw std::domain_error("modulus is zero");
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.raw().get_mpz_t(), m.raw().get_mpz_t());
    return BigInt(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const BigInt& x) { return os << x.to_string(); }

BigRat BigRat::normalize(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::domain_error("rational with zero denominator");
    mpq_class q(num.raw(), den.raw());
    return BigRat(std::move(q));
}

BigRat BigRat::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRat(BigInt::parse(text));
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw std::invalid_argument("denominator must be unsigned: '" + std::string(text) + "'");
    BigInt den = BigInt::parse(den_text);
    if (den.is_zero()) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return normalize(BigInt::parse(text.substr(0, slash)), den);
}

std::string BigRat::to_string() const {
    if (is_integer()) return v_.get_num().get_str(10);
    return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

BigRat operator/(const BigRat& a, const BigRat& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return BigRat::from_canonical(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const BigRat& x) { return os << x.to_string(); }

std::strong_ordering cmp_pow10(const BigRat& x, std::int64_t e) {
    if (x.is_zero()) return std::strong_ordering::less;
    // Bit sizes settle most comparisons without materializing 10^e.
    {
        const double bn = static_cast<double>(mpz_sizeinbase(x.num_raw().get_mpz_t(), 2));
        const double bd = static_cast<double>(mpz_sizeinbase(x.den_raw().get_mpz_t(), 2));
        constexpr double kLog10Of2 = 0.30102999566398120;
        const double hi = (bn - bd + 1) * kLog10Of2, lo = (bn - bd - 1) * kLog10Of2;
        const double de = static_cast<double>(e);
        if (hi < de - 1) return std::strong_ordering::less;
        if (lo > de + 1) return std::strong_ordering::greater;
    }
    // |num| vs 10^e * den, with the power moved to whichever side keeps it integral.
    mpz_class lhs = abs(x.num_raw());
    mpz_class rhs = x.den_raw();
    mpz_class p;
    if (e >= 0) {
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
        rhs *= p;
    } else {
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-e));
        lhs *= p;
    }
    int c = cmp(lhs, rhs);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

BigRat pow(const BigRat& x, std::uint64_t e) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), x.num_raw().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), x.den_raw().get_mpz_t(), e);
    mpq_class q;
    q.get_num() = std::move(n);
    q.get_den() = std::move(d);
    return BigRat::from_canonical(std::move(q));
}

BigRat power_sum(std::span<const BigRat> values, std::uint64_t k) {
    std::map<mpz_class, mpz_class> by_den;
    mpz_class t;
    for (const auto& v : values) {
        mpz_pow_ui(t.get_mpz_t(), v.num_raw().get_mpz_t(), k);
        by_den[v.den_raw()] += t;
    }
    BigRat total;
    for (auto& [den, s] : by_den) {
        mpz_class dk;
        mpz_pow_ui(dk.get_mpz_t(), den.get_mpz_t(), k);
        total += BigRat(mpq_class(s, dk));
    }
    return total;
}

std::vector<BigRat> power_sums(std::span<const BigRat> values, std::uint64_t d) {
    std::map<mpz_class, std::vector<mpz_class>> by_den;
    for (const auto& v : values) by_den[v.den_raw()].push_back(v.num_raw());
    std::vector<BigRat> out(d);
    std::vector<mpz_class> acc(d), pw(d + 1);
    // pw[m] = base^m, squaring whenever m is even since GMP squares faster than it multiplies.
    auto ladder = [&](const mpz_class& base, std::uint64_t top) {
        pw[1] = base;
        for (std::uint64_t m = 2; m <= top; ++m) {
            if (m % 2 == 0)
                mpz_mul(pw[m].get_mpz_t(), pw[m / 2].get_mpz_t(), pw[m / 2].get_mpz_t());
            else
                mpz_mul(pw[m].get_mpz_t(), pw[m - 1].get_mpz_t(), base.get_mpz_t());
        }
    };
    mpz_class sq;
    for (auto& [den, nums] : by_den) {
        for (auto& a : acc) a = 0;
        // x and -x together contribute 2 x^k at even k only, which halves the work.
        std::sort(nums.begin(), nums.end(), [](const mpz_class& x, const mpz_class& y) {
            const int c = mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t());
            return c != 0 ? c < 0 : sgn(x) < sgn(y);
        });
        std::vector<mpz_class> paired(d);
        for (std::size_t i = 0; i < nums.size(); ++i) {
            const mpz_class& x = nums[i];
            if (i + 1 < nums.size() && sgn(x) < 0 && mpz_cmpabs(x.get_mpz_t(), nums[i + 1].get_mpz_t()) == 0 &&
                sgn(nums[i + 1]) > 0) {
                if (d >= 2) {
                    mpz_mul(sq.get_mpz_t(), x.get_mpz_t(), x.get_mpz_t());
                    ladder(sq, d / 2);
                    for (std::uint64_t m = 1; 2 * m <= d; ++m) paired[2 * m - 1] += pw[m];
                }
                ++i;
                continue;
            }
            ladder(x, d);
            for (std::uint64_t k = 1; k <= d; ++k) acc[k - 1] += pw[k];
        }
        for (std::uint64_t k = 0; k < d; ++k)
            if (sgn(paired[k]) != 0) {
                mpz_mul_2exp(paired[k].get_mpz_t(), paired[k].get_mpz_t(), 1);
                acc[k] += paired[k];
            }
        mpz_class dk = 1;
        for (std::uint64_t k = 0; k < d; ++k) {
            dk *= den;
            out[k] += BigRat(mpq_class(acc[k], dk));
        }
    }
    return out;
}

BigInt common_denominator(std::span<const BigRat> values) {
    mpz_class l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den_raw().get_mpz_t());
    return BigInt(std::move(l));
}

DigitLengths digit_lengths(const BigRat& x) {
    return {x.num().decimal_digits(), x.den().decimal_digits()};
}

BigInt factorial(std::uint64_t n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return BigInt(std::move(r));
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return BigInt(std::move(r));
}

}  // namespace mssred
