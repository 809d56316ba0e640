#include "mssred/laurent.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mssred {

LaurentRing::LaurentRing(std::uint32_t p) : p_(p) {
    if (p < 2) throw std::invalid_argument("LaurentRing needs p >= 2");
}

void LaurentRing::normalize(Elem& a) const {
    trim(a.c);
    std::size_t lead = 0;
    while (lead < a.c.size() && a.c[lead] == 0) ++lead;
    if (lead > 0) {
        a.c.erase(a.c.begin(), a.c.begin() + static_cast<std::ptrdiff_t>(lead));
        a.low += static_cast<std::int64_t>(lead);
    }
    if (a.c.empty()) a.low = 0;
}

LaurentRing::Elem LaurentRing::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return monomial(0, static_cast<std::uint32_t>(r));
}

LaurentRing::Elem LaurentRing::from_bigint(const BigInt& v) const {
    return monomial(0, static_cast<std::uint32_t>(mod(v, BigInt(static_cast<long long>(p_))).to_u64()));
}

LaurentRing::Elem LaurentRing::monomial(std::int64_t e, std::uint32_t coef) const {
    coef %= p_;
    if (coef == 0) return {};
    return {e, {coef}};
}

LaurentRing::Elem LaurentRing::from_digits(const BigInt& v) const {
    if (v.sign() < 0) return neg(from_digits(-v));
    std::string s = v.to_string();
    Elem r;
    r.c.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) r.c[s.size() - 1 - i] = static_cast<std::uint32_t>((s[i] - '0') % p_);
    normalize(r);
    return r;
}

LaurentRing::Elem LaurentRing::add(const Elem& a, const Elem& b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::int64_t lo = std::min(a.low, b.low);
    const std::int64_t hi = std::max(*a.degree(), *b.degree());
    Elem r{lo, CoeffVec(static_cast<std::size_t>(hi - lo + 1), 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[static_cast<std::size_t>(a.low - lo) + i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) {
        auto& x = r.c[static_cast<std::size_t>(b.low - lo) + i];
        std::uint64_t s = std::uint64_t{x} + b.c[i];
        x = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    normalize(r);
    return r;
}

LaurentRing::Elem LaurentRing::neg(const Elem& a) const {
    Elem r = a;
    for (auto& x : r.c) x = x == 0 ? 0 : p_ - x;
    return r;
}

LaurentRing::Elem LaurentRing::mul(const Elem& a, const Elem& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    Elem r{a.low + b.low, poly_mul(a.c, b.c, p_)};
    normalize(r);
    return r;
}

LaurentRing::Elem LaurentRing::scale(const Elem& a, std::uint64_t s) const {
    s %= p_;
    if (s == 0) return {};
    Elem r = a;
    for (auto& x : r.c) x = static_cast<std::uint32_t>(x * s % p_);
    return r;
}

LaurentRing::Elem LaurentRing::shift(const Elem& a, std::int64_t k) const {
    if (a.is_zero()) return a;
    Elem r = a;
    r.low += k;
    return r;
}

LaurentRing::Elem LaurentRing::pow(const Elem& a, std::uint64_t e) const {
    Elem r = monomial(0, 1), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return r;
}

bool LaurentRing::less(const Elem& a, const Elem& b) const {
    if (a.low != b.low) return a.low < b.low;
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    return a.c < b.c;
}

std::vector<LaurentRing::Elem> LaurentRing::power_sums(const std::vector<Elem>& v, std::size_t d) const {
    std::vector<Elem> out(d);
    for (const auto& x : v) {
        Elem t = x;
        for (std::size_t k = 0; k < d; ++k) {
            if (k > 0) t = mul(t, x);
            out[k] = add(out[k], t);
        }
    }
    return out;
}

LaurentRing::Elem LaurentRing::div_small(const Elem& a, std::uint64_t k) const {
    if (k % p_ == 0) throw std::domain_error("division by a multiple of the characteristic");
    return scale(a, invmod(k % p_, p_));
}

}  // namespace mssred
