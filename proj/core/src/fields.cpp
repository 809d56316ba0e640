#include "mssred/fields.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>

namespace mssred {

namespace {

constexpr std::array<std::uint32_t, 51> kMersenneExponents = {
    2,       3,       5,       7,        13,       17,       19,       31,       61,
    89,      107,     127,     521,      607,      1279,     2203,     2281,     3217,
    4253,    4423,    9689,    9941,     11213,    19937,    21701,    23209,    44497,
    86243,   110503,  132049,  216091,   756839,   859433,   1257787,  1398269,  2976221,
    3021377, 6972593, 13466917, 20996011, 24036583, 25964951, 30402457, 32582657, 37156667,
    42643801, 43112609, 57885161, 74207281, 77232917, 82589933};

std::optional<std::size_t> mersenne_exponent_of(const BigInt& p) {
    if (p.sign() <= 0) return std::nullopt;
    mpz_class q = p.raw() + 1;
    if (mpz_popcount(q.get_mpz_t()) != 1) return std::nullopt;
    std::size_t e = mpz_sizeinbase(q.get_mpz_t(), 2) - 1;
    if (std::find(kMersenneExponents.begin(), kMersenneExponents.end(), e) == kMersenneExponents.end())
        return std::nullopt;
    return e;
}

}  // namespace

bool is_prime(const BigInt& n) {
    if (n < BigInt(2)) return false;
    // Transport primes are often huge Mersenne primes; a full test there costs seconds.
    if (mersenne_exponent_of(n)) return true;
    return mpz_probab_prime_p(n.raw().get_mpz_t(), 30) > 0;
}

BigInt find_prime_above(const BigInt& bound) {
    if (bound < BigInt(2)) return 2;
    mpz_class r;
    mpz_nextprime(r.get_mpz_t(), bound.raw().get_mpz_t());
    return BigInt(std::move(r));
}

BigInt nth_prime_above(const BigInt& bound, std::uint64_t t) {
    if (t == 0) throw std::invalid_argument("nth_prime_above: t must be >= 1");
    BigInt q = bound;
    for (std::uint64_t i = 0; i < t; ++i) q = find_prime_above(q);
    return q;
}

namespace {

std::uint32_t require_small_prime(const BigInt& p) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic " + p.to_string() + " is not prime");
    if (!p.fits_u64() || p.to_u64() >= (std::uint64_t{1} << 32))
        throw std::invalid_argument("extension fields require p < 2^32");
    return static_cast<std::uint32_t>(p.to_u64());
}

}  // namespace

std::optional<BigInt> mersenne_prime_above(const BigInt& bound) {
    for (auto e : kMersenneExponents) {
        mpz_class m;
        mpz_ui_pow_ui(m.get_mpz_t(), 2, e);
        m -= 1;
        if (cmp(m, bound.raw()) > 0) return BigInt(std::move(m));
    }
    return std::nullopt;
}

std::string FieldDescriptor::to_string() const {
    switch (kind) {
        case FieldKind::rational:
            return "Q";
        case FieldKind::prime:
            return "F_" + p.to_string();
        case FieldKind::extension:
            return "F_" + p.to_string() + "^" + std::to_string(ell);
    }
    return "?";
}

// ---------------------------------------------------------------- PrimeField

PrimeField::PrimeField(BigInt p) : p_(std::move(p)) {
    if (!is_prime(p_)) throw std::invalid_argument("modulus " + p_.to_string() + " is not prime");
    if (auto e = mersenne_exponent_of(p_)) {
        mersenne_ = true;
        mersenne_bits_ = *e;
    }
}

void PrimeField::reduce(mpz_class& x) const {
    if (mersenne_ && sgn(x) >= 0) {
        mpz_class hi;
        while (mpz_sizeinbase(x.get_mpz_t(), 2) > mersenne_bits_) {
            mpz_tdiv_q_2exp(hi.get_mpz_t(), x.get_mpz_t(), mersenne_bits_);
            mpz_tdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), mersenne_bits_);
            x += hi;
        }
        if (cmp(x, p_.raw()) >= 0) x -= p_.raw();
        return;
    }
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), p_.raw().get_mpz_t());
}

PrimeField::Elem PrimeField::from_rational(const BigRat& v) const {
    BigInt d = mod(v.den(), p_);
    if (d.is_zero()) throw std::domain_error("denominator vanishes modulo p");
    return mul(from_bigint(v.num()), inv(d));
}

PrimeField::Elem PrimeField::add(const Elem& a, const Elem& b) const {
    mpz_class s = a.raw() + b.raw();
    if (cmp(s, p_.raw()) >= 0) s -= p_.raw();
    return BigInt(std::move(s));
}

PrimeField::Elem PrimeField::sub(const Elem& a, const Elem& b) const {
    mpz_class s = a.raw() - b.raw();
    if (sgn(s) < 0) s += p_.raw();
    return BigInt(std::move(s));
}

PrimeField::Elem PrimeField::mul(const Elem& a, const Elem& b) const {
    mpz_class s = a.raw() * b.raw();
    reduce(s);
    return BigInt(std::move(s));
}

PrimeField::Elem PrimeField::inv(const Elem& a) const {
    mpz_class r;
    if (a.is_zero() || mpz_invert(r.get_mpz_t(), a.raw().get_mpz_t(), p_.raw().get_mpz_t()) == 0)
        throw std::domain_error("inverse of zero in F_p");
    return BigInt(std::move(r));
}

PrimeField::Elem PrimeField::pow(const Elem& a, std::uint64_t e) const {
    mpz_class r;
    mpz_class ez;
    mpz_import(ez.get_mpz_t(), 1, -1, sizeof e, 0, 0, &e);
    mpz_powm(r.get_mpz_t(), a.raw().get_mpz_t(), ez.get_mpz_t(), p_.raw().get_mpz_t());
    return BigInt(std::move(r));
}

std::vector<PrimeField::Elem> PrimeField::power_sums(const std::vector<Elem>& v, std::size_t d) const {
    std::vector<mpz_class> acc(d);
    mpz_class t;
    for (const auto& x : v) {
        t = x.raw();
        for (std::size_t k = 0; k < d; ++k) {
            if (k > 0) {
                t *= x.raw();
                reduce(t);
            }
            acc[k] += t;
        }
    }
    std::vector<Elem> out;
    out.reserve(d);
    for (auto& a : acc) {
        mpz_mod(a.get_mpz_t(), a.get_mpz_t(), p_.raw().get_mpz_t());
        out.emplace_back(std::move(a));
    }
    return out;
}

// ----------------------------------------------------------- SmallPrimeField

SmallPrimeField::SmallPrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 32)) throw std::invalid_argument("SmallPrimeField requires p < 2^32");
    if (!is_prime(BigInt(static_cast<long long>(p))))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

std::vector<SmallPrimeField::Elem> SmallPrimeField::power_sums(const std::vector<Elem>& v,
                                                              std::size_t d) const {
    std::vector<Elem> out(d, 0);
    for (auto x : v) {
        Elem t = 1;
        for (std::size_t k = 0; k < d; ++k) {
            t = mul(t, x);
            out[k] = add(out[k], t);
        }
    }
    return out;
}

// ------------------------------------------------------------------ ExtField

std::optional<std::size_t> ext_magnitude(const ExtElem& v) {
    if (v.c.empty()) return std::nullopt;
    return v.c.size() - 1;
}

bool binomial_irreducible(std::uint64_t p, std::size_t ell, std::uint64_t c0) {
    c0 %= p;
    if (c0 == 0) return ell == 1;
    if (ell == 1) return true;
    const std::uint64_t a = p - c0;  // x^ell + c0 = x^ell - a
    const std::uint64_t e = multiplicative_order(a, p);
    const std::uint64_t cof = (p - 1) / e;
    for (auto r : prime_factors(ell)) {
        if (e % r != 0 || cof % r == 0) return false;
    }
    if (ell % 4 == 0 && p % 4 != 1) return false;
    return true;
}

std::size_t suggest_ext_degree(std::uint64_t p, std::size_t min_ell) {
    for (std::size_t l = std::max<std::size_t>(min_ell, 1);; ++l) {
        for (std::uint64_t c0 = 1; c0 < p; ++c0)
            if (binomial_irreducible(p, l, c0)) return l;
        if (l > min_ell + 1000000) throw std::runtime_error("no binomial degree found");
    }
}

namespace {

constexpr std::size_t kDenseSearchCap = 128;

bool modulus_irreducible(const CoeffVec& f, std::uint32_t p) {
    std::size_t l = f.size() - 1;
    bool binomial = true;
    for (std::size_t j = 1; j < l; ++j)
        if (f[j] != 0) binomial = false;
    if (binomial) return binomial_irreducible(p, l, f[0]);
    return is_irreducible(f, p);
}

}  // namespace

FieldDescriptor make_ext_field(const BigInt& p, std::size_t ell) {
    if (ell == 0) throw std::invalid_argument("extension degree must be >= 1");
    const std::uint32_t q = require_small_prime(p);
    FieldDescriptor d{FieldKind::extension, p, ell, {}};
    for (std::uint64_t c0 = 1; c0 < q; ++c0) {
        if (binomial_irreducible(q, ell, c0)) {
            d.modulus.assign(ell + 1, 0);
            d.modulus[0] = static_cast<std::uint32_t>(c0);
            d.modulus[ell] = 1;
            return d;
        }
    }
    if (ell > kDenseSearchCap)
        throw std::runtime_error("no irreducible binomial of degree " + std::to_string(ell) + " over F_" +
                                 p.to_string() + " and the dense search is capped at degree " +
                                 std::to_string(kDenseSearchCap));
    CoeffVec f(ell + 1, 0);
    f[ell] = 1;
    f[0] = 1;
    for (;;) {
        // odometer over (c0, ..., c_{ell-1}), c0 least significant and never zero
        std::size_t i = 0;
        for (; i < ell; ++i) {
            if (++f[i] < q) break;
            f[i] = (i == 0) ? 1 : 0;
        }
        if (i == ell) break;
        if (modulus_irreducible(f, q)) {
            d.modulus = f;
            return d;
        }
    }
    throw std::runtime_error("no irreducible polynomial found");
}

ExtField::ExtField(std::uint32_t p, CoeffVec modulus) : p_(p), mod_(std::move(modulus)) {
    require_small_prime(BigInt(static_cast<long long>(p)));
    if (mod_.size() < 2 || mod_.back() != 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
    for (auto c : mod_)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (mod_[0] == 0) throw std::invalid_argument("modulus must have nonzero constant term");
    ell_ = mod_.size() - 1;
    bool binomial = std::all_of(mod_.begin() + 1, mod_.end() - 1, [](auto c) { return c == 0; });
    if (binomial ? !binomial_irreducible(p, ell_, mod_[0])
                 : (ell_ <= kDenseSearchCap && !is_irreducible(mod_, p)))
        throw std::invalid_argument("modulus is reducible");
    // x * (x^{l-1} + f_{l-1} x^{l-2} + ... + f_1) = -f_0
    CoeffVec gi(ell_);
    const std::uint64_t s = p - invmod(mod_[0], p);
    for (std::size_t i = 0; i < ell_; ++i) gi[i] = static_cast<std::uint32_t>(mod_[i + 1] * s % p);
    trim(gi);
    gamma_inv_ = {std::move(gi)};
}

ExtField::ExtField(const FieldDescriptor& d)
    : ExtField(require_small_prime(d.p), CoeffVec(d.modulus.begin(), d.modulus.end())) {
    if (d.kind != FieldKind::extension || d.ell != ell_)
        throw std::invalid_argument("descriptor does not describe an extension field");
}

FieldDescriptor ExtField::descriptor() const {
    return {FieldKind::extension, BigInt(static_cast<long long>(p_)), ell_, mod_};
}

ExtField::Elem ExtField::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    if (r == 0) return {};
    return {{static_cast<std::uint32_t>(r)}};
}

ExtField::Elem ExtField::from_bigint(const BigInt& v) const {
    std::uint64_t r = mod(v, BigInt(static_cast<long long>(p_))).to_u64();
    if (r == 0) return {};
    return {{static_cast<std::uint32_t>(r)}};
}

ExtField::Elem ExtField::from_coeffs(CoeffVec c) const {
    for (auto& x : c) x %= p_;
    return {poly_rem_monic(std::move(c), mod_, p_)};
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
    const CoeffVec& lo = a.c.size() < b.c.size() ? a.c : b.c;
    CoeffVec r = a.c.size() < b.c.size() ? b.c : a.c;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(r[i]) + lo[i];
        r[i] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    trim(r);
    return {std::move(r)};
}

ExtField::Elem ExtField::neg(const Elem& a) const {
    CoeffVec r = a.c;
    for (auto& x : r) x = x == 0 ? 0 : p_ - x;
    return {std::move(r)};
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
    if (a.c.empty() || b.c.empty()) return {};
    return {poly_rem_monic(poly_mul(a.c, b.c, p_), mod_, p_)};
}

ExtField::Elem ExtField::scale(const Elem& a, std::uint64_t s) const {
    s %= p_;
    if (s == 0) return {};
    CoeffVec r = a.c;
    for (auto& x : r) x = static_cast<std::uint32_t>(x * s % p_);
    return {std::move(r)};
}

ExtField::Elem ExtField::inv(const Elem& a) const {
    if (a.c.empty()) throw std::domain_error("inverse of zero in extension field");
    if (a.c.size() == 1) return {{static_cast<std::uint32_t>(invmod(a.c[0], p_))}};
    // Extended Euclid: track s with s * a == r (mod f).
    CoeffVec r0 = mod_, r1 = a.c, s0, s1 = {1};
    while (r1.size() > 1) {
        // polynomial long division r0 = q * r1 + rem
        CoeffVec rem = r0;
        CoeffVec q(r0.size() - r1.size() + 1, 0);
        const std::uint64_t lead_inv = invmod(r1.back(), p_);
        for (std::size_t i = rem.size(); i-- >= r1.size();) {
            std::uint64_t c = rem[i] * lead_inv % p_;
            if (c == 0) continue;
            std::size_t shift = i - (r1.size() - 1);
            q[shift] = static_cast<std::uint32_t>(c);
            for (std::size_t j = 0; j < r1.size(); ++j) {
                std::uint64_t sub = c * r1[j] % p_;
                rem[shift + j] = static_cast<std::uint32_t>((std::uint64_t{rem[shift + j]} + p_ - sub) % p_);
            }
        }
        trim(rem);
        trim(q);
        CoeffVec qs = poly_mul(q, s1, p_);
        CoeffVec ns = s0;
        if (ns.size() < qs.size()) ns.resize(qs.size(), 0);
        for (std::size_t i = 0; i < qs.size(); ++i) ns[i] = static_cast<std::uint32_t>((std::uint64_t{ns[i]} + p_ - qs[i]) % p_);
        trim(ns);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(ns);
    }
    if (r1.empty()) throw std::domain_error("element not invertible (modulus reducible)");
    return scale({poly_rem_monic(std::move(s1), mod_, p_)}, invmod(r1[0], p_));
}

ExtField::Elem ExtField::pow(const Elem& a, std::uint64_t e) const {
    Elem r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return r;
}

ExtField::Elem ExtField::gamma_pow(std::int64_t e) const {
    if (e < 0) return pow(gamma_inv_, static_cast<std::uint64_t>(-e));
    if (static_cast<std::uint64_t>(e) < ell_) {
        CoeffVec c(static_cast<std::size_t>(e) + 1, 0);
        c.back() = 1;
        return {std::move(c)};
    }
    return pow({{0, 1}}, static_cast<std::uint64_t>(e));
}

bool ExtField::less(const Elem& a, const Elem& b) const {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    for (std::size_t i = a.c.size(); i-- > 0;)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

std::string ExtField::to_string(const Elem& a) const {
    if (a.c.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a.c[i]);
    }
    return s;
}

ExtField::Elem ExtField::parse(std::string_view s) const {
    CoeffVec c;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t end = s.find(',', pos);
        if (end == std::string_view::npos) end = s.size();
        auto tok = s.substr(pos, end - pos);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad extension-field element '" + std::string(s) + "'");
        if (v >= p_) throw std::invalid_argument("coefficient out of range in '" + std::string(s) + "'");
        c.push_back(static_cast<std::uint32_t>(v));
        pos = end + 1;
    }
    if (c.size() > ell_) throw std::invalid_argument("element longer than the extension degree");
    trim(c);
    return {std::move(c)};
}

std::vector<ExtField::Elem> ExtField::power_sums(const std::vector<Elem>& v, std::size_t d) const {
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

AnyField make_field(const FieldDescriptor& d) {
    switch (d.kind) {
        case FieldKind::rational:
            return RationalField{};
        case FieldKind::prime:
            return PrimeField(d.p);
        case FieldKind::extension:
            return ExtField(d);
    }
    throw std::invalid_argument("unknown field kind");
}

}  // namespace mssred
