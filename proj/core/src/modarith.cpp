#include "mssred/modarith.hpp"

#include <algorithm>
#include <bit>

#include <gmp.h>

namespace mssred {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("order of zero");
    std::uint64_t e = p - 1;
    for (auto q : prime_factors(p - 1)) {
        while (e % q == 0 && powmod(a, e / q, p) == 1) e /= q;
    }
    return e;
}

void trim(CoeffVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

namespace {

CoeffVec schoolbook(const std::uint32_t* a, std::size_t na, const std::uint32_t* b, std::size_t nb,
                    std::uint32_t p) {
    std::vector<std::uint64_t> acc(na + nb - 1, 0);
    const std::uint64_t pm = p - 1;
    const std::uint64_t lim = UINT64_MAX - pm * pm;
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        const std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < nb; ++j) {
            std::uint64_t& s = acc[i + j];
            if (s > lim) s %= p;
            s += ai * b[j];
        }
    }
    CoeffVec out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint32_t>(acc[i] % p);
    return out;
}

void pack(const std::uint32_t* a, std::size_t n, unsigned w, std::vector<std::uint64_t>& words) {
    words.assign((n * w + 63) / 64 + 2, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        std::size_t pos = i * w;
        std::size_t q = pos / 64;
        unsigned off = pos % 64;
        words[q] |= static_cast<std::uint64_t>(a[i]) << off;
        if (off > 32) words[q + 1] |= static_cast<std::uint64_t>(a[i]) >> (64 - off);
    }
}

CoeffVec kronecker(const std::uint32_t* a, std::size_t na, const std::uint32_t* b, std::size_t nb,
                   std::uint32_t p) {
    const std::uint64_t pm = p - 1;
    const unsigned __int128 bound = static_cast<unsigned __int128>(pm * pm) * std::min(na, nb);
    unsigned w = 1;
    while (w < 127 && (static_cast<unsigned __int128>(1) << w) <= bound) ++w;

    std::vector<std::uint64_t> wa, wb;
    pack(a, na, w, wa);
    pack(b, nb, w, wb);
    mpz_t za, zb, zc;
    mpz_inits(za, zb, zc, nullptr);
    mpz_import(za, wa.size(), -1, sizeof(std::uint64_t), 0, 0, wa.data());
    mpz_import(zb, wb.size(), -1, sizeof(std::uint64_t), 0, 0, wb.data());
    mpz_mul(zc, za, zb);

    const std::size_t nc = na + nb - 1;
    std::vector<std::uint64_t> wc((nc * w + 63) / 64 + 3, 0);
    std::size_t count = 0;
    mpz_export(wc.data(), &count, -1, sizeof(std::uint64_t), 0, 0, zc);
    mpz_clears(za, zb, zc, nullptr);

    CoeffVec out(nc);
    const unsigned __int128 mask = (static_cast<unsigned __int128>(1) << w) - 1;
    for (std::size_t i = 0; i < nc; ++i) {
        std::size_t pos = i * w;
        std::size_t q = pos / 64;
        unsigned off = pos % 64;
        unsigned __int128 v = wc[q] | (static_cast<unsigned __int128>(wc[q + 1]) << 64);
        v >>= off;
        if (off > 0) v |= static_cast<unsigned __int128>(wc[q + 2]) << (128 - off);
        v &= mask;
        out[i] = static_cast<std::uint32_t>(v % p);
    }
    return out;
}

}  // namespace

CoeffVec poly_mul(const std::uint32_t* a, std::size_t na, const std::uint32_t* b, std::size_t nb,
                  std::uint32_t p) {
    if (na == 0 || nb == 0) return {};
    if (std::min(na, nb) < 48) return schoolbook(a, na, b, nb, p);
    return kronecker(a, na, b, nb, p);
}

CoeffVec poly_rem_monic(CoeffVec a, const CoeffVec& f, std::uint32_t p) {
    const std::size_t l = f.size() - 1;
    if (a.size() <= l) {
        trim(a);
        return a;
    }
    std::vector<std::pair<std::size_t, std::uint32_t>> tail;
    for (std::size_t j = 0; j < l; ++j)
        if (f[j] != 0) tail.emplace_back(j, f[j]);
    for (std::size_t i = a.size() - 1; i >= l; --i) {
        const std::uint64_t c = a[i];
        if (c != 0) {
            for (auto [j, t] : tail) {
                std::uint64_t sub = c * t % p;
                std::uint32_t& dst = a[i - l + j];
                dst = static_cast<std::uint32_t>((static_cast<std::uint64_t>(dst) + p - sub) % p);
            }
        }
        if (i == l) break;
    }
    a.resize(l);
    trim(a);
    return a;
}

CoeffVec poly_rem(CoeffVec a, const CoeffVec& b, std::uint32_t p) {
    CoeffVec m = b;
    trim(m);
    if (m.empty()) throw std::domain_error("polynomial division by zero");
    std::uint64_t inv = invmod(m.back(), p);
    for (auto& c : m) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * inv % p);
    return poly_rem_monic(std::move(a), m, p);
}

CoeffVec poly_gcd(CoeffVec a, CoeffVec b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        CoeffVec r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::uint64_t inv = invmod(a.back(), p);
        for (auto& c : a) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * inv % p);
    }
    return a;
}

bool is_irreducible(const CoeffVec& f, std::uint32_t p) {
    const std::size_t l = f.size() - 1;
    if (l == 1) return true;
    if (f[0] == 0) return false;
    CoeffVec x = {0, 1};
    CoeffVec h = x;
    for (std::size_t i = 1; i <= l / 2; ++i) {
        // h <- h^p mod f
        CoeffVec base = h, acc = {1};
        for (std::uint64_t e = p; e; e >>= 1) {
            if (e & 1) acc = poly_rem_monic(poly_mul(acc, base, p), f, p);
            if (e > 1) base = poly_rem_monic(poly_mul(base, base, p), f, p);
        }
        h = acc;
        CoeffVec diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(diff[1]) + p - 1) % p);
        trim(diff);
        CoeffVec g = poly_gcd(diff, f, p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace mssred
