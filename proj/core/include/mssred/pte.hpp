#ifndef MSSRED_PTE_HPP
#define MSSRED_PTE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <type_traits>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mssred/exactnum.hpp"
#include "mssred/fields.hpp"

namespace mssred {

inline constexpr std::size_t kMaxCouplingDegree = 20;

/// A_i and B_i, each 2^{i-1} rows by i columns with entries in {-1, +1}.
struct CouplingMatrices {
    std::size_t i = 0;
    std::vector<std::vector<int>> A, B;
};

/// Throws std::invalid_argument for i < 2 or i > kMaxCouplingDegree.
CouplingMatrices coupling_matrices(std::size_t i);

/// The rationals with base 10, for the gadget builder.
struct DecimalRing {
    using Elem = BigRat;
    Elem from_bigint(const BigInt& v) const { return v; }
    Elem zero() const { return {}; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem pow(const Elem& a, std::uint64_t e) const { return mssred::pow(a, e); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool less(const Elem& a, const Elem& b) const { return a < b; }
    Elem base_pow(std::uint64_t e) const { return BigInt::pow10(e); }
    Elem div_base_pow(const Elem& a, std::uint64_t e) const { return a / BigRat(BigInt::pow10(e)); }
    Elem div_small(const Elem& a, std::uint64_t k) const {
        return a / BigRat(BigInt(static_cast<long long>(k)));
    }
    std::vector<Elem> power_sums(const std::vector<Elem>& v, std::size_t d) const {
        return mssred::power_sums(v, d);
    }
};

/// X = A_i alpha / 2 and Y = B_i alpha / 2.
template <class Ring>
std::pair<std::vector<typename Ring::Elem>, std::vector<typename Ring::Elem>> apply_coupling(
    const Ring& ring, const CouplingMatrices& cm, const std::vector<typename Ring::Elem>& alpha) {
    using E = typename Ring::Elem;
    if (alpha.size() != cm.i) throw std::invalid_argument("alpha length differs from the coupling degree");
    auto combine = [&](const std::vector<std::vector<int>>& M) {
        std::vector<E> out;
        out.reserve(M.size());
        for (const auto& row : M) {
            E s = ring.zero();
            for (std::size_t r = 0; r < cm.i; ++r) s = row[r] > 0 ? ring.add(s, alpha[r]) : ring.sub(s, alpha[r]);
            out.push_back(ring.div_small(s, 2));
        }
        return out;
    };
    return {combine(cm.A), combine(cm.B)};
}

struct AtomicResult {
    std::vector<BigRat> X, Y;
    BigRat alpha_i;
};

/// Solves one coupling level for residual R with the given i-1 nonzero scales.
AtomicResult atomic_solve(std::size_t i, const BigRat& R, const std::vector<BigRat>& scales);

/// Values that the SAT reduction threads into the gadget.
struct GadgetParams {
    std::size_t n = 1;
    std::size_t d = 2;
    std::size_t t = 1;
};

/// True iff d^2 + d < n, where the bimodality bounds are proven.
inline bool in_proven_regime(std::size_t n, std::size_t d) { return d * d + d < n; }

/// nu_t: the t-th prime greater than n^4.
std::uint64_t gadget_nu(std::size_t n, std::size_t t);
inline std::uint64_t gadget_f(std::uint64_t nu_t, std::size_t i) {
    return factorial(i - 1).to_u64() * nu_t;
}
inline std::uint64_t gadget_g(std::size_t t, std::size_t d, std::size_t i, std::size_t r) {
    return (t - 1) * d * d + (i - 1) * i + r;
}

template <class E>
struct GadgetLevel {
    std::size_t i = 0;
    std::uint64_t f = 0;           // alpha_1 = base^f
    std::vector<std::uint64_t> g;  // alpha_r = base^{g[r-2]} for 1 < r < i
    std::vector<E> alpha;          // alpha_1..alpha_i
    E residual;
    std::vector<E> X, Y;
};

template <class E>
struct AuxConstruction {
    E a, b;
    std::size_t n = 0, d = 0, t = 0;
    std::uint64_t nu_t = 0;
    bool in_regime = true;
    std::string warning;
    std::vector<GadgetLevel<E>> levels;  // i = 2..d

    std::vector<E> X() const {
        std::vector<E> out;
        for (const auto& l : levels) out.insert(out.end(), l.X.begin(), l.X.end());
        return out;
    }
    std::vector<E> Y() const {
        std::vector<E> out;
        for (const auto& l : levels) out.insert(out.end(), l.Y.begin(), l.Y.end());
        return out;
    }
};

/// Auxiliary-variable generator over any ring exposing the gadget interface
/// (base_pow, div_base_pow, div_small, power_sums).
template <class Ring>
AuxConstruction<typename Ring::Elem> build_aux(const Ring& ring, const typename Ring::Elem& a,
                                               const typename Ring::Elem& b, const GadgetParams& prm,
                                               std::uint64_t nu_t) {
    using E = typename Ring::Elem;
    if (prm.d < 2) throw std::invalid_argument("gadget needs d >= 2");
    if (prm.d > kMaxCouplingDegree) throw std::invalid_argument("gadget degree above supported maximum");
    if (prm.t < 1 || prm.t > prm.n) throw std::invalid_argument("gadget index t must lie in [1, n]");
    AuxConstruction<E> out;
    out.a = a;
    out.b = b;
    out.n = prm.n;
    out.d = prm.d;
    out.t = prm.t;
    out.nu_t = nu_t;
    out.in_regime = in_proven_regime(prm.n, prm.d);
    if (!out.in_regime)
        out.warning = "d^2 + d >= n: Properties 1 and 2 hold exactly, the bimodality bounds are not guaranteed";

    const std::size_t d = prm.d;
    // contrib[k] accumulates sum X^k - sum Y^k over the levels built so far.
    std::vector<E> contrib(d + 1, ring.zero());
    const std::vector<E> pa = ring.power_sums({a}, d), pb = ring.power_sums({b}, d);
    for (std::size_t i = 2; i <= d; ++i) {
        GadgetLevel<E> lvl;
        lvl.i = i;
        lvl.f = gadget_f(nu_t, i);
        lvl.residual = ring.sub(ring.sub(pb[i - 1], pa[i - 1]), contrib[i]);
        std::uint64_t exp_sum = lvl.f;
        lvl.alpha.push_back(ring.base_pow(lvl.f));
        for (std::size_t r = 2; r < i; ++r) {
            lvl.g.push_back(gadget_g(prm.t, d, i, r));
            exp_sum += lvl.g.back();
            lvl.alpha.push_back(ring.base_pow(lvl.g.back()));
        }
        lvl.alpha.push_back(ring.div_base_pow(ring.div_small(lvl.residual, factorial(i).to_u64()), exp_sum));
        auto [X, Y] = apply_coupling(ring, coupling_matrices(i), lvl.alpha);
        lvl.X = std::move(X);
        lvl.Y = std::move(Y);
        if (i < d) {
            auto sx = ring.power_sums(lvl.X, d), sy = ring.power_sums(lvl.Y, d);
            for (std::size_t k = i + 1; k <= d; ++k) contrib[k] = ring.add(contrib[k], ring.sub(sx[k - 1], sy[k - 1]));
        }
        out.levels.push_back(std::move(lvl));
    }
    return out;
}

/// Algorithm-2 gadget over the rationals for variable t.
AuxConstruction<BigRat> gen_aux_vars(const BigRat& a, const BigRat& b, const GadgetParams& prm);

template <class E>
struct PteWitness {
    std::vector<E> X, Y;
    std::size_t d = 0;
    std::optional<std::pair<E, E>> ab;
};

struct PteOptions {
    std::size_t n_surrogate = 0;  // 0 selects the smallest n with d^2 + d < n
    std::size_t t = 1;
};

inline std::size_t default_surrogate_n(std::size_t d) { return d * d + d + 1; }

struct InhomogeneousPte {
    PteWitness<BigRat> witness;
    AuxConstruction<BigRat> aux;
};

/// Witness with a^i + sum X^i = b^i + sum Y^i for 2 <= i <= d and sum X = sum Y.
InhomogeneousPte solve_inhomogeneous_pte(const BigRat& a, const BigRat& b, std::size_t d,
                                         const PteOptions& opt = {});

/// Thue-Morse split of {0, ..., 2^{k+1} - 1}.
PteWitness<BigRat> prouhet_pte(std::size_t k);

struct PteReport {
    std::vector<bool> degree_ok;  // index j - 1 for degree j
    bool distinct = true;
    bool ok() const { return std::all_of(degree_ok.begin(), degree_ok.end(), [](bool b) { return b; }); }
};

template <class F>
PteReport verify_pte(const F& field, const PteWitness<typename F::Elem>& w) {
    PteReport rep;
    if (w.X.size() != w.Y.size()) {
        rep.degree_ok.assign(w.d, false);
    } else {
        auto sx = field.power_sums(w.X, w.d), sy = field.power_sums(w.Y, w.d);
        for (std::size_t j = 1; j <= w.d; ++j) {
            auto lhs = sx[j - 1], rhs = sy[j - 1];
            if (w.ab && j >= 2) {
                lhs = field.add(lhs, field.pow(w.ab->first, j));
                rhs = field.add(rhs, field.pow(w.ab->second, j));
            }
            rep.degree_ok.push_back(field.eq(lhs, rhs));
        }
    }
    std::vector<typename F::Elem> all = w.X;
    all.insert(all.end(), w.Y.begin(), w.Y.end());
    if constexpr (std::is_same_v<typename F::Elem, BigRat>) {
        // Canonical pairs: equality only needs some total order, so skip cross-multiplying.
        std::sort(all.begin(), all.end(), [](const BigRat& x, const BigRat& y) {
            if (int c = mpz_cmp(x.den_raw().get_mpz_t(), y.den_raw().get_mpz_t())) return c < 0;
            return mpz_cmp(x.num_raw().get_mpz_t(), y.num_raw().get_mpz_t()) < 0;
        });
    } else {
        std::sort(all.begin(), all.end(), [&](const auto& x, const auto& y) { return field.less(x, y); });
    }
    for (std::size_t i = 1; i < all.size(); ++i)
        if (field.eq(all[i - 1], all[i])) rep.distinct = false;
    return rep;
}

inline PteReport verify_pte(const PteWitness<BigRat>& w) { return verify_pte(RationalField{}, w); }

// ------------------------------------------------------------------ sampler

/// Uniform element via rejection sampling on 64-bit draws (portable across platforms).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
std::uint64_t random_element(const SmallPrimeField& F, std::mt19937_64& rng);
BigInt random_element(const PrimeField& F, std::mt19937_64& rng);
ExtElem random_element(const ExtField& F, std::mt19937_64& rng);

/// Cardinality of a finite field.
BigInt field_size(const SmallPrimeField& F);
BigInt field_size(const PrimeField& F);
BigInt field_size(const ExtField& F);

struct SamplerOptions {
    bool mirror = false;     // y is a copy of x
    bool count_all = false;  // keep sampling after the first hit
};

template <class E>
struct SampleResult {
    std::optional<PteWitness<E>> witness;
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
    double rate() const { return trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0; }
};

/// Finds x, y in F^s with sum x^j - sum y^j = r_j for j = 1..d by uniform sampling.
template <class F>
SampleResult<typename F::Elem> sample_pte_over_fq(const F& field, const std::vector<typename F::Elem>& r,
                                                  std::size_t s, std::uint64_t max_trials, std::uint64_t seed,
                                                  const SamplerOptions& opt = {}) {
    using E = typename F::Elem;
    const std::size_t d = r.size();
    if (BigInt(static_cast<long long>(d)) > field_size(field))
        throw std::invalid_argument("sampler precondition: d exceeds the field size");
    if (d == 0) throw std::invalid_argument("sampler needs at least one residual");
    if (s < d) throw std::invalid_argument("sampler precondition: s >= d");
    std::mt19937_64 rng(seed);
    SampleResult<E> res;
    std::vector<E> x(s), y(s), acc(d);
    for (std::uint64_t trial = 0; trial < max_trials; ++trial) {
        for (auto& v : x) v = random_element(field, rng);
        if (opt.mirror)
            y = x;
        else
            for (auto& v : y) v = random_element(field, rng);
        ++res.trials;
        auto sx = field.power_sums(x, d), sy = field.power_sums(y, d);
        bool hit = true;
        for (std::size_t j = 0; j < d && hit; ++j) hit = field.eq(field.sub(sx[j], sy[j]), r[j]);
        if (hit) {
            ++res.hits;
            if (!res.witness) res.witness = PteWitness<E>{x, y, d, std::nullopt};
            if (!opt.count_all) break;
        }
    }
    return res;
}

}  // namespace mssred

#endif
