#include "mssred/oracles.hpp"

namespace mssred {

void check_budget(std::size_t n, std::size_t k, const SearchBudget& budget) {
    if (k > n) return;
    BigInt need = binomial(n, k);
    if (need > BigInt(static_cast<long long>(std::min<std::uint64_t>(budget.max_subsets, INT64_MAX))))
        throw BudgetExceeded(need);
}

namespace detail {

std::uint64_t fp_reduce(const BigInt& v) {
    static const mpz_class P = [] {
        mpz_class p = 1;
        p <<= 61;
        return mpz_class(p - 1);
    }();
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.raw().get_mpz_t(), P.get_mpz_t());
    return mpz_get_ui(r.get_mpz_t());
}

}  // namespace detail

bool outside_band(const BigRat& sum, const BimodalityThresholds& th) {
    return cmp_pow10(sum, th.lo_exp) == std::strong_ordering::less ||
           cmp_pow10(sum, th.hi_exp) == std::strong_ordering::greater;
}

namespace {

BigInt pow10_signed_scale(const BigInt& L, std::int64_t e, BigInt& num_scale) {
    // Returns L * 10^e as numerator over num_scale so that negative e stays integral.
    if (e >= 0) {
        num_scale = 1;
        return L * BigInt::pow10(static_cast<std::uint64_t>(e));
    }
    num_scale = BigInt::pow10(static_cast<std::uint64_t>(-e));
    return L;
}

}  // namespace

BimodalityReport bimodality_probe(const std::vector<AuxValue>& aux, const BimodalityThresholds& th,
                                  const SearchBudget& budget) {
    BimodalityReport rep;

    DecompositionCheck dc;
    const BigRat unit = BigRat(BigInt::pow10(static_cast<std::uint64_t>(std::max<std::int64_t>(0, th.unit_exp)))) /
                        BigRat(2);
    BigRat lower_total;
    for (const auto& a : aux) {
        if (!(a.upper / unit).is_integer()) dc.upper_divisible = false;
        lower_total += (a.value - a.upper).abs();
    }
    dc.lower_total_small = cmp_pow10(lower_total, th.lo_exp) == std::strong_ordering::less;
    dc.gap_holds = cmp_pow10(unit - BigRat(BigInt::pow10(static_cast<std::uint64_t>(std::max<std::int64_t>(0, th.lo_exp)))),
                             th.hi_exp) == std::strong_ordering::greater;
    rep.decomposition = dc;

    // Integerize once so each probe is a plain integer sum.
    std::vector<BigRat> vals;
    vals.reserve(aux.size());
    for (const auto& a : aux) vals.push_back(a.value);
    const BigInt L = common_denominator(vals);
    std::vector<mpz_class> ints;
    ints.reserve(aux.size());
    for (const auto& v : vals) ints.push_back((BigRat(L) * v).num().raw());
    BigInt lo_scale, hi_scale;
    const mpz_class lo = pow10_signed_scale(L, th.lo_exp, lo_scale).raw();
    const mpz_class hi = pow10_signed_scale(L, th.hi_exp, hi_scale).raw();

    std::mt19937_64 rng(budget.seed);
    std::vector<std::size_t> pick;
    for (std::uint64_t trial = 0; trial < budget.max_trials; ++trial) {
        mpz_class s = 0;
        pick.clear();
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < ints.size(); ++i) {
            if (i % 64 == 0) bits = rng();
            if ((bits >> (i % 64)) & 1) {
                s += ints[i];
                pick.push_back(i);
            }
        }
        mpz_class a = abs(s);
        // |sum| * scale compared against L * 10^e.
        const mpz_class a_lo = a * lo_scale.raw(), a_hi = a * hi_scale.raw();
        ++rep.trials;
        if (a_lo < lo) {
            ++rep.tiny;
        } else if (a_hi > hi) {
            ++rep.huge;
        } else {
            ++rep.violations;
            if (!rep.first_violation) rep.first_violation = pick;
        }
    }
    return rep;
}

}  // namespace mssred
