#include "mssred/pte.hpp"

#include <bit>

namespace mssred {

CouplingMatrices coupling_matrices(std::size_t i) {
    if (i < 2) throw std::invalid_argument("coupling matrices need i >= 2");
    if (i > kMaxCouplingDegree) throw std::invalid_argument("coupling degree above supported maximum");
    CouplingMatrices cm;
    cm.i = 2;
    cm.A = {{1, 1}, {-1, -1}};
    cm.B = {{1, -1}, {-1, 1}};
    while (cm.i < i) {
        std::vector<std::vector<int>> A, B;
        A.reserve(2 * cm.A.size());
        B.reserve(2 * cm.A.size());
        auto with = [](std::vector<int> row, int v) {
            row.push_back(v);
            return row;
        };
        for (const auto& r : cm.A) A.push_back(with(r, 1));
        for (const auto& r : cm.B) A.push_back(with(r, -1));
        for (const auto& r : cm.B) B.push_back(with(r, 1));
        for (const auto& r : cm.A) B.push_back(with(r, -1));
        cm.A = std::move(A);
        cm.B = std::move(B);
        ++cm.i;
    }
    return cm;
}

AtomicResult atomic_solve(std::size_t i, const BigRat& R, const std::vector<BigRat>& scales) {
    if (i < 2) throw std::invalid_argument("atomic_solve needs i >= 2");
    if (scales.size() + 1 != i) throw std::invalid_argument("atomic_solve needs i - 1 scales");
    BigRat prod = factorial(i);
    for (const auto& s : scales) {
        if (s.is_zero()) throw std::invalid_argument("atomic_solve: zero scale");
        prod = prod * s;
    }
    AtomicResult out;
    out.alpha_i = R / prod;
    std::vector<BigRat> alpha = scales;
    alpha.push_back(out.alpha_i);
    auto [X, Y] = apply_coupling(DecimalRing{}, coupling_matrices(i), alpha);
    out.X = std::move(X);
    out.Y = std::move(Y);
    return out;
}

std::uint64_t gadget_nu(std::size_t n, std::size_t t) {
    if (n == 0 || t == 0) throw std::invalid_argument("gadget_nu needs n, t >= 1");
    BigInt n4 = BigInt(static_cast<long long>(n)).pow(4);
    BigInt p = nth_prime_above(n4, t);
    if (!p.fits_u64()) throw std::overflow_error("nu_t does not fit in 64 bits");
    return p.to_u64();
}

AuxConstruction<BigRat> gen_aux_vars(const BigRat& a, const BigRat& b, const GadgetParams& prm) {
    return build_aux(DecimalRing{}, a, b, prm, gadget_nu(prm.n, prm.t));
}

InhomogeneousPte solve_inhomogeneous_pte(const BigRat& a, const BigRat& b, std::size_t d, const PteOptions& opt) {
    if (d < 2) throw std::invalid_argument("solve_inhomogeneous_pte needs d >= 2");
    GadgetParams prm{opt.n_surrogate ? opt.n_surrogate : default_surrogate_n(d), d, opt.t};
    InhomogeneousPte out{{}, gen_aux_vars(a, b, prm)};
    out.witness.X = out.aux.X();
    out.witness.Y = out.aux.Y();
    out.witness.d = d;
    out.witness.ab = std::make_pair(a, b);
    return out;
}

PteWitness<BigRat> prouhet_pte(std::size_t k) {
    if (k < 1) throw std::invalid_argument("prouhet_pte needs k >= 1");
    if (k > 24) throw std::invalid_argument("prouhet_pte: k too large");
    PteWitness<BigRat> w;
    w.d = k;
    const std::uint64_t top = std::uint64_t{1} << (k + 1);
    for (std::uint64_t v = 0; v < top; ++v)
        (std::popcount(v) % 2 == 0 ? w.X : w.Y).push_back(BigInt(static_cast<long long>(v)));
    return w;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
    // Reject the top partial block so every residue has equal weight.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        std::uint64_t v = rng();
        if (v < limit) return v % bound;
    }
}

std::uint64_t random_element(const SmallPrimeField& F, std::mt19937_64& rng) { return uniform_below(rng, F.p()); }

BigInt random_element(const PrimeField& F, std::mt19937_64& rng) {
    const std::size_t bits = F.p().bit_length();
    for (;;) {
        mpz_class v = 0;
        for (std::size_t got = 0; got < bits; got += 64) {
            v <<= 64;
            std::uint64_t w = rng();
            v += mpz_class(static_cast<unsigned long>(w >> 32)) * mpz_class(4294967296UL) +
                 mpz_class(static_cast<unsigned long>(w & 0xffffffffULL));
        }
        const std::size_t extra = ((bits + 63) / 64) * 64 - bits;
        v >>= static_cast<unsigned long>(extra);
        BigInt r(v);
        if (r < F.p()) return r;
    }
}

ExtElem random_element(const ExtField& F, std::mt19937_64& rng) {
    CoeffVec c(F.degree());
    for (auto& x : c) x = static_cast<std::uint32_t>(uniform_below(rng, F.p()));
    return F.from_coeffs(std::move(c));
}

BigInt field_size(const SmallPrimeField& F) { return F.characteristic(); }
BigInt field_size(const PrimeField& F) { return F.p(); }
BigInt field_size(const ExtField& F) { return F.characteristic().pow(F.degree()); }

}  // namespace mssred
