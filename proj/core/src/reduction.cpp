#include "mssred/reduction.hpp"

#include <map>
#include <sstream>

#include "mssred/oracles.hpp"

namespace mssred {

std::string to_string(ElementRole r) {
    switch (r) {
        case ElementRole::a: return "a";
        case ElementRole::b: return "b";
        case ElementRole::x: return "x";
        case ElementRole::y: return "y";
    }
    return "?";
}

std::string to_string(ExtractStatus s) {
    switch (s) {
        case ExtractStatus::no_match: return "no_match";
        case ExtractStatus::assignment: return "assignment";
        case ExtractStatus::soundness_violation: return "soundness_violation";
    }
    return "?";
}

Reduction sat_to_mss(const SatInstance& phi, std::size_t d) {
    if (d < 1) throw std::invalid_argument("sat_to_mss needs d >= 1");
    validate(phi);
    Reduction out;
    auto& art = out.artifacts;
    auto& inst = out.instance;
    art.phi = phi;
    art.classical = sat_to_subset_sum(phi);
    art.d = d;
    const std::size_t n = phi.n, m = phi.m();
    art.nu = static_cast<std::uint64_t>(n) * n;
    art.M = m + art.nu + n + 1;
    art.in_regime = d < 2 || in_proven_regime(n, d);
    if (!art.in_regime)
        art.warning = "d^2 + d >= n: Properties 1 and 2 hold exactly, the bimodality bounds are not guaranteed";

    const BigInt shift = BigInt::pow10(art.nu);
    for (std::size_t t = 1; t <= n; ++t) {
        VariableGadget g;
        g.a = shift * art.classical.a[t - 1];
        g.b = shift * art.classical.b[t - 1];
        if (d >= 2) g.aux = gen_aux_vars(g.a, g.b, {n, d, t});
        art.vars.push_back(std::move(g));
    }

    std::vector<BigRat> reference;  // a_t and X_t for all t
    for (std::size_t t = 1; t <= n; ++t) {
        const auto& g = art.vars[t - 1];
        auto push = [&](const BigRat& v, ElementRole role, std::size_t level, std::size_t j) {
            inst.A.push_back(v);
            art.origin.push_back({t, role, level, j});
        };
        push(g.a, ElementRole::a, 0, 0);
        reference.push_back(g.a);
        if (g.aux)
            for (const auto& l : g.aux->levels)
                for (std::size_t j = 0; j < l.X.size(); ++j) {
                    push(l.X[j], ElementRole::x, l.i, j);
                    reference.push_back(l.X[j]);
                }
        push(g.b, ElementRole::b, 0, 0);
        if (g.aux)
            for (const auto& l : g.aux->levels)
                for (std::size_t j = 0; j < l.Y.size(); ++j) push(l.Y[j], ElementRole::y, l.i, j);
    }

    inst.field = FieldDescriptor::rational();
    inst.k = inst.A.size() / 2;
    inst.targets = power_sums(reference, d);
    inst.targets[0] = shift * art.classical.target;

    try {
        validate_instance(RationalField{}, inst);
    } catch (const std::invalid_argument& e) {
        throw std::logic_error(std::string("internal: reduction produced an invalid instance: ") + e.what());
    }
    return out;
}

Subset encode_assignment(const ReductionArtifacts& art, const Assignment& z) {
    if (z.size() != art.phi.n) throw std::invalid_argument("assignment length differs from n");
    if (!eval_exactly_one(art.phi, z)) throw std::invalid_argument("assignment does not satisfy exactly one literal per clause");
    Subset S;
    for (std::size_t i = 0; i < art.N(); ++i) {
        const auto& o = art.origin[i];
        const bool pos = o.role == ElementRole::a || o.role == ElementRole::x;
        if (pos == static_cast<bool>(z[o.t - 1])) S.push_back(i);
    }
    return S;
}

Subset auxiliary_part(const ReductionArtifacts& art, const Subset& S) {
    Subset out;
    for (auto i : S) {
        if (i >= art.N()) throw std::out_of_range("subset index out of range");
        auto r = art.origin[i].role;
        if (r == ElementRole::x || r == ElementRole::y) out.push_back(i);
    }
    return out;
}

bool PropertyReport::passed(const std::string& prefix) const {
    for (const auto& c : checks)
        if (c.name.compare(0, prefix.size(), prefix) == 0 && !c.passed) return false;
    return true;
}

const Check* PropertyReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

std::string where(std::size_t t, std::size_t i, std::size_t j) {
    std::ostringstream os;
    os << "t=" << t << " i=" << i << " j=" << j;
    return os.str();
}

void fail(Check& c, const std::string& why) {
    if (c.passed) c.detail = why;
    c.passed = false;
}

}  // namespace

PropertyReport verify_properties(const ReductionArtifacts& art, const PropertyOptions& opt) {
    PropertyReport rep;
    rep.in_regime = art.in_regime;
    const std::size_t n = art.phi.n, m = art.phi.m(), d = art.d;
    const std::int64_t nu = static_cast<std::int64_t>(art.nu);
    const std::int64_t nd = static_cast<std::int64_t>(n * d);

    Check p1{"P1", true, "sum X_t = sum Y_t = 0 for all t"};
    Check p2{"P2", true, "a_t^i + sum X_t^i = b_t^i + sum Y_t^i for 2 <= i <= d"};
    Check count{"count", true, ""};
    Check distinct{"distinct", true, "all elements pairwise distinct"};
    Check fact{"fact_bounds", true, "10^nu < |a_t|, |b_t| < 10^(m+n+nu+1)"};
    Check last{"alpha_last_below_2", true, "|alpha_{t,i,i}| < 2"};
    Check tail{"alpha_tail_sum", true, "sum_{r>=2} |alpha_{t,i,r}| < 10^(nu-nd)"};
    Check gap{"pair_gap", true, "|x_{t,i,j} - y_{t,i,j}| = |alpha_{t,i,2}|"};
    Check band{"magnitude_band", true, "|2|x| - 10^f| <= 10^(nu-nd)"};
    Check p4a{"P4_aux_digits", true, "auxiliary numerators and denominators within the digit bound"};
    Check p4b{"P4_target_digits", true, "targets and their denominators within the digit bound"};

    // Everything below the first column of the coupling matrices is the lower part.
    std::vector<AuxValue> aux;
    std::vector<BigRat> all;
    for (std::size_t t = 1; t <= n; ++t) {
        const auto& g = art.vars[t - 1];
        all.push_back(g.a);
        all.push_back(g.b);
        for (const BigInt* v : {&g.a, &g.b}) {
            if (cmp_pow10(*v, nu) != std::strong_ordering::greater ||
                cmp_pow10(*v, static_cast<std::int64_t>(m + n) + nu + 1) != std::strong_ordering::less)
                fail(fact, "t=" + std::to_string(t));
        }
        if (!g.aux) continue;
        const auto& ax = *g.aux;
        const auto xs = ax.X(), ys = ax.Y();
        auto sx = power_sums(xs, d), sy = power_sums(ys, d);
        if (!sx[0].is_zero() || !sy[0].is_zero()) fail(p1, "t=" + std::to_string(t));
        for (std::size_t i = 2; i <= d; ++i)
            if (pow(BigRat(g.a), i) + sx[i - 1] != pow(BigRat(g.b), i) + sy[i - 1])
                fail(p2, "t=" + std::to_string(t) + " i=" + std::to_string(i));

        for (const auto& l : ax.levels) {
            const std::size_t i = l.i;
            const auto cm = coupling_matrices(i);
            const BigRat half_alpha1 = l.alpha[0] / BigRat(2);
            if (!(l.alpha[i - 1].abs() < BigRat(2))) fail(last, where(t, i, 0));
            BigRat tail_sum;
            for (std::size_t r = 1; r < i; ++r) tail_sum += l.alpha[r].abs();
            if (cmp_pow10(tail_sum, nu - nd) != std::strong_ordering::less) fail(tail, where(t, i, 0));
            const BigRat slack = nu - nd >= 0 ? BigRat(BigInt::pow10(static_cast<std::uint64_t>(nu - nd)))
                                              : BigRat(1) / BigRat(BigInt::pow10(static_cast<std::uint64_t>(nd - nu)));
            const BigRat unit = l.alpha[0];
            const BigRat a2 = l.alpha[1].abs();

            const std::uint64_t fact_i = factorial(i).to_u64();
            const BigInt n6 = BigInt(static_cast<long long>(n)).pow(6);
            const BigInt den_e = BigInt(static_cast<long long>(fact_i * fact_i)) * n6;
            if (!den_e.fits_u64()) throw std::overflow_error("digit bound exponent overflow");
            const std::uint64_t den_exp = den_e.to_u64();
            if (cmp_pow10(l.alpha[i - 1].den(), static_cast<std::int64_t>(den_exp)) == std::strong_ordering::greater)
                fail(p4a, "alpha " + where(t, i, 0));

            for (std::size_t j = 0; j < l.X.size(); ++j) {
                const BigRat& x = l.X[j];
                const BigRat& y = l.Y[j];
                if ((x - y).abs() != a2) fail(gap, where(t, i, j));
                for (const BigRat* v : {&x, &y}) {
                    const BigRat dev = (BigRat(2) * v->abs() - unit).abs();
                    if (dev > slack) fail(band, where(t, i, j));
                    if (cmp_pow10(BigRat(v->den()) / BigRat(2), static_cast<std::int64_t>(den_exp)) !=
                            std::strong_ordering::less ||
                        v->num().abs().decimal_digits() > l.f + den_exp + 1)
                        fail(p4a, where(t, i, j));
                }
                aux.push_back({x, BigRat(static_cast<long long>(cm.A[j][0])) * half_alpha1});
                aux.push_back({y, BigRat(static_cast<long long>(cm.B[j][0])) * half_alpha1});
                all.push_back(x);
                all.push_back(y);
            }
        }
    }

    const std::size_t expect_aux = d >= 2 ? n * ((std::size_t{1} << (d + 1)) - 4) : 0;
    count.passed = aux.size() == expect_aux && all.size() == n * ((std::size_t{1} << (d + 1)) - 2) &&
                   art.N() == all.size();
    count.detail = "aux=" + std::to_string(aux.size()) + " expected " + std::to_string(expect_aux) +
                   ", N=" + std::to_string(all.size());

    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) fail(distinct, "repeated value");

    // Target bounds: |B_k| <= 10^{k d! n^6}, den(B_k) <= 10^{k d (d!)^2 n^7}.
    {
        std::vector<BigRat> reference;
        for (const auto& g : art.vars) {
            reference.push_back(g.a);
            if (g.aux)
                for (const auto& x : g.aux->X()) reference.push_back(x);
        }
        auto B = power_sums(reference, d);
        const BigInt dfact = factorial(d);
        const BigInt nn = BigInt(static_cast<long long>(n));
        for (std::size_t k = 1; k <= d; ++k) {
            const BigInt kk = BigInt(static_cast<long long>(k));
            const BigInt mag = kk * dfact * nn.pow(6);
            const BigInt den = kk * BigInt(static_cast<long long>(d)) * dfact * dfact * nn.pow(7);
            if (cmp_pow10(B[k - 1], static_cast<std::int64_t>(mag.to_u64())) == std::strong_ordering::greater ||
                cmp_pow10(B[k - 1].den(), static_cast<std::int64_t>(den.to_u64())) == std::strong_ordering::greater)
                fail(p4b, "k=" + std::to_string(k));
        }
    }

    rep.checks = {p1, p2, count, distinct, fact};
    if (d >= 2) {
        for (auto* c : {&last, &tail, &gap, &band}) rep.checks.push_back(*c);
        BimodalityThresholds th{nu, static_cast<std::int64_t>(m + 2 * n) + nu,
                                static_cast<std::int64_t>(n * n * n * n)};
        SearchBudget budget;
        budget.max_trials = opt.probes;
        budget.seed = opt.seed;
        auto bm = bimodality_probe(aux, th, budget);
        const auto& dc = *bm.decomposition;
        rep.checks.push_back({"P3_regime", art.in_regime, art.in_regime ? "d^2 + d < n" : "outside proven regime"});
        rep.checks.push_back({"P3_upper_divisible", dc.upper_divisible, "z_U divisible by 10^(n^4)/2"});
        rep.checks.push_back({"P3_lower_total", dc.lower_total_small, "sum over all auxiliaries of |z_L| < 10^nu"});
        rep.checks.push_back({"P3_gap", dc.gap_holds, "10^(n^4)/2 - 10^nu > 10^(m+2n+nu)"});
        rep.checks.push_back({"P3_probes", bm.violations == 0,
                              std::to_string(bm.trials) + " probes, " + std::to_string(bm.violations) + " violations"});
    }
    rep.checks.push_back(p4a);
    rep.checks.push_back(p4b);
    return rep;
}

BigInt transport_bound(const MssInstance<BigRat>& inst, BigInt* scale_out) {
    std::vector<BigRat> vals = inst.A;
    vals.insert(vals.end(), inst.targets.begin(), inst.targets.end());
    const BigInt L = common_denominator(vals);
    BigInt maxa = 0;
    for (const auto& a : inst.A) {
        BigInt v = (BigRat(L) * a).num().abs();
        if (v > maxa) maxa = v;
    }
    BigInt maxt = 0, Lj = 1;
    for (const auto& m : inst.targets) {
        Lj *= L;
        BigRat v = BigRat(Lj) * m;
        if (!v.is_integer()) throw std::logic_error("internal: integerized target is not integral");
        if (v.num().abs() > maxt) maxt = v.num().abs();
    }
    const BigInt N = BigInt(static_cast<long long>(inst.A.size()));
    const BigInt md = maxa.pow(inst.d());
    const BigInt b1 = BigInt(2) * (N + BigInt(1)) * md;
    const BigInt b2 = BigInt(2) * (N * md + maxt);
    if (scale_out) *scale_out = L;
    return b1 > b2 ? b1 : b2;
}

namespace {
constexpr std::size_t kNextPrimeBits = 2048;
}

PrimeTransport transport_to_prime_field(const MssInstance<BigRat>& inst, const std::optional<BigInt>& override_p) {
    PrimeTransport out;
    out.bound = transport_bound(inst, &out.scale);
    if (override_p) {
        if (!is_prime(*override_p)) throw std::invalid_argument("override modulus is not prime");
        out.p = *override_p;
    } else if (out.bound.bit_length() <= kNextPrimeBits) {
        out.p = find_prime_above(out.bound);
    } else {
        auto mp = mersenne_prime_above(out.bound);
        if (!mp) throw std::runtime_error("transport bound exceeds the Mersenne prime table");
        out.p = *mp;
        out.mersenne = true;
    }
    PrimeField F(out.p);
    out.instance.field = FieldDescriptor::prime(out.p);
    out.instance.k = inst.k;
    const BigRat L(out.scale);
    for (const auto& a : inst.A) out.instance.A.push_back(F.from_bigint((L * a).num()));
    BigRat Lj = 1;
    for (const auto& m : inst.targets) {
        Lj *= L;
        out.instance.targets.push_back(F.from_bigint((Lj * m).num()));
    }
    return out;
}

LaurentReduction laurent_reduction(const ReductionArtifacts& art, std::uint32_t p) {
    if (!is_prime(BigInt(static_cast<long long>(p)))) throw std::invalid_argument("characteristic must be prime");
    if (p <= art.d) throw std::invalid_argument("characteristic must exceed d");
    if (art.d >= 2 && p == 2) throw std::invalid_argument("characteristic must be odd for d >= 2");
    LaurentRing R(p);
    const auto& phi = art.phi;
    const std::size_t n = phi.n, m = phi.m(), d = art.d;
    const std::int64_t nu = static_cast<std::int64_t>(art.nu);

    LaurentReduction out;
    std::vector<LaurentPoly> reference;
    for (std::size_t t = 1; t <= n; ++t) {
        auto literal_poly = [&](Literal lit) {
            LaurentPoly v = R.monomial(nu + static_cast<std::int64_t>(m + t) - 1);
            for (std::size_t j = 1; j <= m; ++j) {
                int occ = occurrences(phi.clauses[j - 1], lit);
                if (occ) v = R.add(v, R.monomial(nu + static_cast<std::int64_t>(j) - 1, static_cast<std::uint32_t>(occ)));
            }
            return v;
        };
        const LaurentPoly a = literal_poly(static_cast<Literal>(t));
        const LaurentPoly b = literal_poly(-static_cast<Literal>(t));
        std::optional<AuxConstruction<LaurentPoly>> aux;
        if (d >= 2) aux = build_aux(R, a, b, {n, d, t}, art.vars[t - 1].aux->nu_t);
        out.A.push_back(a);
        reference.push_back(a);
        if (aux)
            for (const auto& x : aux->X()) {
                out.A.push_back(x);
                reference.push_back(x);
            }
        out.A.push_back(b);
        if (aux)
            for (const auto& y : aux->Y()) out.A.push_back(y);
    }
    if (out.A.size() != art.N()) throw std::logic_error("internal: Laurent rebuild changed the element count");

    out.targets = R.power_sums(reference, d);
    LaurentPoly b1;
    for (std::int64_t e = nu; e < nu + static_cast<std::int64_t>(m + n); ++e) b1 = R.add(b1, R.monomial(e));
    out.targets[0] = b1;

    std::int64_t minval = 0, maxdeg = 0;
    for (const auto& v : out.A) {
        if (v.is_zero()) throw std::logic_error("internal: zero element in the Laurent rebuild");
        minval = std::min(minval, *v.valuation());
        maxdeg = std::max(maxdeg, *v.degree());
    }
    out.h = -minval;
    out.ell_min = d * static_cast<std::size_t>(maxdeg + out.h) + 1;
    return out;
}

ExtTransport transport_to_ext_field(const ReductionArtifacts& art, std::uint32_t p, std::size_t ell) {
    auto lr = laurent_reduction(art, p);
    if (ell < lr.ell_min)
        throw std::invalid_argument("extension degree " + std::to_string(ell) + " below the required minimum " +
                                    std::to_string(lr.ell_min));
    ExtTransport out;
    out.h = lr.h;
    out.ell_min = lr.ell_min;
    const auto desc = make_ext_field(BigInt(static_cast<long long>(p)), ell);
    ExtField F(desc);
    auto embed = [&](const LaurentPoly& v) {
        if (v.is_zero()) return F.zero();
        CoeffVec c(static_cast<std::size_t>(v.low + out.h), 0);
        c.insert(c.end(), v.c.begin(), v.c.end());
        return F.from_coeffs(std::move(c));
    };
    out.instance.field = desc;
    out.instance.k = art.N() / 2;
    std::vector<ExtElem> reference;
    for (std::size_t i = 0; i < art.N(); ++i) {
        out.instance.A.push_back(embed(lr.A[i]));
        auto r = art.origin[i].role;
        if (r == ElementRole::a || r == ElementRole::x) reference.push_back(out.instance.A.back());
    }
    out.instance.targets = F.power_sums(reference, art.d);
    out.instance.targets[0] = embed(lr.targets[0]);
    try {
        validate_instance(F, out.instance);
    } catch (const std::invalid_argument& e) {
        throw std::logic_error(std::string("internal: transported instance is invalid: ") + e.what());
    }
    return out;
}

}  // namespace mssred
