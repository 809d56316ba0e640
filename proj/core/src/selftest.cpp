#include "mssred/selftest.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "mssred/fields.hpp"
#include "mssred/oracles.hpp"
#include "mssred/pte.hpp"
#include "mssred/reduction.hpp"
#include "mssred/rscodes.hpp"

namespace mssred {

SatInstance planted_sat(std::size_t n, std::size_t m, std::mt19937_64& rng) {
    if (n == 0 || 3 * m < n) throw std::invalid_argument("planted_sat: every variable must be able to occur");
    std::uniform_int_distribution<int> var(1, static_cast<int>(n));
    std::uniform_int_distribution<int> slot(0, 2);
    std::bernoulli_distribution coin(0.5);
    for (;;) {
        Assignment z(n);
        for (std::size_t t = 0; t < n; ++t) z[t] = coin(rng);
        auto lit = [&](bool truth) {
            int v = var(rng);
            bool val = z[static_cast<std::size_t>(v - 1)];
            return val == truth ? v : -v;
        };
        SatInstance phi;
        phi.n = n;
        while (phi.clauses.size() < m) {
            Clause c;
            const int hot = slot(rng);
            for (int s = 0; s < 3; ++s) c[static_cast<std::size_t>(s)] = lit(s == hot);
            bool ok = true;
            for (auto a : c)
                for (auto b : c) ok = ok && a != -b;
            if (ok) phi.clauses.push_back(c);
        }
        std::vector<bool> seen(n + 1, false);
        for (const auto& c : phi.clauses)
            for (auto l : c) seen[static_cast<std::size_t>(std::abs(l))] = true;
        if (std::count(seen.begin() + 1, seen.end(), true) == static_cast<long>(n)) return phi;
    }
}

std::vector<SatInstance> all_formulas(std::size_t n, std::size_t m) {
    std::vector<int> lits;
    for (int v = -static_cast<int>(n); v <= static_cast<int>(n); ++v)
        if (v != 0) lits.push_back(v);
    std::vector<Clause> clauses;
    for (std::size_t i = 0; i < lits.size(); ++i)
        for (std::size_t j = i; j < lits.size(); ++j)
            for (std::size_t k = j; k < lits.size(); ++k) {
                Clause c{lits[i], lits[j], lits[k]};
                if (c[0] == -c[1] || c[0] == -c[2] || c[1] == -c[2]) continue;
                clauses.push_back(c);
            }
    std::vector<SatInstance> out;
    std::vector<std::size_t> idx(m, 0);
    for (;;) {
        SatInstance phi;
        phi.n = n;
        std::vector<bool> seen(n + 1, false);
        for (auto i : idx) {
            phi.clauses.push_back(clauses[i]);
            for (auto l : clauses[i]) seen[static_cast<std::size_t>(std::abs(l))] = true;
        }
        if (std::count(seen.begin() + 1, seen.end(), true) == static_cast<long>(n)) out.push_back(std::move(phi));
        // Next non-decreasing index tuple.
        std::size_t p = m;
        while (p > 0 && idx[p - 1] + 1 == clauses.size()) --p;
        if (p == 0) break;
        ++idx[p - 1];
        for (std::size_t q = p; q < m; ++q) idx[q] = idx[p - 1];
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed = true;
    std::string detail;
    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

BigRat random_nonzero_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-1000, 1000), den(1, 1000);
    long long a = 0;
    while (a == 0) a = num(rng);
    return BigRat::normalize(a, den(rng));
}

std::string sat_text(const SatInstance& phi) {
    std::string s = format_one_in_three(phi);
    for (auto& c : s)
        if (c == '\n') c = ';';
    return s;
}

// ---------------------------------------------------------------- criteria

Outcome a1(const SelftestOptions& opt) {
    Outcome o;
    std::mt19937_64 rng(opt.seed ^ 0xa1);
    std::uniform_int_distribution<long long> v(-1'000'000, 1'000'000);
    const PteOptions po{1, 1};
    std::size_t solved = 0;
    for (int pair = 0; pair < 100; ++pair) {
        const BigRat a = v(rng), b = v(rng);
        for (std::size_t d = 2; d <= 8; ++d) {
            auto res = solve_inhomogeneous_pte(a, b, d, po);
            const auto& w = res.witness;
            const std::size_t want = (std::size_t{1} << d) - 2;
            if (w.X.size() != want || w.Y.size() != want) o.fail("size mismatch at d=" + std::to_string(d));
            if (!verify_pte(w).ok())
                o.fail("system fails for a=" + a.to_string() + " b=" + b.to_string() + " d=" + std::to_string(d));
            ++solved;
        }
    }
    o.detail = (o.passed ? "" : o.detail + "; ") + std::to_string(solved) + " systems (n surrogate 1)";
    return o;
}

Outcome a2(const SelftestOptions& opt) {
    Outcome o;
    std::mt19937_64 rng(opt.seed ^ 0xa2);
    DecimalRing ring;
    for (std::size_t i = 2; i <= 6; ++i) {
        const auto cm = coupling_matrices(i);
        for (int rep = 0; rep < 50; ++rep) {
            std::vector<BigRat> alpha;
            for (std::size_t r = 0; r < i; ++r) alpha.push_back(random_nonzero_rat(rng));
            auto [X, Y] = apply_coupling(ring, cm, alpha);
            auto sx = power_sums(X, i), sy = power_sums(Y, i);
            for (std::size_t k = 1; k < i; ++k)
                if (sx[k - 1] != sy[k - 1]) o.fail("degree " + std::to_string(k) + " nonzero at i=" + std::to_string(i));
            BigRat prod = factorial(i);
            for (const auto& a : alpha) prod *= a;
            if (sx[i - 1] - sy[i - 1] != prod) o.fail("top degree differs from i! prod alpha at i=" + std::to_string(i));
            if (i == 2 && sx[1] - sy[1] != BigRat(2) * alpha[0] * alpha[1]) o.fail("i=2 closed form 2 a1 a2");
        }
    }
    if (factorial(4) != BigInt(24)) o.fail("4! != 24");
    auto res = solve_inhomogeneous_pte(3, 5, 4, PteOptions{1, 1});
    const auto& l4 = res.aux.levels.back();
    if (l4.i != 4 || BigRat(24) * l4.alpha[0] * l4.alpha[1] * l4.alpha[2] * l4.alpha[3] != l4.residual)
        o.fail("h = 24 alpha beta gamma fails in the d=4 gadget");
    if (o.passed) o.detail = "250 vectors, i=2..6; closed forms at i=2 and i=4 hold";
    return o;
}

Outcome a3(const SelftestOptions&) {
    Outcome o;
    for (std::size_t k = 1; k <= 8; ++k) {
        auto w = prouhet_pte(k);
        if (w.X.size() != (std::size_t{1} << k) || w.Y.size() != w.X.size()) o.fail("size at k=" + std::to_string(k));
        auto sx = power_sums(w.X, k + 1), sy = power_sums(w.Y, k + 1);
        for (std::size_t j = 1; j <= k; ++j)
            if (sx[j - 1] != sy[j - 1]) o.fail("moment " + std::to_string(j) + " at k=" + std::to_string(k));
        if (sx[k] == sy[k]) o.fail("moment k+1 agrees at k=" + std::to_string(k));
    }
    if (o.passed) o.detail = "k=1..8";
    return o;
}

Outcome a4(const SelftestOptions& opt) {
    Outcome o;
    std::mt19937_64 rng(opt.seed ^ 0xa4);
    std::uniform_int_distribution<std::size_t> nd(2, 5), md(1, 5);
    constexpr std::uint32_t kChar = 13;
    std::size_t checks = 0, max_ell = 0;
    for (int inst = 0; inst < 50; ++inst) {
        std::size_t n = nd(rng), m = md(rng);
        while (3 * m < n) m = md(rng);
        const SatInstance phi = planted_sat(n, m, rng);
        const auto sols = brute_force_exactly_one(phi);
        if (sols.empty()) o.fail("planted formula unsatisfiable: " + sat_text(phi));
        for (std::size_t d = 1; d <= 4; ++d) {
            auto red = sat_to_mss(phi, d);
            const auto& art = red.artifacts;
            auto fp = transport_to_prime_field(red.instance);
            PrimeField Fp(fp.p);
            auto lr = laurent_reduction(art, kChar);
            const std::size_t ell = suggest_ext_degree(kChar, lr.ell_min);
            max_ell = std::max(max_ell, ell);
            auto fq = transport_to_ext_field(art, kChar, ell);
            ExtField Fq(fq.instance.field);
            for (const auto& z : sols) {
                auto S = encode_assignment(art, z);
                const std::string where = sat_text(phi) + " d=" + std::to_string(d);
                if (S.size() * 2 != art.N()) o.fail("subset size at " + where);
                if (!meets_targets(RationalField{}, red.instance, S)) o.fail("Q targets at " + where);
                if (!meets_targets(Fp, fp.instance, S)) o.fail("F_p targets at " + where);
                if (!meets_targets(Fq, fq.instance, S)) o.fail("F_q targets at " + where);
                checks += 3;
            }
        }
    }
    if (o.passed)
        o.detail = std::to_string(checks) + " encodings over Q, F_p, F_13^l (l <= " + std::to_string(max_ell) + ")";
    return o;
}

Outcome a5(const SelftestOptions& opt) {
    Outcome o;
    std::size_t formulas = 0, sat = 0;
    SearchBudget budget;
    budget.jobs = opt.jobs;
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t m = 1; m <= 3; ++m) {
            if (3 * m < n) continue;
            for (const auto& phi : all_formulas(n, m)) {
                ++formulas;
                const bool satisfiable = !brute_force_exactly_one(phi).empty();
                sat += satisfiable;
                auto red = sat_to_mss(phi, 2);
                auto found = brute_force_mss(RationalField{}, red.instance, budget);
                if (found.has_value() != satisfiable) {
                    o.fail("decision mismatch for " + sat_text(phi));
                    continue;
                }
                if (!found) continue;
                auto ex = extract_assignment(RationalField{}, red.artifacts, red.instance, *found);
                if (ex.status != ExtractStatus::assignment) o.fail("extraction failed for " + sat_text(phi));
                BigRat aux_sum;
                for (auto i : auxiliary_part(red.artifacts, *found)) aux_sum += red.instance.A[i];
                if (!aux_sum.is_zero()) o.fail("auxiliary part does not sum to 0 for " + sat_text(phi));
            }
        }
    o.detail = (o.passed ? "" : o.detail + "; ") + std::to_string(formulas) + " formulas, " + std::to_string(sat) +
               " satisfiable";
    return o;
}

Reduction regime_reduction(std::size_t n, std::size_t d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sat_to_mss(random_sat(n, n, rng), d);
}

Outcome a6(const SelftestOptions& opt) {
    Outcome o;
    const char* names[] = {"P1", "P2", "count", "distinct", "fact_bounds", "alpha_last_below_2", "alpha_tail_sum",
                           "pair_gap", "magnitude_band", "P4_aux_digits", "P4_target_digits"};
    for (auto [n, d] : {std::pair<std::size_t, std::size_t>{7, 2}, {13, 3}}) {
        auto red = regime_reduction(n, d, opt.seed ^ (0xa6 + n));
        PropertyOptions po;
        po.probes = 0;
        auto rep = verify_properties(red.artifacts, po);
        if (!rep.in_regime) o.fail("not in regime");
        for (const char* nm : names) {
            const Check* c = rep.find(nm);
            if (!c) o.fail(std::string("missing check ") + nm);
            else if (!c->passed) o.fail("(" + std::to_string(n) + "," + std::to_string(d) + ") " + nm + ": " + c->detail);
        }
    }
    if (o.passed) o.detail = "(7,2) and (13,3): P1 P2 alpha bounds distinctness fact bounds digit bounds";
    return o;
}

Outcome a7(const SelftestOptions& opt) {
    Outcome o;
    std::uint64_t probes = 0;
    for (auto [n, d] : {std::pair<std::size_t, std::size_t>{7, 2}, {13, 3}}) {
        auto red = regime_reduction(n, d, opt.seed ^ (0xa6 + n));
        PropertyOptions po;
        po.probes = 10000;
        po.seed = opt.seed ^ 0xa7;
        auto rep = verify_properties(red.artifacts, po);
        for (const char* nm : {"P3_regime", "P3_upper_divisible", "P3_lower_total", "P3_gap", "P3_probes"}) {
            const Check* c = rep.find(nm);
            if (!c || !c->passed) o.fail("(" + std::to_string(n) + "," + std::to_string(d) + ") " + nm);
        }
        probes += po.probes;
    }
    if (o.passed) o.detail = "decomposition holds, " + std::to_string(probes) + " probes outside the band";
    return o;
}

template <class F>
void newton_checks(const F& field, std::mt19937_64& rng, Outcome& o, const std::string& tag,
                   const std::function<typename F::Elem(std::mt19937_64&)>& draw) {
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<typename F::Elem> B;
        for (int j = 0; j < 6; ++j) B.push_back(draw(rng));
        std::vector<typename F::Elem> B5(B.begin(), B.begin() + 5);
        auto E = power_sums_to_elementary(field, B5);
        for (std::size_t j = 1; j <= 5; ++j)
            if (!field.eq(E[j - 1], elementary_by_determinant(field, B5, j))) o.fail(tag + " determinant j=" + std::to_string(j));
        auto E6 = power_sums_to_elementary(field, B);
        auto back = elementary_to_power_sums(field, E6);
        auto fwd = power_sums_to_elementary(field, elementary_to_power_sums(field, B));
        for (std::size_t j = 0; j < 6; ++j)
            if (!field.eq(back[j], B[j]) || !field.eq(fwd[j], B[j])) o.fail(tag + " round trip");
    }
}

template <class F>
void cross_oracle(const F& field, std::mt19937_64& rng, Outcome& o, const std::string& tag,
                  const std::function<typename F::Elem(std::mt19937_64&)>& draw, int cases) {
    std::uniform_int_distribution<std::size_t> nsz(1, 8);
    for (int rep = 0; rep < cases; ++rep) {
        MssInstance<typename F::Elem> inst;
        inst.field = field.descriptor();
        const std::size_t N = nsz(rng);
        while (inst.A.size() < N) {
            auto x = draw(rng);
            if (field.is_zero(x)) continue;
            bool dup = false;
            for (const auto& y : inst.A) dup = dup || field.eq(x, y);
            if (!dup) inst.A.push_back(x);
        }
        inst.k = std::uniform_int_distribution<std::size_t>(1, N)(rng);
        const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        if (rep % 2 == 0) {
            std::vector<std::size_t> idx(N);
            for (std::size_t i = 0; i < N; ++i) idx[i] = i;
            std::shuffle(idx.begin(), idx.end(), rng);
            std::vector<typename F::Elem> picked;
            for (std::size_t i = 0; i < inst.k; ++i) picked.push_back(inst.A[idx[i]]);
            inst.targets = field.power_sums(picked, d);
        } else {
            for (std::size_t j = 0; j < d; ++j) inst.targets.push_back(draw(rng));
        }
        auto a = brute_force_mss(field, inst);
        auto b = brute_force_symss(field, mss_to_symss(field, inst));
        if (a != b) o.fail(tag + " cross-oracle mismatch");
    }
}

Outcome a8(const SelftestOptions& opt) {
    Outcome o;
    std::mt19937_64 rng(opt.seed ^ 0xa8);
    RationalField Q;
    SmallPrimeField F(101);
    newton_checks<RationalField>(Q, rng, o, "Q", [](std::mt19937_64& r) { return random_nonzero_rat(r); });
    newton_checks<SmallPrimeField>(F, rng, o, "F_101",
                                   [](std::mt19937_64& r) { return std::uniform_int_distribution<std::uint64_t>(0, 100)(r); });
    cross_oracle<RationalField>(Q, rng, o, "Q",
                                [](std::mt19937_64& r) { return BigRat(std::uniform_int_distribution<long long>(-9, 9)(r)); },
                                100);
    cross_oracle<SmallPrimeField>(F, rng, o, "F_101",
                                  [](std::mt19937_64& r) { return std::uniform_int_distribution<std::uint64_t>(0, 100)(r); },
                                  100);
    if (o.passed) o.detail = "determinant j<=5, round trip j<=6, 200 cross-oracle instances";
    return o;
}

Outcome a9(const SelftestOptions& opt) {
    Outcome o;
    std::mt19937_64 rng(opt.seed ^ 0xa9);
    SmallPrimeField F(31);
    std::size_t cases = 0, solvable = 0;
    for (std::size_t N = 1; N <= 11; ++N)
        for (std::size_t k = 1; k <= std::min<std::size_t>(4, N); ++k)
            for (std::size_t d = 1; d <= std::min<std::size_t>(2, k); ++d)
                for (int set = 0; set < 4; ++set) {
                    SymSSInstance<std::uint64_t> inst;
                    inst.field = F.descriptor();
                    inst.k = k;
                    std::vector<std::uint64_t> pool(30);
                    for (std::uint64_t i = 0; i < 30; ++i) pool[i] = i + 1;
                    std::shuffle(pool.begin(), pool.end(), rng);
                    inst.A.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(N));
                    for (int kind = 0; kind < 2; ++kind) {
                        if (kind == 0) {
                            std::vector<std::uint64_t> pick(inst.A.begin(), inst.A.begin() + static_cast<std::ptrdiff_t>(k));
                            inst.targets = elementary_symmetric(F, pick, d);
                        } else {
                            inst.targets.clear();
                            for (std::size_t j = 0; j < d; ++j)
                                inst.targets.push_back(std::uniform_int_distribution<std::uint64_t>(0, 30)(rng));
                        }
                        ++cases;
                        auto sol = brute_force_symss(F, inst);
                        auto bdd = symss_to_bdd(F, inst);
                        auto rec = exhaustive_reconstruct(F, bdd);
                        if (sol.has_value() != rec.has_value()) {
                            o.fail("decision mismatch N=" + std::to_string(N) + " k=" + std::to_string(k) +
                                   " d=" + std::to_string(d));
                            continue;
                        }
                        if (!sol) continue;
                        ++solvable;
                        auto p = build_codeword(F, inst, *sol);
                        if (p.degree() && *p.degree() > k - d) o.fail("codeword degree");
                        if (count_agreements(F, bdd, p) < k + 1) o.fail("codeword agreements");
                        const auto p0 = evaluate(F, p, F.zero());
                        const auto want = d % 2 == 0 ? inst.targets[d - 1] : F.neg(inst.targets[d - 1]);
                        if (!F.eq(p0, want)) o.fail("p(0) != (-1)^d E_d");
                    }
                }
    o.detail = (o.passed ? "" : o.detail + "; ") + std::to_string(cases) + " instances over F_31, " +
               std::to_string(solvable) + " solvable";
    return o;
}

Outcome a10(const SelftestOptions& opt) {
    Outcome o;
    SmallPrimeField F(101);
    std::mt19937_64 rng(opt.seed ^ 0xa10);
    std::vector<std::uint64_t> r{uniform_below(rng, 101), uniform_below(rng, 101)};
    SamplerOptions so;
    so.count_all = true;
    auto res = sample_pte_over_fq(F, r, 24, 1'000'000, opt.seed ^ 0x5a, so);
    if (res.hits < limits::kA10MinHits || !res.witness) o.fail("no hit");
    if (res.witness) {
        auto sx = F.power_sums(res.witness->X, 2), sy = F.power_sums(res.witness->Y, 2);
        for (std::size_t j = 0; j < 2; ++j)
            if (F.sub(sx[j], sy[j]) != r[j]) o.fail("witness does not meet the residuals");
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%llu hits in %llu trials, rate %.3g (q^-d = %.3g)",
                  static_cast<unsigned long long>(res.hits), static_cast<unsigned long long>(res.trials), res.rate(),
                  1.0 / (101.0 * 101.0));
    o.detail = (o.passed ? "" : o.detail + "; ") + buf;
    return o;
}

const std::map<std::string, std::function<Outcome(const SelftestOptions&)>>& registry() {
    static const std::map<std::string, std::function<Outcome(const SelftestOptions&)>> r{
        {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5},
        {"A6", a6}, {"A7", a7}, {"A8", a8}, {"A9", a9}, {"A10", a10}};
    return r;
}

double time_limit(const std::string& id) {
    if (id == "A1") return limits::kA1Seconds;
    if (id == "A5") return limits::kA5Seconds;
    if (id == "A10") return limits::kA10Seconds;
    return 0;
}

}  // namespace

std::vector<std::string> criterion_ids() {
    return {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10"};
}

CriterionResult run_criterion(const std::string& id, const SelftestOptions& opt) {
    auto it = registry().find(id);
    if (it == registry().end()) throw std::invalid_argument("unknown criterion " + id);
    CriterionResult res;
    res.id = id;
    const auto t0 = Clock::now();
    try {
        Outcome o = it->second(opt);
        res.passed = o.passed;
        res.detail = o.detail;
    } catch (const std::exception& e) {
        res.passed = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (const double lim = time_limit(id); lim > 0 && res.seconds >= lim) {
        res.detail += "; runtime above the " + std::to_string(static_cast<int>(lim)) + " s target";
        res.passed = false;
    }
    return res;
}

std::vector<CriterionResult> run_selftest(const SelftestOptions& opt, const std::vector<std::string>& only) {
    std::vector<CriterionResult> out;
    for (const auto& id : only.empty() ? criterion_ids() : only) out.push_back(run_criterion(id, opt));
    return out;
}

std::string format_result(const CriterionResult& r) {
    char t[32];
    std::snprintf(t, sizeof t, "%.2fs", r.seconds);
    return r.id + " " + (r.passed ? "PASS" : "FAIL") + " (" + t + ") " + r.detail;
}

}  // namespace mssred
