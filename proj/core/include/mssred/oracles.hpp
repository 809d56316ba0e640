#ifndef MSSRED_ORACLES_HPP
#define MSSRED_ORACLES_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <vector>

#include "mssred/exactnum.hpp"
#include "mssred/fields.hpp"
#include "mssred/reduction.hpp"
#include "mssred/rscodes.hpp"

namespace mssred {

struct SearchBudget {
    std::uint64_t max_subsets = 50'000'000;
    std::uint64_t max_trials = 10'000;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

class BudgetExceeded : public std::runtime_error {
   public:
    explicit BudgetExceeded(BigInt required)
        : std::runtime_error("search budget exceeded: " + required.to_string() + " subsets required"),
          required_(std::move(required)) {}
    const BigInt& required() const { return required_; }

   private:
    BigInt required_;
};

/// Throws BudgetExceeded when C(n, k) exceeds the budget.
void check_budget(std::size_t n, std::size_t k, const SearchBudget& budget);

namespace detail {

/// Positions of the elements in ascending field order.
template <class F>
std::vector<std::size_t> sorted_order(const F& field, const std::vector<typename F::Elem>& A) {
    std::vector<std::size_t> ord(A.size());
    for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = i;
    std::stable_sort(ord.begin(), ord.end(), [&](std::size_t x, std::size_t y) { return field.less(A[x], A[y]); });
    return ord;
}

/// Lexicographic k-combinations of [0, n) whose first entry is `first`; returns the
/// first accepted one. push(out, in, p) extends the prefix state in by position p.
template <class State, class Push, class Accept>
std::optional<std::vector<std::size_t>> first_combination(std::size_t n, std::size_t k, std::size_t first,
                                                          State root, Push push, Accept accept,
                                                          const std::atomic<std::size_t>* stop) {
    std::vector<std::size_t> pos(k);
    std::vector<State> st(k + 1, root);
    if (k == 0) {
        if (accept(st[0], pos)) return pos;
        return std::nullopt;
    }
    pos[0] = first;
    push(st[1], st[0], first);
    std::size_t depth = 1;
    std::uint64_t ticks = 0;
    while (depth >= 1) {
        if (depth == k) {
            if (accept(st[k], pos)) return pos;
        } else {
            // Descend with the smallest feasible next position.
            const std::size_t next = pos[depth - 1] + 1;
            if (next + (k - depth) <= n) {
                pos[depth] = next;
                push(st[depth + 1], st[depth], next);
                ++depth;
                continue;
            }
        }
        // Advance: bump the deepest position that still has room, never the first.
        for (;;) {
            if (depth <= 1) return std::nullopt;
            --depth;
            const std::size_t cand = pos[depth] + 1;
            if (cand + (k - depth - 1) < n) {
                pos[depth] = cand;
                push(st[depth + 1], st[depth], cand);
                ++depth;
                break;
            }
        }
        if (stop && (++ticks & 0xfff) == 0 && stop->load(std::memory_order_relaxed) < first) return std::nullopt;
    }
    return std::nullopt;
}

inline constexpr std::uint64_t kFingerprintPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t fp_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s >= kFingerprintPrime ? s - kFingerprintPrime : s;
}

std::uint64_t fp_reduce(const BigInt& v);

/// Shards the first position across workers and keeps the result from the smallest shard.
template <class Solve>
std::optional<std::vector<std::size_t>> sharded_first(std::size_t n, std::size_t k, unsigned jobs, Solve solve) {
    if (k > n) return std::nullopt;
    if (jobs == 0) jobs = 1;
    const std::size_t firsts = k == 0 ? 1 : n - k + 1;
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::vector<std::optional<std::vector<std::size_t>>> found(firsts);
    auto worker = [&](unsigned w) {
        for (std::size_t f = w; f < firsts; f += jobs) {
            if (best.load() < f) return;
            auto r = solve(f, &best);
            if (r) {
                found[f] = std::move(r);
                std::size_t cur = best.load();
                while (f < cur && !best.compare_exchange_weak(cur, f)) {
                }
                return;
            }
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }
    const std::size_t b = best.load();
    if (b == std::numeric_limits<std::size_t>::max()) return std::nullopt;
    return found[b];
}

}  // namespace detail

/// Lexicographically first size-k subset (element indices, ascending) in sorted element order
/// meeting all targets, or none.
template <class F>
std::optional<Subset> brute_force_mss(const F& field, const MssInstance<typename F::Elem>& inst,
                                      const SearchBudget& budget = {}) {
    using E = typename F::Elem;
    const std::size_t n = inst.A.size(), k = inst.k, d = inst.d();
    check_budget(n, k, budget);
    const auto ord = detail::sorted_order(field, inst.A);
    auto to_subset = [&](const std::vector<std::size_t>& pos) {
        Subset s;
        for (auto p : pos) s.push_back(ord[p]);
        std::sort(s.begin(), s.end());
        return s;
    };
    std::optional<std::vector<std::size_t>> pos;
    if constexpr (std::is_same_v<E, BigRat>) {
        // Modular fingerprints of the integerized moments, exact check on a match.
        std::vector<BigRat> vals = inst.A;
        vals.insert(vals.end(), inst.targets.begin(), inst.targets.end());
        const BigInt L = common_denominator(vals);
        std::vector<std::vector<std::uint64_t>> fp(n, std::vector<std::uint64_t>(d));
        for (std::size_t p = 0; p < n; ++p) {
            const BigInt v = (BigRat(L) * inst.A[ord[p]]).num();
            BigInt acc = v;
            for (std::size_t j = 0; j < d; ++j) {
                if (j) acc *= v;
                fp[p][j] = detail::fp_reduce(acc);
            }
        }
        std::vector<std::uint64_t> goal(d);
        BigRat Lj = 1;
        for (std::size_t j = 0; j < d; ++j) {
            Lj *= BigRat(L);
            BigRat t = Lj * inst.targets[j];
            goal[j] = t.is_integer() ? detail::fp_reduce(t.num()) : std::uint64_t{1} << 62;  // unreachable
        }
        using State = std::vector<std::uint64_t>;
        auto push = [&](State& r, const State& s, std::size_t p) {
            for (std::size_t j = 0; j < d; ++j) r[j] = detail::fp_add(s[j], fp[p][j]);
        };
        auto accept = [&](const State& s, const std::vector<std::size_t>& ps) {
            if (s != goal) return false;
            return meets_targets(field, inst, to_subset(ps));
        };
        pos = detail::sharded_first(n, k, budget.jobs, [&](std::size_t f, const std::atomic<std::size_t>* stop) {
            return detail::first_combination(n, k, f, State(d, 0), push, accept, stop);
        });
    } else {
        using State = std::vector<E>;
        auto push = [&](State& r, const State& s, std::size_t p) {
            const E& x = inst.A[ord[p]];
            E xp = x;
            for (std::size_t j = 0; j < d; ++j) {
                if (j) xp = field.mul(xp, x);
                r[j] = field.add(s[j], xp);
            }
        };
        auto accept = [&](const State& s, const std::vector<std::size_t>&) {
            for (std::size_t j = 0; j < d; ++j)
                if (!field.eq(s[j], inst.targets[j])) return false;
            return true;
        };
        pos = detail::sharded_first(n, k, budget.jobs, [&](std::size_t f, const std::atomic<std::size_t>* stop) {
            return detail::first_combination(n, k, f, State(d, field.zero()), push, accept, stop);
        });
    }
    if (!pos) return std::nullopt;
    return to_subset(*pos);
}

/// As brute_force_mss with elementary symmetric targets.
template <class F>
std::optional<Subset> brute_force_symss(const F& field, const SymSSInstance<typename F::Elem>& inst,
                                        const SearchBudget& budget = {}) {
    using E = typename F::Elem;
    const std::size_t n = inst.A.size(), k = inst.k, d = inst.d();
    check_budget(n, k, budget);
    const auto ord = detail::sorted_order(field, inst.A);
    using State = std::vector<E>;  // e_0..e_d of the prefix
    auto push = [&](State& r, const State& s, std::size_t p) {
        const E& x = inst.A[ord[p]];
        r[0] = s[0];
        for (std::size_t j = 1; j <= d; ++j) r[j] = field.add(s[j], field.mul(s[j - 1], x));
    };
    auto accept = [&](const State& s, const std::vector<std::size_t>&) {
        for (std::size_t j = 1; j <= d; ++j)
            if (!field.eq(s[j], inst.targets[j - 1])) return false;
        return true;
    };
    State root(d + 1, field.zero());
    root[0] = field.one();
    auto pos = detail::sharded_first(n, k, budget.jobs, [&](std::size_t f, const std::atomic<std::size_t>* stop) {
        return detail::first_combination(n, k, f, root, push, accept, stop);
    });
    if (!pos) return std::nullopt;
    Subset s;
    for (auto p : *pos) s.push_back(ord[p]);
    std::sort(s.begin(), s.end());
    return s;
}

/// Any polynomial of degree < K through at least K + d points, found by
/// interpolating every K-subset of points in lexicographic order.
template <class F>
std::optional<Poly<typename F::Elem>> exhaustive_reconstruct(const F& field,
                                                             const BddInstance<typename F::Elem>& inst,
                                                             const SearchBudget& budget = {}) {
    using E = typename F::Elem;
    const std::size_t n = inst.D.size(), K = inst.K;
    if (inst.y.size() != n) throw std::invalid_argument("point and target counts differ");
    check_budget(n, K, budget);
    Poly<E> found;
    auto accept = [&](const int&, const std::vector<std::size_t>& pos) {
        std::vector<std::pair<E, E>> pts;
        for (auto p : pos) pts.emplace_back(inst.D[p], inst.y[p]);
        auto p = interpolate(field, pts);
        if (count_agreements(field, inst, p) >= inst.threshold()) {
            found = std::move(p);
            return true;
        }
        return false;
    };
    auto push = [](int&, const int&, std::size_t) {};
    auto pos = detail::sharded_first(n, K, 1, [&](std::size_t f, const std::atomic<std::size_t>* stop) {
        return detail::first_combination(n, K, f, 0, push, accept, stop);
    });
    if (!pos) return std::nullopt;
    return found;
}

// --------------------------------------------------------------- bimodality

/// An auxiliary value with its upper part z_U (the +-alpha_1/2 component).
struct AuxValue {
    BigRat value;
    BigRat upper;
};

/// Subset sums must avoid [10^lo, 10^hi]; upper parts are multiples of 10^unit / 2.
struct BimodalityThresholds {
    std::int64_t lo_exp = 0;
    std::int64_t hi_exp = 0;
    std::int64_t unit_exp = 0;
};

struct DecompositionCheck {
    bool upper_divisible = true;
    bool lower_total_small = true;
    bool gap_holds = true;
    bool passed() const { return upper_divisible && lower_total_small && gap_holds; }
};

struct BimodalityReport {
    std::uint64_t trials = 0;
    std::uint64_t violations = 0;
    std::uint64_t tiny = 0, huge = 0;
    std::optional<std::vector<std::size_t>> first_violation;
    std::optional<DecompositionCheck> decomposition;
    bool passed() const { return violations == 0 && (!decomposition || decomposition->passed()); }
};

/// True iff |sum| lies outside [10^lo, 10^hi].
bool outside_band(const BigRat& sum, const BimodalityThresholds& th);

BimodalityReport bimodality_probe(const std::vector<AuxValue>& aux, const BimodalityThresholds& th,
                                  const SearchBudget& budget);

/// The determinant form of Newton's identities, E_j = det(M_j) / j!.
template <class F>
typename F::Elem elementary_by_determinant(const F& field, const std::vector<typename F::Elem>& B, std::size_t j) {
    using E = typename F::Elem;
    if (j == 0) return field.one();
    if (B.size() < j) throw std::invalid_argument("not enough power sums");
    require_factorial_invertible(field, j);
    std::vector<std::vector<E>> M(j, std::vector<E>(j, field.zero()));
    for (std::size_t r = 0; r < j; ++r)
        for (std::size_t c = 0; c < j; ++c) {
            if (c <= r) M[r][c] = B[r - c];
            else if (c == r + 1) M[r][c] = field.from_int(static_cast<long long>(r + 1));
        }
    E det = field.one();
    for (std::size_t c = 0; c < j; ++c) {
        std::size_t piv = c;
        while (piv < j && field.is_zero(M[piv][c])) ++piv;
        if (piv == j) return field.zero();
        if (piv != c) {
            std::swap(M[piv], M[c]);
            det = field.neg(det);
        }
        det = field.mul(det, M[c][c]);
        const E inv = field.inv(M[c][c]);
        for (std::size_t r = c + 1; r < j; ++r) {
            if (field.is_zero(M[r][c])) continue;
            const E fr = field.mul(M[r][c], inv);
            for (std::size_t cc = c; cc < j; ++cc) M[r][cc] = field.sub(M[r][cc], field.mul(fr, M[c][cc]));
        }
    }
    return field.div(det, field.from_bigint(factorial(j)));
}

}  // namespace mssred

#endif
