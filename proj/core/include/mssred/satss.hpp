#ifndef MSSRED_SATSS_HPP
#define MSSRED_SATSS_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mssred/exactnum.hpp"

namespace mssred {

/// Signed variable index: +t is z_t, -t is its negation.
using Literal = int;
using Clause = std::array<Literal, 3>;
using Assignment = std::vector<bool>;

struct SatInstance {
    std::size_t n = 0;
    std::vector<Clause> clauses;
    std::size_t m() const { return clauses.size(); }
};

class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

   private:
    std::size_t line_;
};

/// Parses "p o13 <n> <m>" followed by m clauses of three literals and a
/// terminating 0. ';' acts as a line separator; lines starting with 'c' are comments.
SatInstance parse_one_in_three(std::string_view text);
std::string format_one_in_three(const SatInstance& phi);

/// Throws std::invalid_argument if the instance breaks a structural invariant.
void validate(const SatInstance& phi);

bool eval_exactly_one(const SatInstance& phi, const Assignment& z);

struct SubsetSumInstance {
    std::vector<BigInt> a;  // a'_1..a'_n
    std::vector<BigInt> b;  // b'_1..b'_n
    BigInt target;
};

/// Occurrences of literal lit in clause j.
int occurrences(const Clause& c, Literal lit);

/// Classical digit gadget. Throws std::invalid_argument when m = 0 or the
/// numbers are not distinct.
SubsetSumInstance sat_to_subset_sum(const SatInstance& phi);

/// All exactly-one assignments in increasing binary order (z_1 most significant).
std::vector<Assignment> brute_force_exactly_one(const SatInstance& phi, std::size_t limit = 24);

/// Uniformly random formula of the given shape in which every variable occurs
/// (otherwise a'_t = b'_t and the gadget is rejected).
template <class Rng>
SatInstance random_sat(std::size_t n, std::size_t m, Rng& rng);

}  // namespace mssred

#include <random>

namespace mssred {

template <class Rng>
SatInstance random_sat(std::size_t n, std::size_t m, Rng& rng) {
    SatInstance phi;
    phi.n = n;
    std::uniform_int_distribution<int> var(1, static_cast<int>(n));
    std::bernoulli_distribution neg(0.5);
    if (n == 0 || 3 * m < n) throw std::invalid_argument("random_sat: every variable must be able to occur");
    for (;;) {
        phi.clauses.clear();
        while (phi.clauses.size() < m) {
            Clause c;
            for (auto& l : c) l = neg(rng) ? -var(rng) : var(rng);
            bool ok = true;
            for (auto l : c)
                for (auto k : c)
                    if (l == -k) ok = false;
            if (ok) phi.clauses.push_back(c);
        }
        std::vector<bool> seen(n + 1, false);
        for (const auto& c : phi.clauses)
            for (auto l : c) seen[static_cast<std::size_t>(l < 0 ? -l : l)] = true;
        std::size_t count = 0;
        for (std::size_t t = 1; t <= n; ++t) count += seen[t];
        if (count == n) return phi;
    }
}

}  // namespace mssred

#endif
