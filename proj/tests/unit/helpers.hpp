#ifndef MSSRED_TEST_HELPERS_HPP
#define MSSRED_TEST_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "mssred/exactnum.hpp"
#include "mssred/satss.hpp"

namespace mssred::test {

inline BigRat Q(const std::string& s) { return BigRat::parse(s); }
inline BigInt Z(const std::string& s) { return BigInt::parse(s); }

inline std::vector<BigRat> Qs(std::initializer_list<long long> v) {
    std::vector<BigRat> out;
    for (auto x : v) out.emplace_back(x);
    return out;
}

inline BigRat random_rat(std::mt19937_64& rng, long long span = 1000) {
    std::uniform_int_distribution<long long> num(-span, span), den(1, span);
    return BigRat::normalize(BigInt(num(rng)), BigInt(den(rng)));
}

inline BigRat random_nonzero_rat(std::mt19937_64& rng, long long span = 1000) {
    for (;;) {
        BigRat r = random_rat(rng, span);
        if (!r.is_zero()) return r;
    }
}

/// The running example: one clause (z1, z2, z2).
inline SatInstance example_phi() { return parse_one_in_three("p o13 2 1 ; 1 2 2 0"); }

}  // namespace mssred::test

#endif
