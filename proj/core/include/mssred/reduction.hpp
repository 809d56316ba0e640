#ifndef MSSRED_REDUCTION_HPP
#define MSSRED_REDUCTION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mssred/exactnum.hpp"
#include "mssred/fields.hpp"
#include "mssred/laurent.hpp"
#include "mssred/pte.hpp"
#include "mssred/satss.hpp"

namespace mssred {

/// Moments subset sum: a size-k subset of A whose first d power sums equal the targets.
template <class E>
struct MssInstance {
    FieldDescriptor field;
    std::vector<E> A;
    std::size_t k = 0;
    std::vector<E> targets;  // m_1..m_d
    std::size_t d() const { return targets.size(); }
};

/// Throws std::invalid_argument if elements repeat, k > N or d = 0.
template <class F>
void validate_instance(const F& field, const MssInstance<typename F::Elem>& inst) {
    if (inst.targets.empty()) throw std::invalid_argument("instance needs d >= 1");
    if (inst.k > inst.A.size()) throw std::invalid_argument("subset size exceeds element count");
    auto v = inst.A;
    std::sort(v.begin(), v.end(), [&](const auto& x, const auto& y) { return field.less(x, y); });
    for (std::size_t i = 1; i < v.size(); ++i)
        if (field.eq(v[i - 1], v[i])) throw std::invalid_argument("instance elements are not distinct");
}

using Subset = std::vector<std::size_t>;  // element indices, ascending

template <class F>
std::vector<typename F::Elem> subset_power_sums(const F& field, const MssInstance<typename F::Elem>& inst,
                                                const Subset& S) {
    std::vector<typename F::Elem> picked;
    picked.reserve(S.size());
    for (auto i : S) {
        if (i >= inst.A.size()) throw std::out_of_range("subset index out of range");
        picked.push_back(inst.A[i]);
    }
    return field.power_sums(picked, inst.d());
}

/// True iff S has k distinct indices and hits every moment target.
template <class F>
bool meets_targets(const F& field, const MssInstance<typename F::Elem>& inst, const Subset& S) {
    if (S.size() != inst.k) return false;
    Subset s = S;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    auto sums = subset_power_sums(field, inst, s);
    for (std::size_t j = 0; j < inst.d(); ++j)
        if (!field.eq(sums[j], inst.targets[j])) return false;
    return true;
}

enum class ElementRole { a, b, x, y };
std::string to_string(ElementRole r);

struct ElementOrigin {
    std::size_t t = 0;      // variable, 1-based
    ElementRole role = ElementRole::a;
    std::size_t level = 0;  // i for auxiliaries
    std::size_t j = 0;      // row within the level, 0-based
    friend bool operator==(const ElementOrigin&, const ElementOrigin&) = default;
};

struct VariableGadget {
    BigInt a, b;                                // a_t = 10^nu a'_t, b_t = 10^nu b'_t
    std::optional<AuxConstruction<BigRat>> aux; // absent for d = 1
};

struct ReductionArtifacts {
    SatInstance phi;
    SubsetSumInstance classical;
    std::size_t d = 1;
    std::uint64_t nu = 0;  // n^2
    std::uint64_t M = 0;   // m + nu + n + 1
    bool in_regime = true;
    std::string warning;
    std::vector<VariableGadget> vars;  // index t - 1
    std::vector<ElementOrigin> origin; // parallel to the instance elements
    std::size_t N() const { return origin.size(); }
};

struct Reduction {
    MssInstance<BigRat> instance;
    ReductionArtifacts artifacts;
};

/// 1-in-3-SAT to MSS(d) over the rationals. Element order per variable:
/// a_t, X_t (by level, then row), b_t, Y_t.
Reduction sat_to_mss(const SatInstance& phi, std::size_t d);

/// Throws std::invalid_argument unless z is an exactly-one assignment.
Subset encode_assignment(const ReductionArtifacts& art, const Assignment& z);

enum class ExtractStatus { no_match, assignment, soundness_violation };
std::string to_string(ExtractStatus s);

struct ExtractResult {
    ExtractStatus status = ExtractStatus::no_match;
    Assignment z;  // filled unless no_match
};

template <class F>
ExtractResult extract_assignment(const F& field, const ReductionArtifacts& art,
                                 const MssInstance<typename F::Elem>& inst, const Subset& S) {
    if (inst.A.size() != art.N()) throw std::invalid_argument("artifacts do not match the instance");
    for (auto i : S)
        if (i >= art.N()) throw std::out_of_range("subset index out of range");
    ExtractResult r;
    if (!meets_targets(field, inst, S)) return r;
    r.z.assign(art.phi.n, false);
    for (auto i : S)
        if (art.origin[i].role == ElementRole::a) r.z[art.origin[i].t - 1] = true;
    r.status = eval_exactly_one(art.phi, r.z) ? ExtractStatus::assignment : ExtractStatus::soundness_violation;
    return r;
}

/// Index set of the auxiliary elements of S.
Subset auxiliary_part(const ReductionArtifacts& art, const Subset& S);

struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct PropertyReport {
    bool in_regime = true;
    std::vector<Check> checks;
    bool passed(const std::string& prefix = "") const;
    const Check* find(const std::string& name) const;
};

struct PropertyOptions {
    std::uint64_t probes = 10000;
    std::uint64_t seed = 0;
};

/// Properties 1-4 of the gadget with per-check detail.
PropertyReport verify_properties(const ReductionArtifacts& art, const PropertyOptions& opt = {});

template <class F>
MssInstance<typename F::Elem> scale_instance(const F& field, const MssInstance<typename F::Elem>& inst,
                                             const typename F::Elem& lambda) {
    if (field.is_zero(lambda)) throw std::invalid_argument("scale factor must be nonzero");
    MssInstance<typename F::Elem> out = inst;
    for (auto& a : out.A) a = field.mul(lambda, a);
    auto p = lambda;
    for (std::size_t j = 0; j < out.targets.size(); ++j) {
        out.targets[j] = field.mul(p, out.targets[j]);
        p = field.mul(p, lambda);
    }
    return out;
}

struct PrimeTransport {
    MssInstance<BigInt> instance;
    BigInt p;
    BigInt scale;  // common denominator the rationals were multiplied by
    BigInt bound;  // p exceeds this
    bool mersenne = false;
};

/// Bound the transport prime must exceed for the integerized instance.
BigInt transport_bound(const MssInstance<BigRat>& inst, BigInt* scale = nullptr);

/// Clears denominators and reduces modulo a prime above the safety bound.
/// override_p is a test hook that skips the bound.
PrimeTransport transport_to_prime_field(const MssInstance<BigRat>& inst,
                                        const std::optional<BigInt>& override_p = std::nullopt);

/// The reduction rebuilt in F_p[g, 1/g], before scaling.
struct LaurentReduction {
    std::vector<LaurentPoly> A;
    std::vector<LaurentPoly> targets;
    std::int64_t h = 0;        // scaling exponent
    std::size_t ell_min = 1;   // smallest admissible extension degree
};

/// Throws std::invalid_argument unless p is an odd prime above d (p < 2^32).
LaurentReduction laurent_reduction(const ReductionArtifacts& art, std::uint32_t p);

struct ExtTransport {
    MssInstance<ExtElem> instance;
    std::int64_t h = 0;
    std::size_t ell_min = 1;
};

/// Re-runs the gadget over F_{p^ell} with g replacing 10 and scales by g^h.
/// Throws std::invalid_argument when ell < ell_min (the message names ell_min).
ExtTransport transport_to_ext_field(const ReductionArtifacts& art, std::uint32_t p, std::size_t ell);

}  // namespace mssred

#endif
