#ifndef MSSRED_RSCODES_HPP
#define MSSRED_RSCODES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mssred/exactnum.hpp"
#include "mssred/fields.hpp"
#include "mssred/reduction.hpp"

namespace mssred {

/// Coefficients lowest degree first; no trailing zero (zero polynomial is empty).
template <class E>
struct Poly {
    std::vector<E> c;
    std::optional<std::size_t> degree() const {
        if (c.empty()) return std::nullopt;
        return c.size() - 1;
    }
};

template <class F>
Poly<typename F::Elem> make_poly(const F& field, std::vector<typename F::Elem> c) {
    while (!c.empty() && field.is_zero(c.back())) c.pop_back();
    return {std::move(c)};
}

template <class F>
typename F::Elem evaluate(const F& field, const Poly<typename F::Elem>& p, const typename F::Elem& x) {
    auto acc = field.zero();
    for (std::size_t i = p.c.size(); i-- > 0;) acc = field.add(field.mul(acc, x), p.c[i]);
    return acc;
}

template <class F>
Poly<typename F::Elem> poly_mul(const F& field, const Poly<typename F::Elem>& a, const Poly<typename F::Elem>& b) {
    if (a.c.empty() || b.c.empty()) return {};
    std::vector<typename F::Elem> r(a.c.size() + b.c.size() - 1, field.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = field.add(r[i + j], field.mul(a.c[i], b.c[j]));
    return make_poly(field, std::move(r));
}

/// Throws std::domain_error unless (j!)^{-1} exists in the field.
template <class F>
void require_factorial_invertible(const F& field, std::size_t j) {
    const BigInt ch = field.characteristic();
    if (!ch.is_zero() && ch <= BigInt(static_cast<long long>(j)))
        throw std::domain_error("j! is not invertible in a field of characteristic " + ch.to_string());
}

/// Newton recurrence j E_j = sum_{i=1}^{j} (-1)^{i-1} E_{j-i} B_i.
template <class F>
std::vector<typename F::Elem> power_sums_to_elementary(const F& field, const std::vector<typename F::Elem>& B) {
    require_factorial_invertible(field, B.size());
    std::vector<typename F::Elem> E(B.size() + 1, field.zero());
    E[0] = field.one();
    for (std::size_t j = 1; j <= B.size(); ++j) {
        auto s = field.zero();
        for (std::size_t i = 1; i <= j; ++i) {
            auto term = field.mul(E[j - i], B[i - 1]);
            s = (i % 2 == 1) ? field.add(s, term) : field.sub(s, term);
        }
        E[j] = field.div(s, field.from_int(static_cast<long long>(j)));
    }
    E.erase(E.begin());
    return E;
}

/// B_j = sum_{i=1}^{j-1} (-1)^{i-1} E_i B_{j-i} + (-1)^{j-1} j E_j.
template <class F>
std::vector<typename F::Elem> elementary_to_power_sums(const F& field, const std::vector<typename F::Elem>& E) {
    std::vector<typename F::Elem> B(E.size(), field.zero());
    for (std::size_t j = 1; j <= E.size(); ++j) {
        auto s = field.mul(field.from_int(static_cast<long long>(j)), E[j - 1]);
        if (j % 2 == 0) s = field.neg(s);
        for (std::size_t i = 1; i < j; ++i) {
            auto term = field.mul(E[i - 1], B[j - i - 1]);
            s = (i % 2 == 1) ? field.add(s, term) : field.sub(s, term);
        }
        B[j - 1] = s;
    }
    return B;
}

/// Elementary symmetric sums e_1..e_d of the values.
template <class F>
std::vector<typename F::Elem> elementary_symmetric(const F& field, const std::vector<typename F::Elem>& v,
                                                   std::size_t d) {
    std::vector<typename F::Elem> e(d + 1, field.zero());
    e[0] = field.one();
    for (std::size_t n = 0; n < v.size(); ++n)
        for (std::size_t j = std::min(d, n + 1); j >= 1; --j) e[j] = field.add(e[j], field.mul(e[j - 1], v[n]));
    e.erase(e.begin());
    return e;
}

template <class E>
struct SymSSInstance {
    FieldDescriptor field;
    std::vector<E> A;
    std::size_t k = 0;
    std::vector<E> targets;  // E_1..E_d
    std::size_t d() const { return targets.size(); }
};

template <class F>
bool meets_symmetric_targets(const F& field, const SymSSInstance<typename F::Elem>& inst, const Subset& S) {
    if (S.size() != inst.k) return false;
    std::vector<typename F::Elem> v;
    for (auto i : S) {
        if (i >= inst.A.size()) throw std::out_of_range("subset index out of range");
        v.push_back(inst.A[i]);
    }
    auto e = elementary_symmetric(field, v, inst.d());
    for (std::size_t j = 0; j < inst.d(); ++j)
        if (!field.eq(e[j], inst.targets[j])) return false;
    return true;
}

/// Same elements and k; targets converted by Newton's identities. Zero elements are rejected.
template <class F>
SymSSInstance<typename F::Elem> mss_to_symss(const F& field, const MssInstance<typename F::Elem>& inst) {
    for (const auto& a : inst.A)
        if (field.is_zero(a)) throw std::invalid_argument("mss_to_symss: zero element (shift the instance first)");
    SymSSInstance<typename F::Elem> out;
    out.field = inst.field;
    out.A = inst.A;
    out.k = inst.k;
    out.targets = power_sums_to_elementary(field, inst.targets);
    return out;
}

template <class E>
struct BddInstance {
    FieldDescriptor field;
    std::vector<E> D;  // a_i^{-1}, then 0
    std::vector<E> y;
    std::size_t K = 1;
    std::size_t d = 1;
    std::size_t threshold() const { return K + d; }
};

/// f(x) = x^d - E_1 x^{d-1} + ... + (-1)^{d-1} E_{d-1} x.
template <class F>
Poly<typename F::Elem> bdd_shift_poly(const F& field, const std::vector<typename F::Elem>& E) {
    const std::size_t d = E.size();
    std::vector<typename F::Elem> c(d + 1, field.zero());
    c[d] = field.one();
    for (std::size_t j = 1; j < d; ++j) c[d - j] = (j % 2 == 1) ? field.neg(E[j - 1]) : E[j - 1];
    return make_poly(field, std::move(c));
}

template <class F>
BddInstance<typename F::Elem> symss_to_bdd(const F& field, const SymSSInstance<typename F::Elem>& inst) {
    const std::size_t d = inst.d();
    if (d == 0) throw std::invalid_argument("symss_to_bdd needs d >= 1");
    if (inst.k < d) throw std::invalid_argument("symss_to_bdd needs k >= d");
    BddInstance<typename F::Elem> out;
    out.field = inst.field;
    out.K = inst.k - d + 1;
    out.d = d;
    const auto f = bdd_shift_poly(field, inst.targets);
    for (const auto& a : inst.A) {
        if (field.is_zero(a)) throw std::invalid_argument("symss_to_bdd: zero element");
        out.D.push_back(field.inv(a));
        out.y.push_back(field.neg(evaluate(field, f, a)));
    }
    out.D.push_back(field.zero());
    out.y.push_back(d % 2 == 0 ? inst.targets[d - 1] : field.neg(inst.targets[d - 1]));
    auto pts = out.D;
    std::sort(pts.begin(), pts.end(), [&](const auto& x, const auto& y) { return field.less(x, y); });
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (field.eq(pts[i - 1], pts[i])) throw std::logic_error("internal: repeated evaluation point");
    return out;
}

/// p(x) = (x^k g(1/x) - x^d f(1/x)) / x^d with g = prod_{i in S} (x - a_i).
template <class F>
Poly<typename F::Elem> build_codeword(const F& field, const SymSSInstance<typename F::Elem>& inst, const Subset& S) {
    if (!meets_symmetric_targets(field, inst, S)) throw std::invalid_argument("build_codeword: subset is not a solution");
    using E = typename F::Elem;
    const std::size_t k = inst.k, d = inst.d();
    Poly<E> g = make_poly(field, {field.one()});
    for (auto i : S) g = poly_mul(field, g, make_poly(field, {field.neg(inst.A[i]), field.one()}));
    // Reversals: coefficient j of x^k g(1/x) is g_{k-j}; of x^d f(1/x) is f_{d-j}.
    const auto f = bdd_shift_poly(field, inst.targets);
    std::vector<E> num(k + 1, field.zero());
    for (std::size_t j = 0; j <= k; ++j) num[j] = k - j < g.c.size() ? g.c[k - j] : field.zero();
    for (std::size_t j = 0; j <= d; ++j)
        if (d - j < f.c.size()) num[j] = field.sub(num[j], f.c[d - j]);
    for (std::size_t j = 0; j < d; ++j)
        if (!field.is_zero(num[j])) throw std::logic_error("internal: codeword numerator not divisible by x^d");
    return make_poly(field, std::vector<E>(num.begin() + static_cast<std::ptrdiff_t>(d), num.end()));
}

/// Newton-form interpolation; throws std::invalid_argument on repeated x.
template <class F>
Poly<typename F::Elem> interpolate(const F& field,
                                   const std::vector<std::pair<typename F::Elem, typename F::Elem>>& pts) {
    using E = typename F::Elem;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (field.eq(pts[i].first, pts[j].first)) throw std::invalid_argument("interpolate: repeated x value");
    std::vector<E> coef(n);
    for (std::size_t i = 0; i < n; ++i) coef[i] = pts[i].second;
    for (std::size_t lvl = 1; lvl < n; ++lvl)
        for (std::size_t i = n - 1; i >= lvl; --i)
            coef[i] = field.div(field.sub(coef[i], coef[i - 1]), field.sub(pts[i].first, pts[i - lvl].first));
    // Expand c0 + c1 (x - x0) + c2 (x - x0)(x - x1) + ... by Horner.
    std::vector<E> acc;
    for (std::size_t i = n; i-- > 0;) {
        std::vector<E> next(acc.size() + 1, field.zero());
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] = field.add(next[j + 1], acc[j]);
            next[j] = field.sub(next[j], field.mul(acc[j], pts[i].first));
        }
        next[0] = field.add(next[0], coef[i]);
        acc = std::move(next);
    }
    return make_poly(field, std::move(acc));
}

/// Number of points where p matches y; throws std::invalid_argument if deg p >= K.
template <class F>
std::size_t count_agreements(const F& field, const BddInstance<typename F::Elem>& inst,
                             const Poly<typename F::Elem>& p) {
    if (p.degree() && *p.degree() >= inst.K) throw std::invalid_argument("count_agreements: degree must be below K");
    std::size_t c = 0;
    for (std::size_t i = 0; i < inst.D.size(); ++i) c += field.eq(evaluate(field, p, inst.D[i]), inst.y[i]);
    return c;
}

}  // namespace mssred

#endif
