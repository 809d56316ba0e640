#include "mssred/serialize.hpp"

#include <sstream>

namespace mssred {

namespace {

std::string join_coeffs(const std::vector<std::uint32_t>& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s;
}

std::vector<std::uint32_t> split_coeffs(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        BigInt v = BigInt::parse(tok);
        if (v.sign() < 0 || !v.fits_u64() || v.to_u64() > UINT32_MAX) throw FormatError("modulus coefficient out of range");
        out.push_back(static_cast<std::uint32_t>(v.to_u64()));
    }
    return out;
}

ElementRole role_from_string(const std::string& s) {
    if (s == "a") return ElementRole::a;
    if (s == "b") return ElementRole::b;
    if (s == "x") return ElementRole::x;
    if (s == "y") return ElementRole::y;
    throw FormatError("unknown element role '" + s + "'");
}

}  // namespace

std::string scalar_text(const Json& j, const char* what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return j.dump();
    throw FormatError(std::string(what) + ": expected a decimal string");
}

std::size_t size_from_json(const Json& j, const char* what) {
    BigInt v;
    try {
        v = BigInt::parse(scalar_text(j, what));
    } catch (const std::invalid_argument&) {
        throw FormatError(std::string(what) + ": not an integer");
    }
    if (v.sign() < 0 || !v.fits_u64()) throw FormatError(std::string(what) + ": out of range");
    return static_cast<std::size_t>(v.to_u64());
}

Json field_to_json(const FieldDescriptor& f) {
    switch (f.kind) {
        case FieldKind::rational: return {{"kind", "rational"}};
        case FieldKind::prime: return {{"kind", "prime"}, {"p", f.p.to_string()}};
        case FieldKind::extension:
            return {{"kind", "extension"},
                    {"p", f.p.to_string()},
                    {"ell", std::to_string(f.ell)},
                    {"modulus", join_coeffs(f.modulus)}};
    }
    throw FormatError("unknown field kind");
}

FieldDescriptor field_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return FieldDescriptor::rational();
    BigInt p;
    try {
        p = BigInt::parse(scalar_text(j.at("p"), "p"));
    } catch (const std::invalid_argument&) {
        throw FormatError("field characteristic is not an integer");
    }
    if (!is_prime(p)) throw FormatError("field characteristic is not prime");
    if (kind == "prime") return FieldDescriptor::prime(p);
    if (kind == "extension") {
        FieldDescriptor d{FieldKind::extension, p, size_from_json(j.at("ell"), "ell"),
                          split_coeffs(j.at("modulus").get<std::string>())};
        if (d.modulus.size() != d.ell + 1) throw FormatError("modulus degree differs from ell");
        return d;
    }
    throw FormatError("unknown field kind '" + kind + "'");
}

Json subset_to_json(const Subset& s) { return {{"type", "subset"}, {"indices", s}}; }

Subset subset_from_json(const Json& j) {
    const Json& a = j.is_array() ? j : j.at("indices");
    if (!a.is_array()) throw FormatError("subset indices must be an array");
    Subset s;
    for (const auto& x : a) s.push_back(size_from_json(x, "index"));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw FormatError("subset repeats an index");
    return s;
}

Json artifacts_to_json(const ReductionArtifacts& art) {
    Json origin = Json::array();
    for (const auto& o : art.origin) origin.push_back({o.t, to_string(o.role), o.level, o.j});
    Json gadgets = Json::array();
    for (std::size_t t = 1; t <= art.vars.size(); ++t) {
        const auto& g = art.vars[t - 1];
        Json gj{{"t", t}, {"a", g.a.to_string()}, {"b", g.b.to_string()}};
        if (g.aux) {
            gj["nu_t"] = std::to_string(g.aux->nu_t);
            Json levels = Json::array();
            for (const auto& l : g.aux->levels)
                levels.push_back({{"i", l.i},
                                  {"f", std::to_string(l.f)},
                                  {"g", l.g},
                                  {"alpha_last", l.alpha.back().to_string()},
                                  {"residual", l.residual.to_string()}});
            gj["levels"] = levels;
        }
        gadgets.push_back(gj);
    }
    return {{"formula", format_one_in_three(art.phi)},
            {"d", std::to_string(art.d)},
            {"nu", std::to_string(art.nu)},
            {"M", std::to_string(art.M)},
            {"in_regime", art.in_regime},
            {"warning", art.warning},
            {"origin", origin},
            {"gadgets", gadgets}};
}

ReductionArtifacts artifacts_from_json(const Json& j) {
    SatInstance phi;
    try {
        phi = parse_one_in_three(j.at("formula").get<std::string>());
    } catch (const ParseError& e) {
        throw FormatError(std::string("artifact formula: ") + e.what());
    }
    const std::size_t d = size_from_json(j.at("d"), "d");
    ReductionArtifacts art = sat_to_mss(phi, d).artifacts;
    if (j.contains("origin")) {
        const auto& o = j.at("origin");
        if (!o.is_array() || o.size() != art.N()) throw FormatError("origin map does not match the formula");
        for (std::size_t i = 0; i < art.N(); ++i) {
            ElementOrigin e{o[i].at(0).get<std::size_t>(), role_from_string(o[i].at(1).get<std::string>()),
                            o[i].at(2).get<std::size_t>(), o[i].at(3).get<std::size_t>()};
            if (!(e == art.origin[i])) throw FormatError("origin map does not match the formula");
        }
    }
    return art;
}

Json report_to_json(const PropertyReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"type", "property_report"}, {"in_regime", r.in_regime}, {"passed", r.passed()}, {"checks", checks}};
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace mssred
