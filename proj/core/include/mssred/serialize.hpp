#ifndef MSSRED_SERIALIZE_HPP
#define MSSRED_SERIALIZE_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mssred/fields.hpp"
#include "mssred/pte.hpp"
#include "mssred/reduction.hpp"
#include "mssred/rscodes.hpp"

namespace mssred {

using Json = nlohmann::json;

/// Thrown for structurally invalid documents.
class FormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

Json field_to_json(const FieldDescriptor& f);
FieldDescriptor field_from_json(const Json& j);

/// Calls fn with the concrete field object for the descriptor.
template <class Fn>
decltype(auto) visit_field(const FieldDescriptor& d, Fn&& fn) {
    switch (d.kind) {
        case FieldKind::rational: return fn(RationalField{});
        case FieldKind::prime: return fn(PrimeField(d.p));
        case FieldKind::extension: return fn(ExtField(d));
    }
    throw FormatError("unknown field kind");
}

/// Reads a decimal string or a JSON integer.
std::string scalar_text(const Json& j, const char* what);
std::size_t size_from_json(const Json& j, const char* what);

template <class F>
Json elems_to_json(const F& field, const std::vector<typename F::Elem>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(field.to_string(x));
    return a;
}

template <class F>
std::vector<typename F::Elem> elems_from_json(const F& field, const Json& j, const char* what) {
    if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
    std::vector<typename F::Elem> out;
    for (const auto& x : j) {
        try {
            out.push_back(field.parse(scalar_text(x, what)));
        } catch (const FormatError&) {
            throw;
        } catch (const std::exception& e) {
            throw FormatError(std::string("bad ") + what + " entry: " + e.what());
        }
    }
    return out;
}

template <class F>
Json mss_to_json(const F& field, const MssInstance<typename F::Elem>& inst) {
    return {{"type", "mss"},
            {"field", field_to_json(inst.field)},
            {"k", std::to_string(inst.k)},
            {"elements", elems_to_json(field, inst.A)},
            {"targets", elems_to_json(field, inst.targets)}};
}

/// Throws FormatError; elements are validated for distinctness.
template <class F>
MssInstance<typename F::Elem> mss_from_json(const F& field, const Json& j) {
    MssInstance<typename F::Elem> inst;
    inst.field = field_from_json(j.at("field"));
    inst.k = size_from_json(j.at("k"), "k");
    inst.A = elems_from_json(field, j.at("elements"), "elements");
    inst.targets = elems_from_json(field, j.at("targets"), "targets");
    try {
        validate_instance(field, inst);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    return inst;
}

template <class F>
Json symss_to_json(const F& field, const SymSSInstance<typename F::Elem>& inst) {
    return {{"type", "symss"},
            {"field", field_to_json(inst.field)},
            {"k", std::to_string(inst.k)},
            {"elements", elems_to_json(field, inst.A)},
            {"targets", elems_to_json(field, inst.targets)}};
}

template <class F>
SymSSInstance<typename F::Elem> symss_from_json(const F& field, const Json& j) {
    SymSSInstance<typename F::Elem> inst;
    inst.field = field_from_json(j.at("field"));
    inst.k = size_from_json(j.at("k"), "k");
    inst.A = elems_from_json(field, j.at("elements"), "elements");
    inst.targets = elems_from_json(field, j.at("targets"), "targets");
    if (inst.k > inst.A.size()) throw FormatError("k exceeds the element count");
    return inst;
}

template <class F>
Json bdd_to_json(const F& field, const BddInstance<typename F::Elem>& inst) {
    return {{"type", "bdd"},
            {"field", field_to_json(inst.field)},
            {"points", elems_to_json(field, inst.D)},
            {"targets", elems_to_json(field, inst.y)},
            {"K", std::to_string(inst.K)},
            {"d", std::to_string(inst.d)}};
}

template <class F>
BddInstance<typename F::Elem> bdd_from_json(const F& field, const Json& j) {
    BddInstance<typename F::Elem> inst;
    inst.field = field_from_json(j.at("field"));
    inst.D = elems_from_json(field, j.at("points"), "points");
    inst.y = elems_from_json(field, j.at("targets"), "targets");
    inst.K = size_from_json(j.at("K"), "K");
    inst.d = size_from_json(j.at("d"), "d");
    if (inst.D.size() != inst.y.size()) throw FormatError("point and target counts differ");
    return inst;
}

template <class F>
Json poly_to_json(const F& field, const Poly<typename F::Elem>& p) {
    return {{"type", "poly"}, {"coefficients", elems_to_json(field, p.c)}};
}

template <class F>
Json witness_to_json(const F& field, const PteWitness<typename F::Elem>& w) {
    Json j{{"type", "pte"},
           {"d", std::to_string(w.d)},
           {"X", elems_to_json(field, w.X)},
           {"Y", elems_to_json(field, w.Y)}};
    if (w.ab) {
        j["a"] = field.to_string(w.ab->first);
        j["b"] = field.to_string(w.ab->second);
    }
    return j;
}

template <class F>
PteWitness<typename F::Elem> witness_from_json(const F& field, const Json& j) {
    PteWitness<typename F::Elem> w;
    w.d = size_from_json(j.at("d"), "d");
    w.X = elems_from_json(field, j.at("X"), "X");
    w.Y = elems_from_json(field, j.at("Y"), "Y");
    if (j.contains("a") != j.contains("b")) throw FormatError("a and b must appear together");
    if (j.contains("a")) w.ab = std::make_pair(field.parse(scalar_text(j["a"], "a")), field.parse(scalar_text(j["b"], "b")));
    return w;
}

/// Witness text form: "X={...}" and "Y={...}" lines.
template <class F>
std::string witness_to_text(const F& field, const PteWitness<typename F::Elem>& w) {
    auto list = [&](const std::vector<typename F::Elem>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::string e = field.to_string(v[i]);
            // Extension elements print as coefficient lists.
            if (e.find(',') != std::string::npos) e = "(" + e + ")";
            s += (i ? "," : "") + e;
        }
        return s + "}";
    };
    std::string s = "X=" + list(w.X) + "\nY=" + list(w.Y) + "\n";
    if (w.ab) s += "a=" + field.to_string(w.ab->first) + "\nb=" + field.to_string(w.ab->second) + "\n";
    return s;
}

Json subset_to_json(const Subset& s);
Subset subset_from_json(const Json& j);

/// Provenance block; the gadget itself is rebuilt from the formula on load.
Json artifacts_to_json(const ReductionArtifacts& art);
ReductionArtifacts artifacts_from_json(const Json& j);

Json report_to_json(const PropertyReport& r);

/// Parses text, mapping JSON syntax errors to FormatError.
Json parse_json(const std::string& text);

}  // namespace mssred

#endif
