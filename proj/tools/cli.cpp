#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "mssred/oracles.hpp"
#include "mssred/selftest.hpp"
#include "mssred/serialize.hpp"

namespace mssred::cli {

namespace {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json(const std::string& path) { return parse_json(read_file(path)); }

std::string type_of(const Json& doc) {
    if (!doc.is_object() || !doc.contains("type")) throw FormatError("document has no type tag");
    return doc.at("type").get<std::string>();
}

void expect_type(const Json& doc, std::initializer_list<const char*> allowed) {
    const std::string t = type_of(doc);
    std::string names;
    for (const char* a : allowed) {
        if (t == a) return;
        names += (names.empty() ? "" : " or ") + std::string(a);
    }
    throw FormatError("expected a " + names + " document, got " + t);
}

BigInt parse_bigint(const std::string& s, const char* what) {
    try {
        return BigInt::parse(s);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(what) + ": not an integer");
    }
}

BigRat parse_bigrat(const std::string& s, const char* what) {
    try {
        return BigRat::parse(s);
    } catch (const std::exception&) {
        throw UsageError(std::string(what) + ": not a rational");
    }
}

std::uint32_t small_prime(const std::string& s, const char* what) {
    BigInt p = parse_bigint(s, what);
    if (p.sign() <= 0 || !p.fits_u64() || p.to_u64() > UINT32_MAX) throw UsageError(std::string(what) + " must be below 2^32");
    if (!is_prime(p)) throw UsageError(std::string(what) + " must be prime");
    return static_cast<std::uint32_t>(p.to_u64());
}

Assignment parse_assignment(const std::string& s) {
    Assignment z;
    for (char c : s) {
        if (c == '1' || c == 't' || c == 'T') z.push_back(true);
        else if (c == '0' || c == 'f' || c == 'F') z.push_back(false);
        else if (c != ',' && c != ' ') throw UsageError("assignment must be a 0/1 string");
    }
    return z;
}

std::string assignment_text(const Assignment& z) {
    std::string s;
    for (bool b : z) s += b ? '1' : '0';
    return s;
}

// Writes data to the --out path, or to the output stream when none was given.
class Sink {
   public:
    explicit Sink(std::ostream& out) : out_(out) {}
    std::string path;
    void write(const std::string& text) const {
        if (path.empty() || path == "-") {
            out_ << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw UsageError("cannot write " + path);
        f << text;
    }
    void write(const Json& j) const { write(j.dump(2) + "\n"); }

   private:
    std::ostream& out_;
};

struct Globals {
    unsigned jobs = 1;
};

ReductionArtifacts artifacts_of(const Json& doc) {
    if (!doc.contains("artifacts")) throw FormatError("instance carries no reduction artifacts");
    return artifacts_from_json(doc.at("artifacts"));
}

Subset checked_subset(const Json& j, std::size_t n) {
    Subset s = subset_from_json(j);
    for (auto i : s)
        if (i >= n) throw FormatError("subset index " + std::to_string(i) + " out of range");
    return s;
}

// ------------------------------------------------------------------ subcommands

struct ReduceArgs {
    std::string sat;
    std::size_t d = 1;
    std::string field = "rational";
    std::optional<std::string> p;
    std::optional<std::size_t> ell;
};

int do_reduce(const ReduceArgs& a, const Sink& sink, std::ostream& err) {
    SatInstance phi;
    try {
        phi = parse_one_in_three(read_file(a.sat));
    } catch (const ParseError& e) {
        throw FormatError(a.sat + ": " + e.what());
    }
    if (a.d < 1) throw UsageError("--d must be at least 1");
    Reduction red = sat_to_mss(phi, a.d);
    if (!red.artifacts.warning.empty()) err << "warning: " << red.artifacts.warning << "\n";
    Json doc;
    if (a.field == "rational") {
        if (a.p || a.ell) throw UsageError("--p and --ell need --field fp or fq");
        doc = mss_to_json(RationalField{}, red.instance);
    } else if (a.field == "fp") {
        if (a.ell) throw UsageError("--ell needs --field fq");
        std::optional<BigInt> p;
        if (a.p) {
            p = parse_bigint(*a.p, "--p");
            if (!is_prime(*p)) throw UsageError("--p must be prime");
            const BigInt bound = transport_bound(red.instance);
            if (!(*p > bound)) throw UsageError("--p must exceed the transport bound " + bound.to_string());
        }
        PrimeTransport pt = transport_to_prime_field(red.instance, p);
        doc = mss_to_json(PrimeField(pt.p), pt.instance);
        doc["transport"] = {{"scale", pt.scale.to_string()}, {"bound", pt.bound.to_string()}, {"mersenne", pt.mersenne}};
    } else if (a.field == "fq") {
        const std::uint32_t p = small_prime(a.p.value_or("13"), "--p");
        std::size_t ell = a.ell.value_or(0);
        if (!a.ell) ell = suggest_ext_degree(p, laurent_reduction(red.artifacts, p).ell_min);
        ExtTransport et = transport_to_ext_field(red.artifacts, p, ell);
        doc = mss_to_json(ExtField(et.instance.field), et.instance);
        doc["transport"] = {{"h", std::to_string(et.h)}, {"ell_min", std::to_string(et.ell_min)}};
    } else {
        throw UsageError("--field must be rational, fp or fq");
    }
    doc["artifacts"] = artifacts_to_json(red.artifacts);
    sink.write(doc);
    return ok;
}

int do_to_symss(const std::string& path, const Sink& sink) {
    const Json doc = read_json(path);
    expect_type(doc, {"mss"});
    Json out = visit_field(field_from_json(doc.at("field")), [&](const auto& F) {
        return symss_to_json(F, mss_to_symss(F, mss_from_json(F, doc)));
    });
    if (doc.contains("artifacts")) out["artifacts"] = doc["artifacts"];
    sink.write(out);
    return ok;
}

int do_to_bdd(const std::string& path, const Sink& sink) {
    const Json doc = read_json(path);
    expect_type(doc, {"mss", "symss"});
    sink.write(visit_field(field_from_json(doc.at("field")), [&](const auto& F) {
        auto sym = type_of(doc) == "mss" ? mss_to_symss(F, mss_from_json(F, doc)) : symss_from_json(F, doc);
        return bdd_to_json(F, symss_to_bdd(F, sym));
    }));
    return ok;
}

int do_encode(const std::string& path, const std::string& assignment, const Sink& sink) {
    const Json doc = read_json(path);
    const ReductionArtifacts art = artifacts_of(doc);
    Assignment z = parse_assignment(assignment);
    if (z.size() != art.phi.n) throw UsageError("assignment length differs from the variable count");
    sink.write(subset_to_json(encode_assignment(art, z)));
    return ok;
}

int do_extract(const std::string& inst_path, const std::string& subset_path, const Sink& sink) {
    const Json doc = read_json(inst_path);
    expect_type(doc, {"mss"});
    const ReductionArtifacts art = artifacts_of(doc);
    const Json sj = read_json(subset_path);
    return visit_field(field_from_json(doc.at("field")), [&](const auto& F) {
        auto inst = mss_from_json(F, doc);
        const Subset S = checked_subset(sj, inst.A.size());
        ExtractResult r = extract_assignment(F, art, inst, S);
        Json out{{"type", "extraction"}, {"status", to_string(r.status)}};
        if (r.status != ExtractStatus::no_match) out["assignment"] = assignment_text(r.z);
        sink.write(out);
        return r.status == ExtractStatus::assignment ? ok : no;
    });
}

int do_verify(const std::string& inst_path, const std::string& subset_path, const Sink& sink) {
    const Json doc = read_json(inst_path);
    expect_type(doc, {"mss", "symss"});
    const Json sj = read_json(subset_path);
    return visit_field(field_from_json(doc.at("field")), [&](const auto& F) {
        bool met;
        if (type_of(doc) == "mss") {
            auto inst = mss_from_json(F, doc);
            met = meets_targets(F, inst, checked_subset(sj, inst.A.size()));
        } else {
            auto inst = symss_from_json(F, doc);
            met = meets_symmetric_targets(F, inst, checked_subset(sj, inst.A.size()));
        }
        sink.write(Json{{"type", "verification"}, {"meets_targets", met}});
        return met ? ok : no;
    });
}

struct PropsArgs {
    std::string instance, sat;
    std::optional<std::size_t> d;
    std::uint64_t probes = 10000;
    std::uint64_t seed = 0;
};

int do_check_props(const PropsArgs& a, const Sink& sink) {
    ReductionArtifacts art;
    if (!a.instance.empty()) {
        if (!a.sat.empty() || a.d) throw UsageError("give either --instance or --sat with --d");
        art = artifacts_of(read_json(a.instance));
    } else {
        if (a.sat.empty() || !a.d) throw UsageError("check-props needs --instance, or --sat and --d");
        SatInstance phi;
        try {
            phi = parse_one_in_three(read_file(a.sat));
        } catch (const ParseError& e) {
            throw FormatError(a.sat + ": " + e.what());
        }
        art = sat_to_mss(phi, *a.d).artifacts;
    }
    PropertyReport rep = verify_properties(art, PropertyOptions{a.probes, a.seed});
    sink.write(report_to_json(rep));
    return rep.passed() ? ok : no;
}

int do_solve(const std::string& path, std::uint64_t budget, const Globals& g, const Sink& sink) {
    const Json doc = read_json(path);
    expect_type(doc, {"mss", "symss"});
    SearchBudget b;
    b.max_subsets = budget;
    b.jobs = g.jobs;
    return visit_field(field_from_json(doc.at("field")), [&](const auto& F) {
        std::optional<Subset> S = type_of(doc) == "mss" ? brute_force_mss(F, mss_from_json(F, doc), b)
                                                        : brute_force_symss(F, symss_from_json(F, doc), b);
        sink.write(S ? subset_to_json(*S) : Json{{"type", "no_solution"}});
        return S ? ok : no;
    });
}

int do_reconstruct(const std::string& path, std::uint64_t budget, const Globals& g, const Sink& sink) {
    const Json doc = read_json(path);
    expect_type(doc, {"bdd"});
    SearchBudget b;
    b.max_subsets = budget;
    b.jobs = g.jobs;
    return visit_field(field_from_json(doc.at("field")), [&](const auto& F) {
        auto inst = bdd_from_json(F, doc);
        auto p = exhaustive_reconstruct(F, inst, b);
        if (!p) {
            sink.write(Json{{"type", "no_solution"}});
            return int(no);
        }
        Json out = poly_to_json(F, *p);
        out["agreements"] = std::to_string(count_agreements(F, inst, *p));
        sink.write(out);
        return int(ok);
    });
}

struct PteArgs {
    std::string mode;
    std::optional<std::size_t> k, d;
    std::string a = "0", b = "0";
    std::size_t n_surrogate = 0;
    std::size_t t = 1;
    std::string q;
    std::optional<std::size_t> s;
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 0;
    std::vector<std::string> r;
    bool mirror = false;
    std::string format = "text";
};

// q = p^ell with p < 2^32.
std::pair<std::uint32_t, std::size_t> split_prime_power(const std::string& text) {
    BigInt q = parse_bigint(text, "--q");
    if (q < BigInt(2)) throw UsageError("--q must be a prime power");
    if (is_prime(q)) return {small_prime(text, "--q"), 1};
    for (std::uint32_t p = 2; BigInt(static_cast<long long>(p)) * BigInt(static_cast<long long>(p)) <= q; ++p) {
        if (!is_prime(BigInt(static_cast<long long>(p)))) continue;
        BigInt v = q;
        std::size_t e = 0;
        const BigInt P(static_cast<long long>(p));
        while (mod(v, P).is_zero()) {
            v = v / P;
            ++e;
        }
        if (e == 0) continue;
        if (v == BigInt(1)) return {p, e};
        break;
    }
    throw UsageError("--q must be a prime power");
}

template <class F>
int emit_witness(const F& field, const PteWitness<typename F::Elem>& w, const PteArgs& a, const Sink& sink) {
    if (a.format == "json") sink.write(witness_to_json(field, w));
    else sink.write(witness_to_text(field, w));
    return ok;
}

template <class F>
int run_sampler(const F& field, const PteArgs& a, const Sink& sink, std::ostream& err) {
    using E = typename F::Elem;
    std::vector<E> r;
    if (!a.r.empty()) {
        if (a.d && *a.d != a.r.size()) throw UsageError("--d differs from the number of --r values");
        for (const auto& s : a.r) {
            try {
                r.push_back(field.parse(s));
            } catch (const std::exception&) {
                throw UsageError("--r: bad field element '" + s + "'");
            }
        }
    } else {
        if (!a.d) throw UsageError("sample needs --d or explicit --r residuals");
        std::mt19937_64 rng(a.seed ^ 0x9e3779b97f4a7c15ULL);
        for (std::size_t j = 0; j < *a.d; ++j) r.push_back(random_element(field, rng));
    }
    SamplerOptions so;
    so.mirror = a.mirror;
    auto res = sample_pte_over_fq(field, r, a.s.value_or(3 * r.size()), a.trials, a.seed, so);
    err << "trials " << res.trials << ", hits " << res.hits << "\n";
    if (!res.witness) {
        sink.write(a.format == "json" ? Json{{"type", "no_solution"}}.dump(2) + "\n" : std::string("none\n"));
        return no;
    }
    return emit_witness(field, *res.witness, a, sink);
}

int do_pte(const PteArgs& a, const Sink& sink, std::ostream& err) {
    if (a.format != "text" && a.format != "json") throw UsageError("--format must be text or json");
    if (a.mode == "prouhet") {
        if (!a.k) throw UsageError("prouhet needs --k");
        return emit_witness(RationalField{}, prouhet_pte(*a.k), a, sink);
    }
    if (a.mode == "inhomogeneous") {
        if (!a.d) throw UsageError("inhomogeneous needs --d");
        auto res = solve_inhomogeneous_pte(parse_bigrat(a.a, "--a"), parse_bigrat(a.b, "--b"), *a.d,
                                           PteOptions{a.n_surrogate, a.t});
        if (!res.aux.warning.empty()) err << "warning: " << res.aux.warning << "\n";
        return emit_witness(RationalField{}, res.witness, a, sink);
    }
    if (a.mode == "sample") {
        if (a.q.empty()) throw UsageError("sample needs --q");
        auto [p, ell] = split_prime_power(a.q);
        if (ell == 1) return run_sampler(SmallPrimeField(p), a, sink, err);
        return run_sampler(ExtField(make_ext_field(BigInt(static_cast<long long>(p)), ell)), a, sink, err);
    }
    throw UsageError("--mode must be prouhet, inhomogeneous or sample");
}

int do_selftest(const std::vector<std::string>& ids, std::uint64_t seed, const Globals& g, std::ostream& out) {
    const auto known = criterion_ids();
    for (const auto& id : ids)
        if (std::find(known.begin(), known.end(), id) == known.end()) throw UsageError("unknown criterion " + id);
    bool all = true;
    for (const auto& id : ids.empty() ? known : ids) {
        CriterionResult r = run_criterion(id, SelftestOptions{seed, g.jobs});
        out << format_result(r) << "\n" << std::flush;
        all = all && r.passed;
    }
    out << (all ? "ALL PASS" : "SOME FAILED") << "\n";
    return all ? ok : no;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact reductions from 1-in-3-SAT to moments subset sum and Reed-Solomon decoding", "mssred"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--jobs", g.jobs, "Worker threads for the brute-force oracles")->check(CLI::Range(1u, 256u));

    Sink sink(out);
    std::function<int()> action;
    auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", sink.path, "Output path (default: stdout)"); };

    ReduceArgs ra;
    auto* reduce = app.add_subcommand("reduce", "1-in-3-SAT to MSS(d)");
    reduce->add_option("--sat", ra.sat, "Formula in o13 format")->required();
    reduce->add_option("--d", ra.d, "Number of moments")->required();
    reduce->add_option("--field", ra.field, "rational, fp or fq")->capture_default_str();
    reduce->add_option("--p", ra.p, "Prime for fp (above the transport bound) or fq (default 13)");
    reduce->add_option("--ell", ra.ell, "Extension degree for fq (default: smallest admissible)");
    out_opt(reduce);
    reduce->callback([&] { action = [&] { return do_reduce(ra, sink, err); }; });

    std::string inst_path, subset_path, assignment;
    auto* to_symss = app.add_subcommand("to-symss", "MSS to symmetric subset sum via Newton's identities");
    to_symss->add_option("--instance", inst_path)->required();
    out_opt(to_symss);
    to_symss->callback([&] { action = [&] { return do_to_symss(inst_path, sink); }; });

    auto* to_bdd = app.add_subcommand("to-bdd", "Symmetric subset sum to Reed-Solomon bounded distance decoding");
    to_bdd->add_option("--instance", inst_path)->required();
    out_opt(to_bdd);
    to_bdd->callback([&] { action = [&] { return do_to_bdd(inst_path, sink); }; });

    auto* encode = app.add_subcommand("encode", "Exactly-one assignment to subset");
    encode->add_option("--instance", inst_path)->required();
    encode->add_option("--assignment", assignment, "0/1 string, z_1 first")->required();
    out_opt(encode);
    encode->callback([&] { action = [&] { return do_encode(inst_path, assignment, sink); }; });

    auto* extract = app.add_subcommand("extract", "Subset to assignment");
    extract->add_option("--instance", inst_path)->required();
    extract->add_option("--subset", subset_path)->required();
    out_opt(extract);
    extract->callback([&] { action = [&] { return do_extract(inst_path, subset_path, sink); }; });

    auto* verify = app.add_subcommand("verify", "Check a subset against the targets");
    verify->add_option("--instance", inst_path)->required();
    verify->add_option("--subset", subset_path)->required();
    out_opt(verify);
    verify->callback([&] { action = [&] { return do_verify(inst_path, subset_path, sink); }; });

    PropsArgs pa;
    auto* props = app.add_subcommand("check-props", "Gadget property report (P1-P4)");
    props->add_option("--instance", pa.instance, "Instance with artifacts");
    props->add_option("--sat", pa.sat, "Formula in o13 format");
    props->add_option("--d", pa.d);
    props->add_option("--probes", pa.probes, "Random subsets for the bimodality probe")->capture_default_str();
    props->add_option("--seed", pa.seed)->capture_default_str();
    out_opt(props);
    props->callback([&] { action = [&] { return do_check_props(pa, sink); }; });

    std::uint64_t budget = SearchBudget{}.max_subsets;
    auto* solve = app.add_subcommand("solve", "Brute-force MSS or symmetric subset sum");
    solve->add_option("--instance", inst_path)->required();
    solve->add_option("--budget", budget, "Maximum number of subsets")->capture_default_str();
    out_opt(solve);
    solve->callback([&] { action = [&] { return do_solve(inst_path, budget, g, sink); }; });

    auto* reconstruct = app.add_subcommand("reconstruct", "Exhaustive polynomial reconstruction");
    reconstruct->add_option("--instance", inst_path)->required();
    reconstruct->add_option("--budget", budget, "Maximum number of point subsets")->capture_default_str();
    out_opt(reconstruct);
    reconstruct->callback([&] { action = [&] { return do_reconstruct(inst_path, budget, g, sink); }; });

    PteArgs pt;
    auto* pte = app.add_subcommand("pte", "Prouhet-Tarry-Escott solvers");
    pte->add_option("--mode", pt.mode, "prouhet, inhomogeneous or sample")->required();
    pte->add_option("--k", pt.k, "Prouhet degree");
    pte->add_option("--d", pt.d, "Degree");
    pte->add_option("--a", pt.a)->capture_default_str();
    pte->add_option("--b", pt.b)->capture_default_str();
    pte->add_option("--n-surrogate", pt.n_surrogate, "Gadget n (0: smallest with d^2 + d < n)")->capture_default_str();
    pte->add_option("--t", pt.t, "Gadget variable index")->capture_default_str();
    pte->add_option("--q", pt.q, "Field size (prime or prime power)");
    pte->add_option("--s", pt.s, "Tuple length (default 3d)");
    pte->add_option("--trials", pt.trials)->capture_default_str();
    pte->add_option("--seed", pt.seed)->capture_default_str();
    pte->add_option("--r", pt.r, "Residuals r_1..r_d (default: drawn from the seed)");
    pte->add_flag("--mirror", pt.mirror, "Set y = x");
    pte->add_option("--format", pt.format, "text or json")->capture_default_str();
    out_opt(pte);
    pte->callback([&] { action = [&] { return do_pte(pt, sink, err); }; });

    std::vector<std::string> ids;
    std::uint64_t st_seed = SelftestOptions{}.seed;
    auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
    selftest->add_option("ids", ids, "Criteria to run (default: all)");
    selftest->add_option("--seed", st_seed)->capture_default_str();
    selftest->callback([&] { action = [&] { return do_selftest(ids, st_seed, g, out); }; });

    std::vector<const char*> argv{"mssred"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        for (auto* sub : app.get_subcommands())
            if (sub->parsed()) {
                err << sub->help();
                return usage;
            }
        err << app.help();
        return usage;
    }

    try {
        return action();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << "\n";
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << " (raise --budget)\n";
    } catch (const Json::exception& e) {
        err << "format error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal;
    }
    return usage;
}

}  // namespace mssred::cli
