#include "mssred/satss.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>

namespace mssred {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n' || text[i] == ';') {
            out.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long to_int(std::string_view tok, std::size_t line) {
    long long v = 0;
    const char* b = tok.data();
    const char* e = tok.data() + tok.size();
    if (b != e && *b == '+') ++b;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e) throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    return v;
}

void check_clause(const Clause& c, std::size_t n, std::size_t line) {
    for (auto l : c) {
        long long v = std::llabs(l);
        if (l == 0 || static_cast<std::size_t>(v) > n)
            throw ParseError(line, "literal " + std::to_string(l) + " out of range [1, " + std::to_string(n) + "]");
    }
    for (auto l : c)
        for (auto k : c)
            if (l == -k) throw ParseError(line, "clause contains a literal and its negation");
}

}  // namespace

SatInstance parse_one_in_three(std::string_view text) {
    SatInstance phi;
    bool header = false;
    std::size_t expected = 0;
    std::size_t lineno = 0;
    for (auto raw : split_lines(text)) {
        ++lineno;
        auto tok = tokens(raw);
        if (tok.empty() || tok[0][0] == 'c') continue;
        if (!header) {
            if (tok.size() != 4 || tok[0] != "p" || tok[1] != "o13")
                throw ParseError(lineno, "expected header 'p o13 <n> <m>'");
            long long n = to_int(tok[2], lineno), m = to_int(tok[3], lineno);
            if (n < 1 || m < 0) throw ParseError(lineno, "header counts out of range");
            phi.n = static_cast<std::size_t>(n);
            expected = static_cast<std::size_t>(m);
            header = true;
            continue;
        }
        if (tok.size() != 4 || to_int(tok[3], lineno) != 0)
            throw ParseError(lineno, "clause must be three literals followed by 0");
        Clause c;
        for (int i = 0; i < 3; ++i) {
            long long v = to_int(tok[static_cast<std::size_t>(i)], lineno);
            if (v < -1000000000LL || v > 1000000000LL) throw ParseError(lineno, "literal out of range");
            c[static_cast<std::size_t>(i)] = static_cast<Literal>(v);
        }
        check_clause(c, phi.n, lineno);
        if (phi.clauses.size() == expected) throw ParseError(lineno, "more clauses than declared");
        phi.clauses.push_back(c);
    }
    if (!header) throw ParseError(lineno, "missing header");
    if (phi.clauses.size() != expected)
        throw ParseError(lineno, "declared " + std::to_string(expected) + " clauses, found " +
                                     std::to_string(phi.clauses.size()));
    return phi;
}

std::string format_one_in_three(const SatInstance& phi) {
    std::ostringstream os;
    os << "p o13 " << phi.n << ' ' << phi.m() << '\n';
    for (const auto& c : phi.clauses) os << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
    return os.str();
}

void validate(const SatInstance& phi) {
    if (phi.n == 0) throw std::invalid_argument("formula needs at least one variable");
    for (std::size_t j = 0; j < phi.m(); ++j) {
        try {
            check_clause(phi.clauses[j], phi.n, j + 1);
        } catch (const ParseError& e) {
            throw std::invalid_argument(std::string("clause ") + std::to_string(j + 1) + ": " + e.what());
        }
    }
}

bool eval_exactly_one(const SatInstance& phi, const Assignment& z) {
    if (z.size() != phi.n) throw std::invalid_argument("assignment length differs from n");
    for (const auto& c : phi.clauses) {
        int sat = 0;
        for (auto l : c) {
            bool v = z[static_cast<std::size_t>(std::abs(l) - 1)];
            sat += (l > 0) == v;
        }
        if (sat != 1) return false;
    }
    return true;
}

int occurrences(const Clause& c, Literal lit) {
    int k = 0;
    for (auto l : c) k += l == lit;
    return k;
}

SubsetSumInstance sat_to_subset_sum(const SatInstance& phi) {
    validate(phi);
    const std::size_t n = phi.n, m = phi.m();
    if (m == 0) throw std::invalid_argument("formula with no clauses: a'_t = b'_t for every t");
    SubsetSumInstance out;
    const BigInt ten_m = BigInt::pow10(m);
    for (std::size_t t = 1; t <= n; ++t) {
        BigInt a = ten_m * BigInt::pow10(n - t), b = a;
        for (std::size_t j = 1; j <= m; ++j) {
            const BigInt w = BigInt::pow10(m - j);
            a += BigInt(occurrences(phi.clauses[j - 1], static_cast<Literal>(t))) * w;
            b += BigInt(occurrences(phi.clauses[j - 1], -static_cast<Literal>(t))) * w;
        }
        out.a.push_back(std::move(a));
        out.b.push_back(std::move(b));
    }
    std::set<BigInt> seen;
    for (std::size_t t = 0; t < n; ++t) {
        if (!seen.insert(out.a[t]).second || !seen.insert(out.b[t]).second)
            throw std::invalid_argument("subset-sum numbers are not distinct (variable " + std::to_string(t + 1) +
                                        " collides)");
    }
    BigInt ones_n = 0, ones_m = 0;
    for (std::size_t i = 0; i < n; ++i) ones_n = ones_n * BigInt(10) + BigInt(1);
    for (std::size_t j = 0; j < m; ++j) ones_m = ones_m * BigInt(10) + BigInt(1);
    out.target = ten_m * ones_n + ones_m;
    return out;
}

std::vector<Assignment> brute_force_exactly_one(const SatInstance& phi, std::size_t limit) {
    if (phi.n > limit) throw std::invalid_argument("brute_force_exactly_one: n exceeds limit " + std::to_string(limit));
    std::vector<Assignment> out;
    const std::uint64_t total = std::uint64_t{1} << phi.n;
    Assignment z(phi.n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t t = 0; t < phi.n; ++t) z[t] = (mask >> (phi.n - 1 - t)) & 1;
        if (eval_exactly_one(phi, z)) out.push_back(z);
    }
    return out;
}

}  // namespace mssred
