#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "mssred/selftest.hpp"

int main(int argc, char** argv) {
    mssred::SelftestOptions opt;
    std::vector<std::string> only;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--seed" && i + 1 < argc) {
            opt.seed = std::strtoull(argv[++i], nullptr, 10);
        } else if (a == "--jobs" && i + 1 < argc) {
            opt.jobs = static_cast<unsigned>(std::strtoul(argv[++i], nullptr, 10));
        } else if (a.rfind("A", 0) == 0) {
            only.push_back(a);
        } else {
            std::fprintf(stderr, "usage: %s [--seed N] [--jobs N] [A1 ... A10]\n", argv[0]);
            return 2;
        }
    }
    bool ok = true;
    for (const auto& id : only.empty() ? mssred::criterion_ids() : only) {
        auto r = mssred::run_criterion(id, opt);
        std::printf("%s\n", mssred::format_result(r).c_str());
        std::fflush(stdout);
        ok = ok && r.passed;
    }
    std::printf("%s\n", ok ? "ALL PASS" : "SOME FAILED");
    return ok ? 0 : 1;
}
