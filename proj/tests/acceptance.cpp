#include <ekr/verify.hpp>

#include <cstdio>
#include <iostream>

int main()
{
    using namespace ekr;
    VerifyOptions opt;
    const auto defs = all_criteria(opt);
    std::size_t ordinal = 0;
    const auto report = run_suite("all", opt, [&](const CriterionSummary& s) {
        ++ordinal;
        const char* tag = s.pass ? (s.gating ? "PASS" : "DATA") : "FAIL";
        std::printf("[%s] %zu/%zu %s: %s (%zu checks, %.2f s, limit %.0f s)", tag, ordinal, defs.size(), s.id.c_str(),
                    s.title.c_str(), s.checks, s.seconds, s.limit_seconds);
        std::printf("\n");
        std::fflush(stdout);
    });

    for (const auto& d : report.data) std::cout << "  data " << d.criterion << ": " << d.name << " = " << d.value << '\n';
    for (const auto& c : report.checks)
        if (!c.pass)
            std::cout << "  failed " << c.criterion << ": " << c.name << " [" << c.params << "] expected " << c.expected
                      << ", got " << c.actual << '\n';
    std::cout << (report.all_pass() ? "all criteria passed" : "acceptance FAILED") << " (" << report.passed() << "/"
              << report.checks.size() << " checks, " << report.seconds << " s)\n";
    return report.all_pass() ? 0 : 1;
}
