// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <rlimit/verify.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <string>

#ifndef RLIMIT_CLI_PATH
#error "RLIMIT_CLI_PATH must point at the rlimit executable"
#endif

namespace
{

const std::map<int, std::string> kTitles = {
    {1, "preset moment rules reproduce their moments"},
    {2, "sinc approximation error within its bound"},
    {3, "scaled sinc approximation error on the lattice"},
    {4, "uniform periodic sinc error and decay rate"},
    {5, "prolate eigenvalue identity"},
    {6, "eigenvalue count above one half"},
    {7, "projection error bounds in 1D and 2D"},
    {8, "Nyquist delta train reconstruction"},
    {9, "triangle kernel scaling and surrogate error"},
    {10, "symmetry invariance of the equilateral and tetrahedral rules"},
    {11, "cone kernel surrogate error"},
    {12, "full CLI verification within 600 s"},
};

} // namespace

int main()
{
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    const auto report = rlimit::run_verification({"all"});

    bool ok = true;
    for (int c = 1; c <= 11; ++c)
    {
        bool pass = true;
        int n = 0;
        for (const auto& k : report.checks)
        {
            if (k.criterion != c)
                continue;
            ++n;
            pass = pass && k.pass;
            std::printf("    [%s] %s: measured %.3e, bound %.3e%s%s\n", k.pass ? "ok" : "!!", k.name.c_str(),
                        k.measured, k.bound, k.note.empty() ? "" : ", ", k.note.c_str());
        }
        pass = pass && n > 0;
        ok = ok && pass;
        std::printf("criterion %2d %s: %s\n", c, pass ? "PASS" : "FAIL", kTitles.at(c).c_str());
    }

    const auto dir = std::filesystem::temp_directory_path() / "rlimit_acceptance";
    std::filesystem::create_directories(dir);
    const std::string cmd = std::string("\"") + RLIMIT_CLI_PATH + "\" verify --out \"" + dir.string() + "\" > \"" +
                            (dir / "verify.log").string() + "\" 2>&1";
    const auto t0 = std::chrono::steady_clock::now();
    const int rc = std::system(cmd.c_str());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass12 = rc == 0 && secs < 600.0 && std::filesystem::exists(dir / "verify_report.json");
    std::printf("    [%s] rlimit verify: exit %d, %.1f s\n", pass12 ? "ok" : "!!", rc, secs);
    std::printf("criterion 12 %s: %s\n", pass12 ? "PASS" : "FAIL", kTitles.at(12).c_str());
    ok = ok && pass12;

    std::printf("acceptance: %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}
