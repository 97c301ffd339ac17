#pragma once

// Scripted end-to-end run of the command-line tool.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "acceptance_ggm.hpp"

#ifndef HVE_CLI_PATH
#error "HVE_CLI_PATH must name the hve executable"
#endif

namespace acceptance {

namespace cli_detail {

inline int run(const std::string& args) {
    const std::string cmd = std::string("\"") + HVE_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

inline std::vector<char> slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string q(const std::filesystem::path& p) { return "\"" + p.string() + "\""; }

}  // namespace cli_detail

inline Result cli_criterion() {
    using namespace cli_detail;
    namespace fs = std::filesystem;
    const fs::path root = fs::temp_directory_path() / ("hve-accept-" + std::to_string(std::random_device{}()));
    fs::create_directories(root);

    std::mt19937_64 gen(7);
    std::vector<char> payload(200);
    for (auto& c : payload) c = static_cast<char>(gen());
    payload[0] = 0;
    {
        std::ofstream(root / "msg.bin", std::ios::binary).write(payload.data(), static_cast<std::streamsize>(payload.size()));
    }

    std::string detail;
    bool pass = true;
    auto check = [&](bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    };

    for (const std::string scheme : {"bw", "sw", "ll"}) {
        const fs::path d = root / scheme;
        const std::string pattern = scheme == "sw" ? "alice,*,?,bob" : "alice,*,carol,bob";
        check(run("setup --scheme " + scheme + " --len 4 --seed a1b2 --out " + q(d / "k1")) == 0, scheme + " setup");
        check(run("setup --scheme " + scheme + " --len 4 --seed a1b2 --out " + q(d / "k2")) == 0, scheme + " setup");
        check(run("token --sk " + q(d / "k1/sk.hve") + " --pattern \"" + pattern + "\" --seed 01 --out " +
                  q(d / "tk1.hve")) == 0, scheme + " token");
        check(run("token --sk " + q(d / "k2/sk.hve") + " --pattern \"" + pattern + "\" --seed 01 --out " +
                  q(d / "tk2.hve")) == 0, scheme + " token");
        fs::path tk = d / "tk1.hve";
        if (scheme == "sw") {
            check(run("delegate --token " + q(tk) + " --slot 2 --value carol --pk " + q(d / "k1/pk.hve") +
                      " --seed 02 --out " + q(d / "dtk.hve")) == 0, "sw delegate");
            tk = d / "dtk.hve";
        }
        for (const std::string n : {"1", "2"})
            check(run("encrypt --pk " + q(d / ("k" + n) / "pk.hve") + " --attrs alice,x,carol,bob --in " +
                      q(root / "msg.bin") + " --seed 03 --out " + q(d / ("ct" + n + ".hve"))) == 0, scheme + " encrypt");
        check(run("encrypt --pk " + q(d / "k1/pk.hve") + " --attrs alice,x,carol,eve --in " + q(root / "msg.bin") +
                  " --out " + q(d / "bad.hve")) == 0, scheme + " encrypt");

        for (const char* f : {"pk.hve", "sk.hve"})
            check(slurp(d / "k1" / f) == slurp(d / "k2" / f) && !slurp(d / "k1" / f).empty(),
                  scheme + " seeded " + f + " differs");
        check(slurp(d / "tk1.hve") == slurp(d / "tk2.hve"), scheme + " seeded token differs");
        check(slurp(d / "ct1.hve") == slurp(d / "ct2.hve"), scheme + " seeded ciphertext differs");

        const int match = run("query --token " + q(tk) + " --ct " + q(d / "ct1.hve") + " --pk " + q(d / "k1/pk.hve") +
                              " --out " + q(d / "out.bin"));
        check(match == 0, scheme + " match exit " + std::to_string(match));
        check(slurp(d / "out.bin") == payload, scheme + " payload differs");
        const int miss = run("query --token " + q(tk) + " --ct " + q(d / "bad.hve") + " --pk " + q(d / "k1/pk.hve"));
        check(miss == 3, scheme + " mismatch exit " + std::to_string(miss));
    }
    const int p3dh = run("ggm-check --builtin p3dh");
    const int ddh = run("ggm-check --builtin ddh");
    check(p3dh == 0 && ddh == 4, "ggm-check exits " + std::to_string(p3dh) + "/" + std::to_string(ddh));

    std::error_code ec;
    fs::remove_all(root, ec);
    return {pass, pass ? "bw/sw/ll pipelines: match exit 0 with identical payload, mismatch exit 3, seeded files "
                         "identical; ggm-check exits 0/4"
                       : detail};
}

}  // namespace acceptance
