#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "gic/verify.hpp"

// One line per acceptance criterion; exits nonzero when any check fails.
int main() {
    auto results = gic::run_acceptance();
    std::map<int, std::vector<const gic::CriterionResult*>> grouped;
    for (const auto& r : results) grouped[r.criterion].push_back(&r);
    bool all = true;
    for (const auto& [idx, entries] : grouped) {
        bool ok = true;
        std::string names, failing;
        for (const auto* e : entries) {
            ok = ok && e->pass;
            if (!e->pass) failing += (failing.empty() ? "" : ", ") + e->name;
            names += (names.empty() ? "" : ", ") + e->name;
        }
        all = all && ok;
        if (ok) {
            printf("[PASS] criterion %2d: %s\n", idx, names.c_str());
        } else {
            printf("[FAIL] criterion %2d: %s\n", idx, failing.c_str());
            for (const auto* e : entries)
                if (!e->pass)
                    printf("       %s measured %.12g limit %.12g %s\n", e->name.c_str(),
                           e->measured, e->limit, e->detail.c_str());
        }
    }
    return all ? 0 : 1;
}
