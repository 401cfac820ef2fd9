#include <cstdio>

#include "arq/selftest.hpp"

int main() {
    auto results = arq::run_selftest();
    for (const auto& r : results) {
        if (r.passed)
            std::printf("PASS %s: %s\n", r.name.c_str(), r.detail.c_str());
        else
            std::printf("FAIL %s: %s\n", r.name.c_str(), r.detail.c_str());
    }
    return arq::all_passed(results) ? 0 : 1;
}
