#pragma once

#include <cstdlib>
#include <string>

namespace ecom {

/// Resource limits shared by the enumeration-heavy operations.  The
/// defaults are conservative; the CLI exposes each as a flag and reads
/// ECOM_BUDGET_MB for the memory estimate cap.
struct Budget {
    long long max_group_order = 4096;
    long long max_subgroups = 1 << 20;
    long long max_poset_elements = 1 << 20;
    long long max_simplices = 4'000'000;
    long long max_cosets = 1'000'000;  // Todd-Coxeter table rows
    long long mem_mb = 4096;

    static Budget from_env() {
        Budget b;
        if (const char* s = std::getenv("ECOM_BUDGET_MB")) {
            char* end = nullptr;
            long long v = std::strtoll(s, &end, 10);
            if (end && *end == '\0' && v > 0) b.mem_mb = v;
        }
        return b;
    }
};

}  // namespace ecom
