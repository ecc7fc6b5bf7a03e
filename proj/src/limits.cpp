#include "qchroma/limits.hpp"

#include <cstdlib>
#include <string>

namespace qchroma {

namespace {

int env_int(const char* name, int fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr) return fallback;
    try {
        int v = std::stoi(raw);
        return v > 0 ? v : fallback;
    } catch (...) {
        return fallback;
    }
}

} // namespace

Limits& limits() {
    static Limits instance{
        env_int("QCHROMA_MAX_PERM_N", 8),
        env_int("QCHROMA_MAX_DEGREE", 12),
    };
    return instance;
}

void require_perm_budget(int n, const char* what) {
    if (n > limits().max_perm_n) {
        throw ResourceGuardError(std::string(what) + ": n=" + std::to_string(n) +
                                 " exceeds enumeration guard " +
                                 std::to_string(limits().max_perm_n));
    }
}

void require_degree_budget(int degree, const char* what) {
    if (degree > limits().max_degree) {
        throw ResourceGuardError(std::string(what) + ": degree " + std::to_string(degree) +
                                 " exceeds ring-degree guard " +
                                 std::to_string(limits().max_degree));
    }
}

} // namespace qchroma
