#include "qchroma/positivity.hpp"

#include <algorithm>
#include <set>

#include "qchroma/kernels.hpp"
#include "qchroma/limits.hpp"

namespace qchroma {

namespace {

void check_k(const HessFunc& m, int k) {
    if (k < 1 || k >= m.n())
        throw KOutOfRange("positivity: need 1 <= k < n, got k=" + std::to_string(k));
}

std::string word_str(const std::vector<int>& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

bool in_S2(const HessFunc& m, int k, const CycWordPair& pair) {
    int n = m.n();
    if (static_cast<int>(pair.w.size()) != n - k || static_cast<int>(pair.z.size()) != k)
        return false;
    std::vector<bool> seen(n + 1, false);
    auto mark = [&](int v) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = true;
        return true;
    };
    for (int v : pair.w)
        if (!mark(v)) return false;
    for (int v : pair.z)
        if (!mark(v)) return false;
    if (pair.w.empty() || pair.w[0] != 1) return false;
    for (size_t j = 0; j + 1 < pair.w.size(); ++j)
        if (pair.w[j + 1] > m(pair.w[j])) return false;
    for (size_t j = 0; j + 1 < pair.z.size(); ++j)
        if (pair.z[j + 1] > m(pair.z[j])) return false;
    if (pair.z[0] > m(pair.z.back())) return false;
    return true;
}

} // namespace

QPoly ck_poly(const HessFunc& m, int k) {
    check_k(m, k);
    int n = m.n();
    CycleClassTable classes = cycle_weight_classes(m);
    QPoly two_cycle, one_cycle;
    for (const auto& [key, weight] : classes) {
        if (key.first == n && key.second.empty()) one_cycle += weight;
        if (key.first == n - k && key.second == Partition({k})) two_cycle += weight;
    }
    return qint(k) * two_cycle - one_cycle;
}

std::vector<std::vector<int>> enum_S1(const HessFunc& m) {
    require_perm_budget(m.n(), "enum_S1");
    std::vector<std::vector<int>> out;
    for (const IncTree& tree : enum_inc_trees(m, m.n())) out.push_back(tree.word);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CycWordPair> enum_S2(const HessFunc& m, int k) {
    check_k(m, k);
    require_perm_budget(m.n(), "enum_S2");
    int n = m.n();
    std::vector<CycWordPair> out;
    for (const IncTree& tree : enum_inc_trees(m, n - k)) {
        std::vector<int> rest;
        std::vector<bool> used(n + 1, false);
        for (int v : tree.word) used[v] = true;
        for (int v = 1; v <= n; ++v)
            if (!used[v]) rest.push_back(v);
        std::sort(rest.begin(), rest.end());
        std::vector<int> z(rest);
        do {
            bool ok = true;
            for (size_t j = 0; ok && j + 1 < z.size(); ++j)
                if (z[j + 1] > m(z[j])) ok = false;
            if (ok && z[0] > m(z.back())) ok = false;
            if (ok) out.push_back({tree.word, z});
        } while (std::next_permutation(z.begin(), z.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

DeltaStep delta_map(const HessFunc& m, int k, const std::vector<int>& w) {
    check_k(m, k);
    int n = m.n();
    if (static_cast<int>(w.size()) != n)
        throw Error("delta_map: w must have length n");
    DeltaStep step;
    for (int j = 0; j <= n - k; ++j) {
        // 1-based w_{n-j-k+1} <= m(w_{n-j})
        int candidate = w[n - j - k];
        int anchor = w[n - j - 1];
        if (candidate <= m(anchor)) {
            step.j = j;
            std::vector<int> first(w.begin(), w.begin() + (n - j - k));
            first.insert(first.end(), w.begin() + (n - j), w.end());
            std::vector<int> mid(w.begin() + (n - j - k), w.begin() + (n - j));
            std::rotate(mid.begin(), mid.begin() + (j % k), mid.end());
            step.image = {std::move(first), std::move(mid)};
            if (!in_S2(m, k, step.image))
                throw DeltaNotWellDefined("Delta image outside S_2 for w=" + word_str(w) +
                                          ", j=" + std::to_string(j));
            return step;
        }
        step.violations.push_back(std::to_string(candidate) + " > m(" + std::to_string(anchor) +
                                  ")");
    }
    throw DeltaNotWellDefined("no admissible shift j for w=" + word_str(w));
}

DeltaReport check_delta_injective(const HessFunc& m, int k) {
    DeltaReport report;
    std::vector<std::vector<int>> s1 = enum_S1(m);
    std::vector<CycWordPair> s2 = enum_S2(m, k);
    report.s1_count = s1.size();
    report.s2_count = s2.size();
    std::set<CycWordPair> images;
    bool injective = true;
    for (const auto& w : s1) {
        DeltaStep step = delta_map(m, k, w);
        if (!images.insert(step.image).second) injective = false;
        report.table.push_back({w, std::move(step)});
    }
    report.injective = injective;
    report.ck = ck_poly(m, k);
    Int at_one = report.ck.eval(Int(1));
    report.count_identity =
        at_one == Int(static_cast<long>(report.s2_count) - static_cast<long>(report.s1_count));
    return report;
}

} // namespace qchroma
