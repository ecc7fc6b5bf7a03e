#include "qchroma/kernels.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qchroma/limits.hpp"

namespace qchroma {

namespace {

template <class Key, class Value>
void merge_into(std::map<Key, Value>& target, std::map<Key, Value>& local) {
    for (auto& [key, value] : local) {
        auto it = target.find(key);
        if (it == target.end())
            target.emplace(key, std::move(value));
        else
            it->second += value;
    }
}

void add_q_power(QPoly& acc, int power) {
    acc += QPoly::monomial(power);
}

// ---------------------------------------------------------------------------
// Cycle-weight kernel
// ---------------------------------------------------------------------------

/* Completes a partial one-line assignment sigma(pos..n) and classifies each
 * finished permutation by (first cycle length, rest type), weight q^{wt}. */
struct SnmWalker {
    const HessFunc& m;
    int n;
    std::vector<int> sigma;     // 1-based positions; 0 = unset
    std::vector<bool> used;     // 1-based values
    CycleClassTable table;

    explicit SnmWalker(const HessFunc& hess)
        : m(hess), n(hess.n()), sigma(hess.n() + 1, 0), used(hess.n() + 1, false) {}

    void record() {
        CycleDecomp d = cycle_decomp(std::vector<int>(sigma.begin() + 1, sigma.end()));
        int first_len = static_cast<int>(d.cycles.front().size());
        std::vector<int> rest;
        for (size_t c = 1; c < d.cycles.size(); ++c)
            rest.push_back(static_cast<int>(d.cycles[c].size()));
        auto key = std::make_pair(first_len, Partition::sorted_from(std::move(rest)));
        add_q_power(table[key], wt(m, d.word));
    }

    void walk(int pos) {
        if (pos > n) {
            record();
            return;
        }
        int bound = m(pos);
        for (int v = 1; v <= bound; ++v) {
            if (used[v]) continue;
            used[v] = true;
            sigma[pos] = v;
            walk(pos + 1);
            used[v] = false;
        }
        sigma[pos] = 0;
    }
};

/* Valid prefixes sigma(1..depth), used to split the walk into tasks. */
void snm_prefixes(const HessFunc& m, int depth, int pos, std::vector<int>& sigma,
                  std::vector<bool>& used, std::vector<std::vector<int>>& out) {
    if (pos > depth) {
        out.push_back(std::vector<int>(sigma.begin() + 1, sigma.begin() + depth + 1));
        return;
    }
    for (int v = 1; v <= m(pos); ++v) {
        if (used[v]) continue;
        used[v] = true;
        sigma[pos] = v;
        snm_prefixes(m, depth, pos + 1, sigma, used, out);
        used[v] = false;
    }
}

// ---------------------------------------------------------------------------
// Coloring kernel
// ---------------------------------------------------------------------------

/* Sum of q^{asc} over proper colorings of G_m with class sizes lambda, where
 * asc counts pairs i < j <= m(i) with kappa(i) < kappa(j). Ascents are
 * accumulated incrementally as vertices are colored in order. */
QPoly coloring_weight_for(const HessFunc& m, const Partition& lambda) {
    int n = m.n();
    int colors = lambda.length();
    std::vector<int> budget = lambda.parts();
    std::vector<int> kappa(n + 1, 0);
    // back_edges[j] = vertices i < j adjacent to j (i.e. j <= m(i))
    std::vector<std::vector<int>> back_edges(n + 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= m(i); ++j) back_edges[j].push_back(i);

    QPoly total;
    auto walk = [&](auto&& self, int v, int asc) -> void {
        if (v > n) {
            add_q_power(total, asc);
            return;
        }
        for (int c = 1; c <= colors; ++c) {
            if (budget[c - 1] == 0) continue;
            bool proper = true;
            int gained = 0;
            for (int i : back_edges[v]) {
                if (kappa[i] == c) {
                    proper = false;
                    break;
                }
                if (kappa[i] < c) ++gained;
            }
            if (!proper) continue;
            --budget[c - 1];
            kappa[v] = c;
            self(self, v + 1, asc + gained);
            kappa[v] = 0;
            ++budget[c - 1];
        }
    };
    walk(walk, 1, 0);
    return total;
}

// ---------------------------------------------------------------------------
// Edge-subset kernel
// ---------------------------------------------------------------------------

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n + 1) {
        for (int i = 0; i <= n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

void subset_block(int n, const std::vector<std::pair<int, int>>& edges, int root,
                  uint64_t lo, uint64_t hi, SubsetClassTable& table) {
    size_t ne = edges.size();
    for (uint64_t mask = lo; mask < hi; ++mask) {
        UnionFind uf(n);
        int popcount = 0;
        for (size_t e = 0; e < ne; ++e) {
            if (mask >> e & 1) {
                uf.join(edges[e].first, edges[e].second);
                ++popcount;
            }
        }
        std::vector<int> comp_size(n + 1, 0);
        for (int v = 1; v <= n; ++v) ++comp_size[uf.find(v)];
        int lambda0 = comp_size[uf.find(root)];
        std::vector<int> rest;
        int root_rep = uf.find(root);
        for (int v = 1; v <= n; ++v)
            if (comp_size[v] > 0 && v != root_rep) rest.push_back(comp_size[v]);
        auto key = std::make_pair(lambda0, Partition::sorted_from(std::move(rest)));
        Int delta = (popcount % 2 == 0) ? 1 : -1;
        auto [it, inserted] = table.emplace(key, delta);
        if (!inserted) it->second += delta;
    }
}

std::atomic<bool> g_force_serial{false};

int suggested_tasks() {
#ifdef _OPENMP
    return std::max(1, omp_get_max_threads() * 8);
#else
    return 1;
#endif
}

} // namespace

void set_force_serial(bool on) { g_force_serial.store(on); }
bool force_serial() { return g_force_serial.load(); }

CycleClassTable cycle_weight_classes_serial(const HessFunc& m) {
    require_perm_budget(m.n(), "cycle_weight_classes");
    if (m.n() == 0) return {};
    SnmWalker walker(m);
    walker.walk(1);
    return std::move(walker.table);
}

CycleClassTable cycle_weight_classes_parallel(const HessFunc& m) {
    require_perm_budget(m.n(), "cycle_weight_classes");
    if (m.n() == 0) return {};
    int n = m.n();
    int depth = std::min(n, 3);
    std::vector<std::vector<int>> prefixes;
    {
        std::vector<int> sigma(n + 1, 0);
        std::vector<bool> used(n + 1, false);
        snm_prefixes(m, depth, 1, sigma, used, prefixes);
    }
    std::vector<CycleClassTable> locals(prefixes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t t = 0; t < prefixes.size(); ++t) {
        SnmWalker walker(m);
        for (int pos = 1; pos <= depth; ++pos) {
            int v = prefixes[t][pos - 1];
            walker.sigma[pos] = v;
            walker.used[v] = true;
        }
        walker.walk(depth + 1);
        locals[t] = std::move(walker.table);
    }
    CycleClassTable table;
    for (auto& local : locals) merge_into(table, local);
    return table;
}

CycleClassTable cycle_weight_classes(const HessFunc& m) {
#ifdef _OPENMP
    if (!force_serial() && m.n() >= 7) return cycle_weight_classes_parallel(m);
#endif
    return cycle_weight_classes_serial(m);
}

ColoringClassTable coloring_weight_classes_serial(const HessFunc& m) {
    require_perm_budget(m.n(), "coloring_weight_classes");
    ColoringClassTable table;
    for (const Partition& lambda : partitions_of(m.n())) {
        QPoly w = coloring_weight_for(m, lambda);
        if (!w.is_zero()) table.emplace(lambda, std::move(w));
    }
    return table;
}

ColoringClassTable coloring_weight_classes_parallel(const HessFunc& m) {
    require_perm_budget(m.n(), "coloring_weight_classes");
    std::vector<Partition> parts = partitions_of(m.n());
    std::vector<QPoly> weights(parts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t i = 0; i < parts.size(); ++i) weights[i] = coloring_weight_for(m, parts[i]);
    ColoringClassTable table;
    for (size_t i = 0; i < parts.size(); ++i)
        if (!weights[i].is_zero()) table.emplace(parts[i], std::move(weights[i]));
    return table;
}

ColoringClassTable coloring_weight_classes(const HessFunc& m) {
#ifdef _OPENMP
    if (!force_serial() && m.n() >= 7) return coloring_weight_classes_parallel(m);
#endif
    return coloring_weight_classes_serial(m);
}

SubsetClassTable edge_subset_classes_serial(int n, const std::vector<std::pair<int, int>>& edges,
                                            int root) {
    if (edges.size() > 28) throw ResourceGuardError("edge_subset_classes: too many edges");
    SubsetClassTable table;
    subset_block(n, edges, root, 0, uint64_t(1) << edges.size(), table);
    return table;
}

SubsetClassTable edge_subset_classes_parallel(int n,
                                              const std::vector<std::pair<int, int>>& edges,
                                              int root) {
    if (edges.size() > 28) throw ResourceGuardError("edge_subset_classes: too many edges");
    uint64_t total = uint64_t(1) << edges.size();
    uint64_t blocks = std::min<uint64_t>(total, static_cast<uint64_t>(suggested_tasks()));
    uint64_t step = (total + blocks - 1) / blocks;
    std::vector<SubsetClassTable> locals(blocks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (uint64_t b = 0; b < blocks; ++b) {
        uint64_t lo = b * step;
        uint64_t hi = std::min(total, lo + step);
        if (lo < hi) subset_block(n, edges, root, lo, hi, locals[b]);
    }
    SubsetClassTable table;
    for (auto& local : locals) merge_into(table, local);
    return table;
}

SubsetClassTable edge_subset_classes(int n, const std::vector<std::pair<int, int>>& edges,
                                     int root) {
#ifdef _OPENMP
    if (!force_serial() && edges.size() >= 14) return edge_subset_classes_parallel(n, edges, root);
#endif
    return edge_subset_classes_serial(n, edges, root);
}

} // namespace qchroma
