#include "qchroma/hessenberg.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "qchroma/kernels.hpp"
#include "qchroma/limits.hpp"

namespace qchroma {

HessFunc HessFunc::validate(std::vector<int> values) {
    int n = static_cast<int>(values.size());
    // n = 0 is allowed: hess_minus_tau of a full tree leaves the empty graph.
    for (int i = 1; i <= n; ++i) {
        int v = values[i - 1];
        if (v < i) throw InvalidHessenberg("m(" + std::to_string(i) + ") < " + std::to_string(i));
        if (v > n) throw InvalidHessenberg("m(" + std::to_string(i) + ") > n");
        if (i > 1 && v < values[i - 2])
            throw InvalidHessenberg("m is not weakly non-decreasing at i=" + std::to_string(i));
    }
    HessFunc m;
    m.values_ = std::move(values);
    return m;
}

HessFunc HessFunc::parse(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
            if (used != item.size()) throw std::invalid_argument(item);
            values.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad Hessenberg entry '" + item + "' in \"" + text + "\"");
        }
    }
    if (values.empty()) throw ParseError("empty Hessenberg function string");
    return validate(std::move(values));
}

HessFunc HessFunc::path(int n) {
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) v[i - 1] = std::min(i + 1, n);
    return validate(std::move(v));
}

HessFunc HessFunc::complete(int n) {
    return validate(std::vector<int>(n, n));
}

std::vector<HessFunc> HessFunc::all(int n) {
    std::vector<HessFunc> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self) -> void {
        int i = static_cast<int>(cur.size()) + 1;
        if (i > n) {
            out.push_back(validate(cur));
            return;
        }
        int lo = std::max(i, cur.empty() ? 1 : cur.back());
        for (int v = lo; v <= n; ++v) {
            cur.push_back(v);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::vector<std::pair<int, int>> HessFunc::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n(); ++i)
        for (int j = i + 1; j <= (*this)(i); ++j) out.emplace_back(i, j);
    return out;
}

std::string HessFunc::to_string() const {
    std::string s;
    for (size_t i = 0; i < values_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(values_[i]);
    }
    return s;
}

CycleDecomp cycle_decomp(std::vector<int> perm) {
    int n = static_cast<int>(perm.size());
    CycleDecomp d;
    d.perm = std::move(perm);
    std::vector<bool> seen(n + 1, false);
    std::vector<int> lengths;
    for (int start = 1; start <= n; ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        int x = start;
        while (!seen[x]) {
            seen[x] = true;
            cycle.push_back(x);
            x = d.perm[x - 1];
        }
        lengths.push_back(static_cast<int>(cycle.size()));
        d.word.insert(d.word.end(), cycle.begin(), cycle.end());
        d.cycles.push_back(std::move(cycle));
    }
    d.cycle_type = Partition::sorted_from(std::move(lengths));
    return d;
}

std::vector<CycleDecomp> enum_Snm(const HessFunc& m) {
    require_perm_budget(m.n(), "enum_Snm");
    int n = m.n();
    std::vector<CycleDecomp> out;
    std::vector<int> sigma(n + 1, 0);
    std::vector<bool> used(n + 1, false);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos > n) {
            out.push_back(cycle_decomp(std::vector<int>(sigma.begin() + 1, sigma.end())));
            return;
        }
        for (int v = 1; v <= m(pos); ++v) {
            if (used[v]) continue;
            used[v] = true;
            sigma[pos] = v;
            self(self, pos + 1);
            used[v] = false;
        }
    };
    rec(rec, 1);
    return out;
}

int wt(const HessFunc& m, const std::vector<int>& word) {
    int n = m.n();
    std::vector<int> pos(n + 1, -1);
    for (size_t i = 0; i < word.size(); ++i) {
        int v = word[i];
        if (v < 1 || v > n || pos[v] != -1)
            throw Error("wt: word must consist of distinct values in [n]");
        pos[v] = static_cast<int>(i);
    }
    int count = 0;
    for (int a = 1; a <= n; ++a) {
        if (pos[a] < 0) continue;
        for (int b = a + 1; b <= m(a); ++b)
            if (pos[b] >= 0 && pos[b] < pos[a]) ++count;
    }
    return count;
}

SymFunc rho(int n) {
    if (n < 1) throw Error("rho: n must be >= 1");
    static std::mutex mutex;
    static std::vector<SymFunc> cache; // cache[i] = rho_{i+1}
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(cache.size()) < n) {
        int k = static_cast<int>(cache.size()) + 1;
        SymFunc r = SymFunc::basis_element(Basis::h, Partition({k})).scaled(qint(k));
        for (int i = 1; i < k; ++i)
            r -= SymFunc::basis_element(Basis::h, Partition({i})) * cache[k - i - 1];
        cache.push_back(std::move(r));
    }
    return cache[n - 1];
}

bool omega_rho_check(int n) {
    SymFunc lhs = rho(n).omega();
    SymFunc rhs;
    for (int i = 1; i <= n; ++i) {
        SymFunc term = SymFunc::basis_element(Basis::e, Partition({i}));
        if (i < n) term = term * SymFunc::basis_element(Basis::h, Partition({n - i}));
        term = term.scaled(qint(i));
        if ((n - i) % 2 != 0) term = -term;
        rhs += term;
    }
    return lhs == rhs;
}

namespace {

/* Product of rho over the parts of a cycle type, omega-dualized as a whole
 * (omega is a ring map). */
SymFunc omega_rho_product(const Partition& type) {
    SymFunc prod = SymFunc::one();
    for (int part : type.parts()) prod = prod * rho(part);
    return prod.omega();
}

} // namespace

SymFunc csf_rho(const HessFunc& m) {
    if (m.n() == 0) return SymFunc::one();
    CycleClassTable classes = cycle_weight_classes(m);
    // collapse to full cycle types
    std::map<Partition, QPoly> by_type;
    for (const auto& [key, weight] : classes) {
        Partition full = union_parts(Partition({key.first}), key.second);
        by_type[full] += weight;
    }
    SymFunc total;
    for (const auto& [type, weight] : by_type) total += omega_rho_product(type).scaled(weight);
    return total;
}

SymFunc csf_coloring(const HessFunc& m) {
    if (m.n() == 0) return SymFunc::one();
    ColoringClassTable classes = coloring_weight_classes(m);
    std::map<Partition, QPoly> view(classes.begin(), classes.end());
    return SymFunc::from_view(Basis::m, view);
}

SymFunc csf_stanley_p(const HessFunc& m) {
    if (m.n() == 0) return SymFunc::one();
    require_perm_budget(m.n(), "csf_stanley_p");
    std::map<Partition, Int> counts;
    for (const CycleDecomp& d : enum_Snm(m)) counts[d.cycle_type] += 1;
    SymFunc total;
    for (const auto& [type, count] : counts)
        total += SymFunc::basis_element(Basis::p, type).omega().scaled(count);
    return total;
}

std::vector<IncTree> enum_inc_trees(const HessFunc& m, int d) {
    require_perm_budget(m.n(), "enum_inc_trees");
    if (d < 1 || d > m.n()) throw Error("enum_inc_trees: need 1 <= d <= n");
    std::vector<IncTree> out;
    std::vector<int> word = {1};
    std::vector<bool> used(m.n() + 1, false);
    used[1] = true;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(word.size()) == d) {
            out.push_back(tree_from_word(m, word));
            return;
        }
        for (int v = 1; v <= m(word.back()); ++v) {
            if (used[v]) continue;
            used[v] = true;
            word.push_back(v);
            self(self);
            word.pop_back();
            used[v] = false;
        }
    };
    rec(rec);
    return out;
}

IncTree tree_from_word(const HessFunc& m, const std::vector<int>& word) {
    int n = m.n();
    if (word.empty() || word[0] != 1) throw MalformedTree("tree word must start at vertex 1");
    std::vector<bool> used(n + 1, false);
    for (int v : word) {
        if (v < 1 || v > n || used[v]) throw MalformedTree("tree word must be injective over [n]");
        used[v] = true;
    }
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i + 1] > m(word[i]))
            throw MalformedTree("tree word violates tau(i+1) <= m(tau(i))");

    IncTree tree;
    tree.word = word;
    // Stanley's bijection: word[j] attaches to the latest earlier smaller entry.
    for (size_t j = 1; j < word.size(); ++j) {
        int parent = -1;
        for (size_t i = j; i-- > 0;) {
            if (word[i] < word[j]) {
                parent = word[i];
                break;
            }
        }
        tree.edges.emplace_back(parent, word[j]);
    }
    std::sort(tree.edges.begin(), tree.edges.end());
    return tree;
}

std::vector<int> word_from_tree(const HessFunc& m,
                                const std::vector<std::pair<int, int>>& edges) {
    int n = m.n();
    std::vector<std::vector<int>> children(n + 1);
    std::vector<bool> has_parent(n + 1, false);
    for (auto [u, v] : edges) {
        if (u < 1 || v < 1 || u > n || v > n || u == v)
            throw MalformedTree("edge endpoints out of range");
        int parent = std::min(u, v), child = std::max(u, v);
        if (child > m(parent)) throw MalformedTree("edge not in the indifference graph");
        if (has_parent[child]) throw MalformedTree("vertex has two smaller neighbors");
        has_parent[child] = true;
        children[parent].push_back(child);
    }
    // Increasing trees invert by depth-first traversal with children visited in
    // decreasing order; everything emitted between a vertex and its next child
    // is larger than that child, so the bijection's parent rule is preserved.
    std::vector<int> word;
    auto dfs = [&](auto&& self, int v) -> void {
        word.push_back(v);
        std::sort(children[v].begin(), children[v].end(), std::greater<int>());
        for (int c : children[v]) self(self, c);
    };
    dfs(dfs, 1);
    if (word.size() != edges.size() + 1) throw MalformedTree("edges do not form a tree");
    return word;
}

std::vector<int> embed_word(const HessFunc& m, const std::vector<int>& word) {
    std::vector<bool> used(m.n() + 1, false);
    for (int v : word) used[v] = true;
    std::vector<int> full = word;
    for (int v = 1; v <= m.n(); ++v)
        if (!used[v]) full.push_back(v);
    return full;
}

HessFunc hess_minus_tau(const HessFunc& m, const std::vector<int>& word) {
    int n = m.n();
    std::vector<bool> in_tau(n + 1, false);
    for (int v : word) in_tau[v] = true;
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
        if (!in_tau[v]) rest.push_back(v);
    int k = static_cast<int>(rest.size());
    std::vector<int> values(k);
    for (int i = 1; i <= k; ++i) {
        int best = 0;
        for (int i0 = 1; i0 <= k; ++i0)
            if (rest[i0 - 1] <= m(rest[i - 1])) best = i0;
        values[i - 1] = best;
    }
    return HessFunc::validate(std::move(values));
}

} // namespace qchroma
