#include "qchroma/graphx.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qchroma/kernels.hpp"
#include "qchroma/limits.hpp"

namespace qchroma {

RootedGraph::RootedGraph(int n, std::vector<std::pair<int, int>> edges, int root)
    : n_(n), root_(root) {
    if (n < 1) throw Error("RootedGraph: need at least one vertex");
    if (root < 1 || root > n) throw Error("RootedGraph: root out of range");
    std::set<std::pair<int, int>> dedup;
    for (auto [u, v] : edges) {
        if (u < 1 || v < 1 || u > n || v > n) throw Error("RootedGraph: edge endpoint out of range");
        if (u == v) throw Error("RootedGraph: loops are not allowed");
        dedup.emplace(std::min(u, v), std::max(u, v));
    }
    edges_.assign(dedup.begin(), dedup.end());
}

bool RootedGraph::has_edge(std::pair<int, int> e) const {
    auto key = std::make_pair(std::min(e.first, e.second), std::max(e.first, e.second));
    return std::binary_search(edges_.begin(), edges_.end(), key);
}

bool RootedGraph::connected() const {
    std::vector<std::vector<int>> adj(n_ + 1);
    for (auto [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<bool> seen(n_ + 1, false);
    std::vector<int> stack = {1};
    seen[1] = true;
    int visited = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++visited;
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
    }
    return visited == n_;
}

RootedGraph RootedGraph::delete_edge(std::pair<int, int> e) const {
    auto key = std::make_pair(std::min(e.first, e.second), std::max(e.first, e.second));
    std::vector<std::pair<int, int>> rest;
    for (auto edge : edges_)
        if (edge != key) rest.push_back(edge);
    if (rest.size() == edges_.size()) throw Error("delete_edge: edge not present");
    return RootedGraph(n_, std::move(rest), root_);
}

RootedGraph RootedGraph::contract_edge(std::pair<int, int> e) const {
    auto key = std::make_pair(std::min(e.first, e.second), std::max(e.first, e.second));
    if (!has_edge(key)) throw EdgeNotIncident("contract_edge: edge not present");
    if (key.first != root_ && key.second != root_)
        throw EdgeNotIncident("contract_edge: edge must be incident to the root");
    int other = key.first == root_ ? key.second : key.first;
    // relabel [n] \ {other} -> [n-1], order preserving
    std::vector<int> relabel(n_ + 1, 0);
    int next = 0;
    for (int v = 1; v <= n_; ++v)
        if (v != other) relabel[v] = ++next;
    std::vector<std::pair<int, int>> mapped;
    for (auto [u, v] : edges_) {
        if (std::make_pair(u, v) == key) continue;
        int a = (u == other) ? root_ : u;
        int b = (v == other) ? root_ : v;
        if (a == b) continue;
        mapped.emplace_back(relabel[a], relabel[b]);
    }
    return RootedGraph(n_ - 1, std::move(mapped), relabel[root_]);
}

RootedGraph RootedGraph::parse(const std::string& text) {
    // "n; u-v,u-v,...; root=v0" (edge list may be empty)
    std::vector<std::string> fields;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ';')) fields.push_back(field);
    if (fields.size() != 3) throw ParseError("graph: expected \"n; edges; root=v0\"");
    auto strip = [](std::string s) {
        size_t a = s.find_first_not_of(" \t");
        size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    int n = 0, root = 0;
    try {
        n = std::stoi(strip(fields[0]));
    } catch (...) {
        throw ParseError("graph: bad vertex count '" + fields[0] + "'");
    }
    std::string root_field = strip(fields[2]);
    if (root_field.rfind("root=", 0) != 0) throw ParseError("graph: expected root=v0");
    try {
        root = std::stoi(root_field.substr(5));
    } catch (...) {
        throw ParseError("graph: bad root '" + root_field + "'");
    }
    std::vector<std::pair<int, int>> edges;
    std::string edge_field = strip(fields[1]);
    if (!edge_field.empty()) {
        std::stringstream es(edge_field);
        std::string token;
        while (std::getline(es, token, ',')) {
            token = strip(token);
            size_t dash = token.find('-');
            if (dash == std::string::npos) throw ParseError("graph: bad edge '" + token + "'");
            try {
                edges.emplace_back(std::stoi(token.substr(0, dash)),
                                   std::stoi(token.substr(dash + 1)));
            } catch (...) {
                throw ParseError("graph: bad edge '" + token + "'");
            }
        }
    }
    try {
        return RootedGraph(n, std::move(edges), root);
    } catch (const Error& e) {
        throw ParseError(std::string("graph: ") + e.what());
    }
}

std::string RootedGraph::to_string() const {
    std::string s = std::to_string(n_) + "; ";
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(edges_[i].first) + "-" + std::to_string(edges_[i].second);
    }
    s += "; root=" + std::to_string(root_);
    return s;
}

std::pair<int, Partition> lambda_split(const RootedGraph& g,
                                       const std::vector<std::pair<int, int>>& subset) {
    std::vector<int> parent(g.n() + 1);
    for (int i = 0; i <= g.n(); ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (auto [u, v] : subset) {
        if (!g.has_edge({u, v})) throw Error("lambda_split: subset contains a non-edge");
        parent[find(u)] = find(v);
    }
    std::vector<int> size(g.n() + 1, 0);
    for (int v = 1; v <= g.n(); ++v) ++size[find(v)];
    int root_rep = find(g.root());
    std::vector<int> rest;
    for (int v = 1; v <= g.n(); ++v)
        if (size[v] > 0 && v != root_rep) rest.push_back(size[v]);
    return {size[root_rep], Partition::sorted_from(std::move(rest))};
}

namespace {

/* g_k = (-1)^{n+k+1} sum_{(l0,l)} C_{l0,l} h_{l0-n+k} p_l over the signed
 * census, with h of negative index dropped. */
SymFunc g_from_census(const SubsetClassTable& census, int n, int k) {
    SymFunc total;
    for (const auto& [key, count] : census) {
        int h_index = key.first - n + k;
        if (h_index < 0 || count == 0) continue;
        SymFunc term = SymFunc::basis_element(Basis::p, key.second);
        if (h_index > 0) term = term * SymFunc::basis_element(Basis::h, Partition({h_index}));
        Int c = ((n + k + 1) % 2 == 0) ? count : -count;
        total += term.scaled(c);
    }
    return total;
}

} // namespace

SymFunc g_general(const RootedGraph& g, int k) {
    if (k < 0 || k > g.n() - 1)
        throw KOutOfRange("g_general: need 0 <= k <= n-1");
    SubsetClassTable census = edge_subset_classes(g.n(), g.edges(), g.root());
    return g_from_census(census, g.n(), k);
}

std::vector<SymFunc> g_general_all(const RootedGraph& g) {
    SubsetClassTable census = edge_subset_classes(g.n(), g.edges(), g.root());
    std::vector<SymFunc> out;
    for (int k = 0; k < g.n(); ++k) out.push_back(g_from_census(census, g.n(), k));
    return out;
}

bool gn_pseudo_check(const RootedGraph& g) {
    SubsetClassTable census = edge_subset_classes(g.n(), g.edges(), g.root());
    // sum_S (-1)^{|S|+1} h_{lambda0} p_lambda
    SymFunc total;
    for (const auto& [key, count] : census) {
        if (count == 0) continue;
        SymFunc term = SymFunc::basis_element(Basis::h, Partition({key.first})) *
                       SymFunc::basis_element(Basis::p, key.second);
        total += term.scaled(-count);
    }
    int n = g.n();
    for (int k = 0; k < n; ++k) {
        total += SymFunc::basis_element(Basis::e, Partition({n - k})) * g_from_census(census, n, k);
    }
    return total.is_zero();
}

SymFunc csf_general_from_g(const RootedGraph& g) {
    SubsetClassTable census = edge_subset_classes(g.n(), g.edges(), g.root());
    int n = g.n();
    SymFunc total;
    for (int k = 0; k < n; ++k) {
        SymFunc term =
            SymFunc::basis_element(Basis::e, Partition({n - k})) * g_from_census(census, n, k);
        total += term.scaled(Int(n - k));
    }
    return total;
}

SymFunc csf_stanley(const RootedGraph& g) {
    SubsetClassTable census = edge_subset_classes(g.n(), g.edges(), g.root());
    SymFunc total;
    for (const auto& [key, count] : census) {
        if (count == 0) continue;
        Partition full = union_parts(Partition({key.first}), key.second);
        total += SymFunc::basis_element(Basis::p, full).scaled(count);
    }
    return total;
}

SymFunc csf_coloring_classic(const RootedGraph& g) {
    require_perm_budget(g.n(), "csf_coloring_classic");
    int n = g.n();
    std::vector<std::vector<int>> earlier(n + 1);
    for (auto [u, v] : g.edges()) earlier[std::max(u, v)].push_back(std::min(u, v));
    std::map<Partition, QPoly> view;
    for (const Partition& lambda : partitions_of(n)) {
        int colors = lambda.length();
        std::vector<int> budget = lambda.parts();
        std::vector<int> kappa(n + 1, 0);
        Int count = 0;
        auto walk = [&](auto&& self, int v) -> void {
            if (v > n) {
                ++count;
                return;
            }
            for (int c = 1; c <= colors; ++c) {
                if (budget[c - 1] == 0) continue;
                bool proper = true;
                for (int u : earlier[v])
                    if (kappa[u] == c) {
                        proper = false;
                        break;
                    }
                if (!proper) continue;
                --budget[c - 1];
                kappa[v] = c;
                self(self, v + 1);
                kappa[v] = 0;
                ++budget[c - 1];
            }
        };
        walk(walk, 1);
        if (count != 0) view.emplace(lambda, QPoly(count));
    }
    return SymFunc::from_view(Basis::m, view);
}

bool deletion_contraction_check(const RootedGraph& g, std::pair<int, int> e) {
    auto key = std::make_pair(std::min(e.first, e.second), std::max(e.first, e.second));
    if (!g.has_edge(key)) throw EdgeNotIncident("deletion_contraction_check: edge not present");
    if (key.first != g.root() && key.second != g.root())
        throw EdgeNotIncident("deletion_contraction_check: edge must be incident to the root");
    int n = g.n();
    std::vector<SymFunc> full = g_general_all(g);
    std::vector<SymFunc> deleted = g_general_all(g.delete_edge(key));
    RootedGraph contracted = g.contract_edge(key);
    std::vector<SymFunc> merged =
        contracted.n() >= 1 ? g_general_all(contracted) : std::vector<SymFunc>{};
    for (int k = 0; k < n - 1; ++k) {
        SymFunc rhs = deleted[k];
        if (k < contracted.n()) rhs += merged[k];
        if (full[k] != rhs) return false;
    }
    // top degree: g_{n-1}(G) = g_{n-1}(G\e) - sum_{k=0}^{n-2} e_{n-1-k} g_k(G/e)
    SymFunc rhs = deleted[n - 1];
    for (int k = 0; k <= n - 2; ++k) {
        if (k >= contracted.n()) continue;
        rhs -= SymFunc::basis_element(Basis::e, Partition({n - 1 - k})) * merged[k];
    }
    return full[n - 1] == rhs;
}

} // namespace qchroma
