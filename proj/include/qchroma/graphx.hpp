#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qchroma/symfunc.hpp"

namespace qchroma {

/* Simple graph on [n] with a distinguished root vertex. Multiedges are
 * collapsed on construction; loops are rejected. */
class RootedGraph {
public:
    RootedGraph(int n, std::vector<std::pair<int, int>> edges, int root);

    int n() const { return n_; }
    int root() const { return root_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(std::pair<int, int> e) const;
    bool connected() const;

    RootedGraph delete_edge(std::pair<int, int> e) const;

    /* Merges the endpoints of an edge incident to the root into the root and
     * renumbers vertices down to [n-1]; parallel edges collapse. Throws
     * EdgeNotIncident when the root is not an endpoint. */
    RootedGraph contract_edge(std::pair<int, int> e) const;

    /* "n; u-v,u-v,...; root=v0" */
    static RootedGraph parse(const std::string& text);
    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    int root_ = 1;
};

/* Component split of the spanning subgraph ([n], S): size of the root's
 * component and the partition of the remaining component sizes. */
std::pair<int, Partition> lambda_split(const RootedGraph& g,
                                       const std::vector<std::pair<int, int>>& subset);

/* Signed edge-subset sum of Definition-style terms, h_j := 0 for j < 0. */
SymFunc g_general(const RootedGraph& g, int k);
std::vector<SymFunc> g_general_all(const RootedGraph& g); // k = 0..n-1, single pass

/* sum_S (-1)^{|S|+1} h_{lambda0} p_lambda + sum_k e_{n-k} g_k == 0. */
bool gn_pseudo_check(const RootedGraph& g);

/* sum_{k=0}^{n-1} (n-k) e_{n-k} g_k; must equal csf_stanley. */
SymFunc csf_general_from_g(const RootedGraph& g);

/* Stanley's edge-subset expansion of the chromatic symmetric function. */
SymFunc csf_stanley(const RootedGraph& g);

/* Proper-coloring census (q-free), the independent cross-check. */
SymFunc csf_coloring_classic(const RootedGraph& g);

/* Both deletion-contraction identities for an edge incident to the root. */
bool deletion_contraction_check(const RootedGraph& g, std::pair<int, int> e);

} // namespace qchroma
