#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qchroma/hessenberg.hpp"
#include "qchroma/partition.hpp"
#include "qchroma/qpoly.hpp"

namespace qchroma {

/* Enumeration kernels. Each has an OpenMP implementation (work split over
 * fixed-depth prefixes or index blocks, merged deterministically) and a plain
 * recursive serial reference; the _serial variants are the oracles the tests
 * compare against and what the benchmark measures. The unsuffixed entry
 * points pick a variant based on problem size. */

/* Force the unsuffixed entry points onto the serial path (CLI --serial). */
void set_force_serial(bool on);
bool force_serial();

/* Key (first-cycle length, type of the remaining cycles); value is the sum of
 * q^{wt(sigma^c)} over sigma in S_{n,m} in that class. The first cycle is the
 * one containing 1. */
using CycleClassTable = std::map<std::pair<int, Partition>, QPoly>;

CycleClassTable cycle_weight_classes(const HessFunc& m);
CycleClassTable cycle_weight_classes_serial(const HessFunc& m);
CycleClassTable cycle_weight_classes_parallel(const HessFunc& m);

/* Coefficient of m_lambda in csf_q: sum of q^{asc} over proper colorings with
 * color-class sizes lambda. */
using ColoringClassTable = std::map<Partition, QPoly>;

ColoringClassTable coloring_weight_classes(const HessFunc& m);
ColoringClassTable coloring_weight_classes_serial(const HessFunc& m);
ColoringClassTable coloring_weight_classes_parallel(const HessFunc& m);

/* Signed edge-subset census of a graph with a distinguished root: key is
 * (size of the root's component, partition of the other component sizes) of
 * the spanning subgraph ([n], S); value accumulates (-1)^{|S|}. */
using SubsetClassTable = std::map<std::pair<int, Partition>, Int>;

SubsetClassTable edge_subset_classes(int n, const std::vector<std::pair<int, int>>& edges,
                                     int root);
SubsetClassTable edge_subset_classes_serial(int n,
                                            const std::vector<std::pair<int, int>>& edges,
                                            int root);
SubsetClassTable edge_subset_classes_parallel(int n,
                                              const std::vector<std::pair<int, int>>& edges,
                                              int root);

} // namespace qchroma
