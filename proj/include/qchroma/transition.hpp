#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qchroma/partition.hpp"
#include "qchroma/qpoly.hpp"

namespace qchroma {

/* Exact transition data for one homogeneous degree. Rows are indexed by the
 * source-basis partition, columns by the monomial-basis partition, both in
 * canonical order (lexicographically descending). The from_m_* matrices are
 * the inverse transposes used to solve views out of the m-expansion. */
struct DegreeTables {
    int degree = 0;
    std::vector<Partition> parts;
    std::map<Partition, int> index;

    std::vector<std::vector<Int>> e2m; // 0/1 matrices with prescribed row/col sums
    std::vector<std::vector<Int>> h2m; // nonnegative integer matrices
    std::vector<std::vector<Int>> s2m; // Kostka numbers (SSYT counts)
    std::vector<std::vector<Int>> p2m; // part-to-column assignment counts

    std::vector<std::vector<Rat>> from_m_e;
    std::vector<std::vector<Rat>> from_m_h;
    std::vector<std::vector<Rat>> from_m_s;
    std::vector<std::vector<Rat>> from_m_p;
};

/* Compute-once per-degree cache, safe under concurrent readers. */
const DegreeTables& degree_tables(int degree);

/* Counting primitives behind the matrices. */
Int count_01_matrices(const Partition& rows, const Partition& cols);
Int count_nim_matrices(const Partition& rows, const Partition& cols);
Int count_ssyt(const Partition& shape, const Partition& content);
Int count_part_assignments(const Partition& parts, const Partition& cols);

/* Optional disk cache for the counted matrices (versioned; structural and
 * checksum validation on load, anything suspect is discarded and rebuilt). */
void enable_disk_cache(const std::string& path);
void disable_disk_cache();

} // namespace qchroma
