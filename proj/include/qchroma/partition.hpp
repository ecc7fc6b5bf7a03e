#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "qchroma/errors.hpp"
#include "qchroma/qpoly.hpp"

namespace qchroma {

/* Weakly decreasing sequence of positive integers. The empty partition is the
 * unit index (size 0). Ordering: by size, then lexicographically descending
 * within a size, matching the enumeration order of partitions_of(). */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /* Sorts the input descending first; rejects nonpositive entries. */
    static Partition sorted_from(std::vector<int> parts);

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[i]; }

    Partition conjugate() const;

    /* Multiset union, used for power-sum products. */
    friend Partition union_parts(const Partition& a, const Partition& b);

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator<(const Partition& a, const Partition& b);

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }

    /* The multiset of parts as a partition. */
    Partition sorted() const;

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/* Complete duplicate-free lists in lexicographically descending order,
 * e.g. partitions_of(4) = 4, 31, 22, 211, 1111. Guarded by max_degree. */
std::vector<Partition> partitions_of(int n);
std::vector<Composition> compositions_of(int n);

/* z_lambda = prod i^{m_i} m_i!, the centralizer order of the cycle type. */
Int z_lambda(const Partition& lambda);

} // namespace qchroma
