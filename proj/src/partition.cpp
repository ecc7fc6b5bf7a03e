#include "qchroma/partition.hpp"

#include <algorithm>

#include "qchroma/limits.hpp"

namespace qchroma {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw Error("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error("Partition: parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::sorted_from(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

Partition union_parts(const Partition& a, const Partition& b) {
    std::vector<int> merged;
    merged.reserve(a.parts_.size() + b.parts_.size());
    std::merge(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
               std::back_inserter(merged), std::greater<int>());
    Partition p;
    p.parts_ = std::move(merged);
    p.size_ = a.size_ + b.size_;
    return p;
}

bool operator<(const Partition& a, const Partition& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                        a.parts_.begin(), a.parts_.end());
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "()";
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw Error("Composition: parts must be positive");
        size_ += p;
    }
}

Partition Composition::sorted() const {
    return Partition::sorted_from(parts_);
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int first = std::min(n, max_part); first >= 1; --first) {
        cur.push_back(first);
        gen_partitions(n - first, first, cur, out);
        cur.pop_back();
    }
}

void gen_compositions(int n, std::vector<int>& cur, std::vector<Composition>& out) {
    if (n == 0) {
        out.push_back(Composition(cur));
        return;
    }
    for (int first = n; first >= 1; --first) {
        cur.push_back(first);
        gen_compositions(n - first, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw Error("partitions_of: negative n");
    require_degree_budget(n, "partitions_of");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw Error("compositions_of: negative n");
    require_degree_budget(n, "compositions_of");
    std::vector<Composition> out;
    std::vector<int> cur;
    gen_compositions(n, cur, out);
    return out;
}

Int z_lambda(const Partition& lambda) {
    Int z(1);
    const auto& ps = lambda.parts();
    size_t i = 0;
    while (i < ps.size()) {
        size_t j = i;
        while (j < ps.size() && ps[j] == ps[i]) ++j;
        size_t mult = j - i;
        for (size_t k = 0; k < mult; ++k) z *= ps[i];
        for (size_t k = 2; k <= mult; ++k) z *= static_cast<long>(k);
        i = j;
    }
    return z;
}

} // namespace qchroma
