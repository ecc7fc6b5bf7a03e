#include "qchroma/transition.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "qchroma/limits.hpp"

namespace qchroma {

namespace {

using StateKey = std::pair<int, std::vector<int>>;

std::vector<int> sorted_desc(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

/* Row-by-row count of matrices with prescribed row sums and column sums.
 * Completion counts only depend on the multiset of remaining column sums, so
 * states are memoized on the sorted remainder. zero_one selects 0/1 entries
 * versus arbitrary nonnegative entries. */
struct MatrixCounter {
    const std::vector<int>& rows;
    bool zero_one;
    std::map<StateKey, Int> memo;

    Int count(int row, const std::vector<int>& remaining) {
        if (row == static_cast<int>(rows.size())) {
            for (int r : remaining)
                if (r != 0) return 0;
            return 1;
        }
        StateKey key{row, sorted_desc(remaining)};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<int> rem = key.second;
        rem.resize(remaining.size(), 0);
        Int total = fill_row(row, 0, rows[row], rem);
        memo.emplace(std::move(key), total);
        return total;
    }

    Int fill_row(int row, int col, int left, std::vector<int>& rem) {
        if (left == 0) return count(row + 1, rem);
        if (col == static_cast<int>(rem.size())) return 0;
        Int total = fill_row(row, col + 1, left, rem);
        int cap = zero_one ? std::min(1, std::min(left, rem[col])) : std::min(left, rem[col]);
        for (int put = 1; put <= cap; ++put) {
            rem[col] -= put;
            total += fill_row(row, col + 1, left - put, rem);
            rem[col] += put;
        }
        return total;
    }
};

Int count_matrices(const Partition& rows, const Partition& cols, bool zero_one) {
    if (rows.size() != cols.size()) return 0;
    MatrixCounter counter{rows.parts(), zero_one, {}};
    std::vector<int> remaining = cols.parts();
    return counter.count(0, remaining);
}

/* SSYT backtracking: fill cells row-major; rows weakly increase, columns
 * strictly increase, entry multiplicities equal the content. */
struct SsytCounter {
    const std::vector<int>& shape;
    std::vector<int> remaining;
    std::vector<std::vector<int>> cells;

    Int fill(int r, int c) {
        if (r == static_cast<int>(shape.size())) return 1;
        int next_r = r, next_c = c + 1;
        if (next_c == shape[r]) {
            next_r = r + 1;
            next_c = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, cells[r][c - 1]);
        if (r > 0) lo = std::max(lo, cells[r - 1][c] + 1);
        Int total = 0;
        for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
            if (remaining[v - 1] == 0) continue;
            --remaining[v - 1];
            cells[r][c] = v;
            total += fill(next_r, next_c);
            ++remaining[v - 1];
        }
        return total;
    }
};

} // namespace

Int count_01_matrices(const Partition& rows, const Partition& cols) {
    return count_matrices(rows, cols, true);
}

Int count_nim_matrices(const Partition& rows, const Partition& cols) {
    return count_matrices(rows, cols, false);
}

Int count_ssyt(const Partition& shape, const Partition& content) {
    if (shape.size() != content.size()) return 0;
    if (shape.empty()) return 1;
    SsytCounter counter{shape.parts(), content.parts(), {}};
    counter.cells.resize(shape.length());
    for (int r = 0; r < shape.length(); ++r) counter.cells[r].assign(shape.part(r), 0);
    return counter.fill(0, 0);
}

Int count_part_assignments(const Partition& parts, const Partition& cols) {
    if (parts.size() != cols.size()) return 0;
    struct Assigner {
        const std::vector<int>& parts;
        std::map<StateKey, Int> memo;

        Int count(int i, const std::vector<int>& remaining) {
            if (i == static_cast<int>(parts.size())) {
                for (int r : remaining)
                    if (r != 0) return 0;
                return 1;
            }
            StateKey key{i, sorted_desc(remaining)};
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
            std::vector<int> rem = key.second;
            rem.resize(remaining.size(), 0);
            Int total = 0;
            for (size_t j = 0; j < rem.size(); ++j) {
                if (rem[j] >= parts[i]) {
                    rem[j] -= parts[i];
                    total += count(i + 1, rem);
                    rem[j] += parts[i];
                }
            }
            memo.emplace(std::move(key), total);
            return total;
        }
    } assigner{parts.parts(), {}};
    std::vector<int> remaining = cols.parts();
    return assigner.count(0, remaining);
}

namespace {

std::vector<std::vector<Rat>> invert_transpose(const std::vector<std::vector<Int>>& m) {
    size_t n = m.size();
    // a = m^T augmented with identity
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m[j][i]);
        a[i][n + i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw Error("transition matrix is singular");
        std::swap(a[col], a[pivot]);
        Rat pv = a[col][col];
        for (auto& x : a[col]) x /= pv;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rat f = a[row][col];
            for (size_t j = col; j < 2 * n; ++j) a[row][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

// ---------------------------------------------------------------------------
// Disk cache. Format: {"magic", "version", "degrees": {"<d>": {"e2m": [[...]],
// ..., "checksum": <fnv1a of the matrix dump>}}}. Entries are decimal strings.
// ---------------------------------------------------------------------------

std::mutex g_mutex;
std::map<int, std::shared_ptr<const DegreeTables>> g_tables;
std::string g_cache_path;
nlohmann::json g_cache_doc;

constexpr const char* kCacheMagic = "qchroma-transition-cache";
constexpr int kCacheVersion = 1;

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string dump_matrices(const std::vector<const std::vector<std::vector<Int>>*>& ms) {
    std::string out;
    for (const auto* m : ms) {
        for (const auto& row : *m) {
            for (const auto& v : row) {
                out += v.get_str();
                out += ',';
            }
            out += ';';
        }
        out += '|';
    }
    return out;
}

nlohmann::json matrix_to_json(const std::vector<std::vector<Int>>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        rows.push_back(std::move(r));
    }
    return rows;
}

bool matrix_from_json(const nlohmann::json& j, size_t dim, std::vector<std::vector<Int>>& out) {
    if (!j.is_array() || j.size() != dim) return false;
    out.assign(dim, std::vector<Int>(dim));
    for (size_t i = 0; i < dim; ++i) {
        if (!j[i].is_array() || j[i].size() != dim) return false;
        for (size_t k = 0; k < dim; ++k) {
            if (!j[i][k].is_string()) return false;
            try {
                out[i][k] = Int(j[i][k].get<std::string>());
            } catch (...) {
                return false;
            }
            if (out[i][k] < 0) return false;
        }
    }
    return true;
}

/* Returns true and fills the matrices when the cached degree entry passes
 * structural and checksum validation. */
bool load_degree_from_cache(int degree, DegreeTables& t) {
    if (g_cache_path.empty()) return false;
    auto degrees = g_cache_doc.find("degrees");
    if (degrees == g_cache_doc.end() || !degrees->is_object()) return false;
    auto entry = degrees->find(std::to_string(degree));
    if (entry == degrees->end() || !entry->is_object()) return false;
    size_t dim = t.parts.size();
    if (!matrix_from_json(entry->value("e2m", nlohmann::json()), dim, t.e2m)) return false;
    if (!matrix_from_json(entry->value("h2m", nlohmann::json()), dim, t.h2m)) return false;
    if (!matrix_from_json(entry->value("s2m", nlohmann::json()), dim, t.s2m)) return false;
    if (!matrix_from_json(entry->value("p2m", nlohmann::json()), dim, t.p2m)) return false;
    if (!entry->contains("checksum") || !(*entry)["checksum"].is_number_unsigned()) return false;
    uint64_t want = (*entry)["checksum"].get<uint64_t>();
    uint64_t got = fnv1a(dump_matrices({&t.e2m, &t.h2m, &t.s2m, &t.p2m}));
    return want == got;
}

void store_degree_in_cache(int degree, const DegreeTables& t) {
    if (g_cache_path.empty()) return;
    nlohmann::json entry;
    entry["e2m"] = matrix_to_json(t.e2m);
    entry["h2m"] = matrix_to_json(t.h2m);
    entry["s2m"] = matrix_to_json(t.s2m);
    entry["p2m"] = matrix_to_json(t.p2m);
    entry["checksum"] = fnv1a(dump_matrices({&t.e2m, &t.h2m, &t.s2m, &t.p2m}));
    g_cache_doc["magic"] = kCacheMagic;
    g_cache_doc["version"] = kCacheVersion;
    g_cache_doc["degrees"][std::to_string(degree)] = std::move(entry);
    std::ofstream out(g_cache_path, std::ios::trunc);
    if (out) out << g_cache_doc.dump();
}

std::shared_ptr<const DegreeTables> build_degree(int degree) {
    auto t = std::make_shared<DegreeTables>();
    t->degree = degree;
    t->parts = partitions_of(degree);
    for (size_t i = 0; i < t->parts.size(); ++i) t->index[t->parts[i]] = static_cast<int>(i);

    if (!load_degree_from_cache(degree, *t)) {
        size_t dim = t->parts.size();
        t->e2m.assign(dim, std::vector<Int>(dim));
        t->h2m.assign(dim, std::vector<Int>(dim));
        t->s2m.assign(dim, std::vector<Int>(dim));
        t->p2m.assign(dim, std::vector<Int>(dim));
        for (size_t r = 0; r < dim; ++r) {
            for (size_t c = 0; c < dim; ++c) {
                t->e2m[r][c] = count_01_matrices(t->parts[r], t->parts[c]);
                t->h2m[r][c] = count_nim_matrices(t->parts[r], t->parts[c]);
                t->s2m[r][c] = count_ssyt(t->parts[r], t->parts[c]);
                t->p2m[r][c] = count_part_assignments(t->parts[r], t->parts[c]);
            }
        }
        store_degree_in_cache(degree, *t);
    }

    t->from_m_e = invert_transpose(t->e2m);
    t->from_m_h = invert_transpose(t->h2m);
    t->from_m_s = invert_transpose(t->s2m);
    t->from_m_p = invert_transpose(t->p2m);
    return t;
}

} // namespace

const DegreeTables& degree_tables(int degree) {
    require_degree_budget(degree, "degree_tables");
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_tables.find(degree);
    if (it != g_tables.end()) return *it->second;
    auto [it2, inserted] = g_tables.emplace(degree, build_degree(degree));
    return *it2->second;
}

void enable_disk_cache(const std::string& path) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_cache_path = path;
    g_cache_doc = nlohmann::json::object();
    {
        std::ifstream in(path);
        if (in) {
            nlohmann::json doc;
            bool ok = true;
            try {
                in >> doc;
            } catch (...) {
                ok = false; // unreadable cache: start over
            }
            if (ok && doc.is_object() && doc.value("magic", "") == kCacheMagic &&
                doc.value("version", -1) == kCacheVersion && doc.contains("degrees")) {
                g_cache_doc = std::move(doc);
            }
        }
    }
    // persist degrees already in memory so a warm process still seeds the file
    for (const auto& [degree, tables] : g_tables) store_degree_in_cache(degree, *tables);
}

void disable_disk_cache() {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_cache_path.clear();
    g_cache_doc = nlohmann::json::object();
}

} // namespace qchroma
