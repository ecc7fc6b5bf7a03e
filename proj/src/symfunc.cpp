#include "qchroma/symfunc.hpp"

#include <mutex>

#include "qchroma/limits.hpp"
#include "qchroma/transition.hpp"

namespace qchroma {

Basis basis_from_string(const std::string& name) {
    if (name == "m") return Basis::m;
    if (name == "e") return Basis::e;
    if (name == "h") return Basis::h;
    if (name == "p") return Basis::p;
    if (name == "s") return Basis::s;
    throw ParseError("unknown basis '" + name + "' (expected one of m,e,h,p,s)");
}

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::m: return "m";
        case Basis::e: return "e";
        case Basis::h: return "h";
        case Basis::p: return "p";
        case Basis::s: return "s";
    }
    return "?";
}

void SymFunc::add_term(const Partition& lambda, const RatQPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(lambda, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymFunc SymFunc::one() {
    SymFunc f;
    f.terms_.emplace(Partition(), RatQPoly(Rat(1)));
    return f;
}

SymFunc SymFunc::from_power_sum_coords(std::map<Partition, RatQPoly> terms) {
    SymFunc f;
    for (auto& [lambda, coeff] : terms)
        if (!coeff.is_zero()) f.terms_.emplace(lambda, std::move(coeff));
    return f;
}

std::vector<int> SymFunc::degrees() const {
    std::vector<int> out;
    for (const auto& [lambda, coeff] : terms_) {
        if (out.empty() || out.back() != lambda.size()) out.push_back(lambda.size());
    }
    return out;
}

int SymFunc::max_degree() const {
    int d = 0;
    for (const auto& [lambda, coeff] : terms_) d = std::max(d, lambda.size());
    return d;
}

bool SymFunc::is_homogeneous(int d) const {
    for (const auto& [lambda, coeff] : terms_)
        if (lambda.size() != d) return false;
    return true;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    for (const auto& [lambda, coeff] : o.terms_) add_term(lambda, coeff);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    for (const auto& [lambda, coeff] : o.terms_) add_term(lambda, -coeff);
    return *this;
}

SymFunc SymFunc::operator-() const {
    SymFunc f;
    for (const auto& [lambda, coeff] : terms_) f.terms_.emplace(lambda, -coeff);
    return f;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    require_degree_budget(a.max_degree() + b.max_degree(), "sf_mul");
    SymFunc f;
    for (const auto& [la, ca] : a.terms_)
        for (const auto& [lb, cb] : b.terms_) f.add_term(union_parts(la, lb), ca * cb);
    return f;
}

SymFunc SymFunc::scaled(const QPoly& s) const {
    SymFunc f;
    RatQPoly rs = to_rational(s);
    for (const auto& [lambda, coeff] : terms_) f.add_term(lambda, coeff * rs);
    return f;
}

SymFunc SymFunc::scaled(const Int& s) const {
    return scaled(QPoly(s));
}

SymFunc SymFunc::omega() const {
    SymFunc f;
    for (const auto& [lambda, coeff] : terms_) {
        bool flip = ((lambda.size() - lambda.length()) % 2) != 0;
        f.terms_.emplace(lambda, flip ? -coeff : coeff);
    }
    return f;
}

SymFunc SymFunc::specialize_q(long value) const {
    SymFunc f;
    Rat x(value);
    for (const auto& [lambda, coeff] : terms_) f.add_term(lambda, RatQPoly(coeff.eval(x)));
    return f;
}

namespace {

/* h_n and e_n in power-sum coordinates via the cycle-index formulas
 * h_n = sum p_l / z_l and e_n = sum (-1)^{n-len} p_l / z_l. */
SymFunc hom_unit(int n, bool elementary) {
    std::map<Partition, RatQPoly> terms;
    for (const auto& lambda : partitions_of(n)) {
        Rat c(1);
        c /= Rat(z_lambda(lambda));
        if (elementary && ((n - lambda.length()) % 2 != 0)) c = -c;
        terms.emplace(lambda, RatQPoly(c));
    }
    return SymFunc::from_power_sum_coords(std::move(terms));
}

const SymFunc& cached_unit(int n, bool elementary) {
    static std::mutex mutex;
    static std::map<std::pair<int, bool>, SymFunc> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(n, elementary);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, hom_unit(n, elementary)).first;
    return it->second;
}

SymFunc monomial_element(const Partition& mu) {
    const DegreeTables& t = degree_tables(mu.size());
    int col = t.index.at(mu);
    std::map<Partition, RatQPoly> terms;
    for (size_t l = 0; l < t.parts.size(); ++l) {
        // (P2M^{-1})[mu][l] = from_m_p[l][mu]
        const Rat& c = t.from_m_p[l][col];
        if (c != 0) terms.emplace(t.parts[l], RatQPoly(c));
    }
    return SymFunc::from_power_sum_coords(std::move(terms));
}

} // namespace

SymFunc SymFunc::basis_element(Basis b, const Partition& lambda) {
    require_degree_budget(lambda.size(), "basis_element");
    switch (b) {
        case Basis::p: {
            std::map<Partition, RatQPoly> terms;
            terms.emplace(lambda, RatQPoly(Rat(1)));
            return from_power_sum_coords(std::move(terms));
        }
        case Basis::h:
        case Basis::e: {
            SymFunc f = one();
            for (int part : lambda.parts()) f = f * cached_unit(part, b == Basis::e);
            return f;
        }
        case Basis::m:
            return monomial_element(lambda);
        case Basis::s: {
            // s_lambda = sum_mu K_{lambda,mu} m_mu
            const DegreeTables& t = degree_tables(lambda.size());
            int row = t.index.at(lambda);
            SymFunc f;
            for (size_t c = 0; c < t.parts.size(); ++c) {
                const Int& k = t.s2m[row][c];
                if (k != 0) f += monomial_element(t.parts[c]).scaled(k);
            }
            return f;
        }
    }
    throw Error("basis_element: bad basis");
}

SymFunc SymFunc::from_view(Basis b, const std::map<Partition, QPoly>& view) {
    SymFunc f;
    for (const auto& [lambda, coeff] : view) f += basis_element(b, lambda).scaled(coeff);
    return f;
}

std::map<Partition, QPoly> SymFunc::to_basis(Basis b) const {
    std::map<Partition, QPoly> out;
    if (b == Basis::p) {
        for (const auto& [lambda, coeff] : terms_)
            out.emplace(lambda, to_integral(coeff, "to_basis(p)"));
        return out;
    }
    for (int d : degrees()) {
        const DegreeTables& t = degree_tables(d);
        size_t dim = t.parts.size();
        // m-view of the degree-d slice: v_mu = sum_l c_l * p2m[l][mu]
        std::vector<RatQPoly> v(dim);
        for (const auto& [lambda, coeff] : terms_) {
            if (lambda.size() != d) continue;
            int row = t.index.at(lambda);
            for (size_t c = 0; c < dim; ++c) {
                const Int& entry = t.p2m[row][c];
                if (entry != 0) v[c] += coeff.scaled(Rat(entry));
            }
        }
        if (b == Basis::m) {
            for (size_t c = 0; c < dim; ++c)
                if (!v[c].is_zero()) out.emplace(t.parts[c], to_integral(v[c], "to_basis(m)"));
            continue;
        }
        const std::vector<std::vector<Rat>>* solve = nullptr;
        switch (b) {
            case Basis::e: solve = &t.from_m_e; break;
            case Basis::h: solve = &t.from_m_h; break;
            case Basis::s: solve = &t.from_m_s; break;
            default: break;
        }
        for (size_t r = 0; r < dim; ++r) {
            RatQPoly x;
            for (size_t c = 0; c < dim; ++c) {
                const Rat& entry = (*solve)[r][c];
                if (entry != 0 && !v[c].is_zero()) x += v[c].scaled(entry);
            }
            if (!x.is_zero()) out.emplace(t.parts[r], to_integral(x, "to_basis"));
        }
    }
    return out;
}

PositivityReport SymFunc::is_positive_in(Basis b) const {
    PositivityReport report;
    for (const auto& [lambda, coeff] : to_basis(b)) {
        if (!coeff.nonnegative()) {
            report.positive = false;
            report.offenders.push_back({lambda, coeff});
        }
    }
    return report;
}

SymFunc sf_basis_element(Basis b, const Partition& lambda) { return SymFunc::basis_element(b, lambda); }
SymFunc sf_add(const SymFunc& f, const SymFunc& g) { return f + g; }
SymFunc sf_mul(const SymFunc& f, const SymFunc& g) { return f * g; }
std::map<Partition, QPoly> to_basis(const SymFunc& f, Basis b) { return f.to_basis(b); }
SymFunc omega(const SymFunc& f) { return f.omega(); }
PositivityReport is_positive_in(const SymFunc& f, Basis b) { return f.is_positive_in(b); }

KostkaMatrix kostka_matrix(int n) {
    const DegreeTables& t = degree_tables(n);
    return KostkaMatrix{t.parts, t.s2m};
}

} // namespace qchroma
