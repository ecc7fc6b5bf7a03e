#pragma once

#include <map>
#include <string>
#include <vector>

#include "qchroma/partition.hpp"
#include "qchroma/qpoly.hpp"

namespace qchroma {

enum class Basis { m, e, h, p, s };

Basis basis_from_string(const std::string& name);
std::string basis_name(Basis b);

struct PositivityOffender {
    Partition lambda;
    QPoly coefficient;
};

struct PositivityReport {
    bool positive = true;
    std::vector<PositivityOffender> offenders;
};

/* A graded symmetric function. Internally stored in the power-sum basis with
 * exact rational q-polynomial coefficients: products concatenate index
 * partitions and omega is a sign, so no structure constants are needed.
 * Every public view (to_basis) clears denominators and throws
 * IntegralityError when that is impossible. */
class SymFunc {
public:
    SymFunc() = default; // zero

    static SymFunc zero() { return {}; }
    static SymFunc one();
    static SymFunc basis_element(Basis b, const Partition& lambda);

    /* Internal-representation escape hatches; coefficients are rational. */
    static SymFunc from_power_sum_coords(std::map<Partition, RatQPoly> terms);
    const std::map<Partition, RatQPoly>& power_sum_coords() const { return terms_; }

    static SymFunc from_view(Basis b, const std::map<Partition, QPoly>& view);

    bool is_zero() const { return terms_.empty(); }
    std::vector<int> degrees() const;
    int max_degree() const;

    /* True when all terms are supported on partitions of exactly d (the zero
     * function is homogeneous of every degree). */
    bool is_homogeneous(int d) const;

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    SymFunc operator-() const;
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);

    SymFunc scaled(const QPoly& s) const;
    SymFunc scaled(const Int& s) const;

    SymFunc omega() const;

    /* Substitute an integer for q in every coefficient. */
    SymFunc specialize_q(long value) const;

    std::map<Partition, QPoly> to_basis(Basis b) const;

    PositivityReport is_positive_in(Basis b) const;

    friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

private:
    void add_term(const Partition& lambda, const RatQPoly& coeff);

    std::map<Partition, RatQPoly> terms_;
};

/* Free-function spellings for the ring operations. */
SymFunc sf_basis_element(Basis b, const Partition& lambda);
SymFunc sf_add(const SymFunc& f, const SymFunc& g);
SymFunc sf_mul(const SymFunc& f, const SymFunc& g);
std::map<Partition, QPoly> to_basis(const SymFunc& f, Basis b);
SymFunc omega(const SymFunc& f);
PositivityReport is_positive_in(const SymFunc& f, Basis b);

/* Kostka matrix for degree n in canonical partition order: K[l][m] counts
 * SSYT of shape parts[l] and content parts[m]. */
struct KostkaMatrix {
    std::vector<Partition> parts;
    std::vector<std::vector<Int>> entries;
};
KostkaMatrix kostka_matrix(int n);

} // namespace qchroma
