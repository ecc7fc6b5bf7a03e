#include "qchroma/render.hpp"

#include <algorithm>
#include <sstream>

namespace qchroma {

Format format_from_string(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "latex") return Format::latex;
    throw ParseError("unknown format '" + name + "' (expected text, json or latex)");
}

namespace {

std::string qpoly_render(const QPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        Int c = p.coeff(i);
        if (c == 0) continue;
        bool negative = c < 0;
        Int abs = negative ? Int(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        std::string power;
        if (i == 0) {
            power = "";
        } else if (i == 1) {
            power = "q";
        } else {
            power = latex ? "q^{" + std::to_string(i) + "}" : "q^" + std::to_string(i);
        }
        if (abs != 1 || i == 0) out += abs.get_str();
        out += power;
    }
    return out;
}

long coeff_as_long(const Int& v, const char* what) {
    if (!v.fits_slong_p()) throw Error(std::string(what) + ": coefficient exceeds JSON range");
    return v.get_si();
}

std::string subscript(const Partition& lambda) {
    if (lambda.empty()) return "0";
    std::string s;
    for (int i = 0; i < lambda.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(lambda.part(i));
    }
    return s;
}

} // namespace

std::string qpoly_to_text(const QPoly& p) { return qpoly_render(p, false); }
std::string qpoly_to_latex(const QPoly& p) { return qpoly_render(p, true); }

Json qpoly_to_json(const QPoly& p) {
    Json arr = Json::array();
    for (const Int& c : p.coeffs()) arr.push_back(coeff_as_long(c, "qpoly_to_json"));
    return arr;
}

QPoly qpoly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("qpoly: expected array of coefficients");
    std::vector<Int> cs;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("qpoly: expected integer coefficient");
        cs.emplace_back(v.get<long>());
    }
    return QPoly::from_coeffs(std::move(cs));
}

std::vector<std::pair<Partition, QPoly>> view_in_render_order(
    const std::map<Partition, QPoly>& view) {
    std::vector<std::pair<Partition, QPoly>> terms(view.begin(), view.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first.parts() < b.first.parts();
    });
    return terms;
}

namespace {

std::string sym_render(const SymFunc& f, Basis b, bool latex) {
    auto terms = view_in_render_order(f.to_basis(b));
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [lambda, coeff] : terms) {
        if (!out.empty()) out += " + ";
        out += "(" + qpoly_render(coeff, latex) + ")";
        out += basis_name(b) + "_{" + subscript(lambda) + "}";
    }
    return out;
}

} // namespace

std::string sym_to_text(const SymFunc& f, Basis b) { return sym_render(f, b, false); }
std::string sym_to_latex(const SymFunc& f, Basis b) { return sym_render(f, b, true); }

Json sym_to_json(const SymFunc& f, Basis b) {
    Json out;
    out["basis"] = basis_name(b);
    Json terms = Json::array();
    for (const auto& [lambda, coeff] : view_in_render_order(f.to_basis(b))) {
        Json term;
        term["partition"] = lambda.parts();
        term["coeff"] = qpoly_to_json(coeff);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

SymFunc sym_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms"))
        throw ParseError("symfunc: expected {basis, terms}");
    Basis b = basis_from_string(j["basis"].get<std::string>());
    std::map<Partition, QPoly> view;
    for (const auto& term : j["terms"]) {
        std::vector<int> parts = term.at("partition").get<std::vector<int>>();
        view[Partition(std::move(parts))] = qpoly_from_json(term.at("coeff"));
    }
    return SymFunc::from_view(b, view);
}

namespace {

std::string word_text(const std::vector<int>& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

std::string pair_text(const CycWordPair& p) {
    return "(" + word_text(p.w) + ", " + word_text(p.z) + ")";
}

} // namespace

std::string delta_table_text(const HessFunc& m, int k, const DeltaReport& report) {
    std::ostringstream out;
    out << "Delta table for m=(" << m.to_string() << "), k=" << k << "\n";
    size_t w_width = 0, img_width = 0;
    for (const auto& row : report.table) {
        w_width = std::max(w_width, word_text(row.w).size());
        img_width = std::max(img_width, pair_text(row.step.image).size());
    }
    for (const auto& row : report.table) {
        std::string w = word_text(row.w);
        std::string img = pair_text(row.step.image);
        out << w << std::string(w_width - w.size() + 2, ' ') << img;
        if (!row.step.violations.empty()) {
            out << std::string(img_width - img.size() + 2, ' ');
            for (size_t i = 0; i < row.step.violations.size(); ++i) {
                if (i) out << ", ";
                out << row.step.violations[i];
            }
        }
        out << "\n";
    }
    out << "|S_1| = " << report.s1_count << ", |S_2| = " << report.s2_count
        << ", injective: " << (report.injective ? "yes" : "no")
        << ", c_k(m;1) = " << (report.ck.eval(Int(1))).get_str()
        << (report.count_identity ? " = |S_2| - |S_1|" : " (count mismatch!)") << "\n";
    return out.str();
}

Json delta_table_json(const HessFunc& m, int k, const DeltaReport& report) {
    Json out;
    out["hessenberg"] = m.values();
    out["k"] = k;
    out["s1_count"] = report.s1_count;
    out["s2_count"] = report.s2_count;
    out["injective"] = report.injective;
    out["ck_at_1"] = coeff_as_long(report.ck.eval(Int(1)), "delta_table_json");
    out["ck"] = qpoly_to_json(report.ck);
    out["count_identity"] = report.count_identity;
    Json rows = Json::array();
    for (const auto& row : report.table) {
        Json r;
        r["w"] = row.w;
        r["image_w"] = row.step.image.w;
        r["image_z"] = row.step.image.z;
        r["j"] = row.step.j;
        r["violations"] = row.step.violations;
        rows.push_back(std::move(r));
    }
    out["rows"] = std::move(rows);
    return out;
}

} // namespace qchroma
