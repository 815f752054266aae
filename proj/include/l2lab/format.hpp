#ifndef L2LAB_FORMAT_HPP
#define L2LAB_FORMAT_HPP

#include <functional>
#include <string>
#include <vector>

#include "crossed_product.hpp"
#include "group_ring.hpp"
#include "matrix.hpp"
#include "rational_function.hpp"

namespace l2lab {

namespace detail {

// Renders a list of (monomial, coefficient) terms as a sum the element
// grammar re-parses: coefficients 1/-1 are folded into the sign, mixed
// complex coefficients go in parentheses.
inline std::string format_terms(const std::vector<std::pair<std::string, gaussian_rational>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : terms) {
        bool negative = false;
        std::string body;
        gaussian_rational c = coeff;
        if (c.im() == 0 || c.re() == 0) {
            const rational& part = c.im() == 0 ? c.re() : c.im();
            if (part < 0) {
                negative = true;
                c = -c;
            }
            body = format_gaussian(c);
        } else {
            body = "(" + format_gaussian(c) + ")";
        }
        if (mono != "e") {
            body = (body == "1") ? mono : body + "*" + mono;
        }
        if (first) {
            out = (negative ? "-" : "") + body;
            first = false;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

} // namespace detail

inline std::string abelian_variable_name(int rank, int index) {
    if (rank == 1) return "z";
    if (rank == 2) return index == 0 ? "z" : "w";
    return "z" + std::to_string(index + 1);
}

inline std::string format_laurent(const laurent_poly& p) {
    std::vector<std::pair<std::string, gaussian_rational>> terms;
    for (const auto& [e, c] : p.terms()) {
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += abelian_variable_name(p.vars(), static_cast<int>(k));
            if (e[k] != 1) mono += "^" + std::to_string(e[k]);
        }
        terms.emplace_back(mono.empty() ? "e" : mono, c);
    }
    return detail::format_terms(terms);
}

template <class G>
std::string format_element(const group_ring_element<G>& a) {
    std::vector<std::pair<std::string, gaussian_rational>> terms;
    for (const auto& [e, c] : a.terms()) {
        terms.emplace_back(a.group()->element_name(e), c);
    }
    return detail::format_terms(terms);
}

template <class Base>
std::string format_element(const crossed_element<crossed_product<Base>>& a) {
    const auto* cp = a.product();
    if (!cp || a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [h, r] : a.terms()) {
        std::string chunk;
        if (h == cp->act().identity()) {
            chunk = format_element(r);
            if (!first && !chunk.empty() && chunk[0] == '-') chunk = "(" + chunk + ")";
        } else {
            const std::string section = cp->act().element_name(h);
            chunk = (r == group_ring_element<Base>::one(cp->base()))
                        ? section
                        : "(" + format_element(r) + ")*" + section;
        }
        out += first ? chunk : " + " + chunk;
        first = false;
    }
    return out;
}

inline std::string format_rational_function(const rational_function& f) {
    if (f.is_zero()) return "0";
    const laurent_poly one = laurent_poly::constant(f.den().vars(), gaussian_rational(1));
    if (f.den() == one) return format_laurent(f.num());
    return "(" + format_laurent(f.num()) + ")/(" + format_laurent(f.den()) + ")";
}

template <class T, class F>
std::string format_matrix(const matrix<T>& m, F&& entry_formatter) {
    if (m.rows() == 0 || m.cols() == 0) return "[]";
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i == 0 ? "[" : ",[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ", ";
            out += entry_formatter(m(i, j));
        }
        out += "]";
    }
    return out + "]";
}

inline std::string format_matrix(const matrix<laurent_poly>& m) {
    return format_matrix(m, [](const laurent_poly& p) { return format_laurent(p); });
}

inline std::string format_matrix(const matrix<rational_function>& m) {
    return format_matrix(m, [](const rational_function& f) { return format_rational_function(f); });
}

template <class E>
std::string format_element_matrix(const matrix<E>& m) {
    return format_matrix(m, [](const E& x) { return format_element(x); });
}

} // namespace l2lab

#endif
