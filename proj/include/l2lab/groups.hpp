#ifndef L2LAB_GROUPS_HPP
#define L2LAB_GROUPS_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace l2lab {

// ---------------------------------------------------------------------------
// Finite groups, given by an explicit multiplication table.
// ---------------------------------------------------------------------------

class finite_group {
public:
    using element = std::uint32_t;
    using element_less = std::less<element>;

    static finite_group cyclic(unsigned order) {
        if (order == 0) throw invalid_group("cyclic group of order 0");
        std::vector<std::vector<element>> table(order, std::vector<element>(order));
        for (unsigned a = 0; a < order; ++a)
            for (unsigned b = 0; b < order; ++b) table[a][b] = (a + b) % order;
        finite_group g(table);
        for (unsigned a = 0; a < order; ++a) {
            g.names_[a] = a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a));
        }
        return g;
    }

    static finite_group from_table(const std::vector<std::vector<element>>& table) {
        return finite_group(table);
    }

    std::uint32_t order() const { return order_; }
    element identity() const { return identity_; }
    element multiply(element a, element b) const {
        if (a >= order_ || b >= order_) throw invalid_group("element index out of range");
        return table_[a * order_ + b];
    }
    element inverse(element a) const { return inverse_[a]; }

    const std::string& element_name(element a) const { return names_[a]; }
    void set_element_name(element a, std::string name) { names_[a] = std::move(name); }

    // All orders of subgroups, found by closing generated subsets. Exhaustive;
    // meant for the small orders this library works with.
    std::set<unsigned> subgroup_orders() const {
        std::set<std::vector<element>> subgroups;
        std::vector<std::vector<element>> work;
        std::vector<element> trivial{identity_};
        subgroups.insert(trivial);
        work.push_back(trivial);
        while (!work.empty()) {
            std::vector<element> s = work.back();
            work.pop_back();
            for (element g = 0; g < order_; ++g) {
                if (std::binary_search(s.begin(), s.end(), g)) continue;
                std::vector<element> extended = closure(s, g);
                if (subgroups.insert(extended).second) work.push_back(extended);
            }
        }
        std::set<unsigned> orders;
        for (const auto& s : subgroups) orders.insert(static_cast<unsigned>(s.size()));
        return orders;
    }

    friend bool operator==(const finite_group& a, const finite_group& b) {
        return a.table_ == b.table_;
    }

    // Automorphism given as a permutation of element indices.
    class automorphism {
    public:
        automorphism(const finite_group& g, std::vector<element> map) : map_(std::move(map)) {
            if (map_.size() != g.order()) throw invalid_group("automorphism has wrong size");
            std::vector<bool> seen(g.order(), false);
            for (element x : map_) {
                if (x >= g.order() || seen[x]) throw invalid_group("automorphism is not a bijection");
                seen[x] = true;
            }
            if (map_[g.identity()] != g.identity())
                throw invalid_group("automorphism moves the identity");
            for (element a = 0; a < g.order(); ++a)
                for (element b = 0; b < g.order(); ++b)
                    if (map_[g.multiply(a, b)] != g.multiply(map_[a], map_[b]))
                        throw invalid_group("permutation is not a group automorphism");
        }

        static automorphism identity_map(const finite_group& g) {
            std::vector<element> id(g.order());
            for (element a = 0; a < g.order(); ++a) id[a] = a;
            return automorphism(g, std::move(id));
        }

        element apply(element a) const { return map_[a]; }
        bool is_identity() const {
            for (element a = 0; a < map_.size(); ++a)
                if (map_[a] != a) return false;
            return true;
        }

        automorphism inverted() const {
            automorphism out;
            out.map_.resize(map_.size());
            for (element a = 0; a < map_.size(); ++a) out.map_[map_[a]] = a;
            return out;
        }

    private:
        automorphism() = default;
        std::vector<element> map_;
    };

private:
    explicit finite_group(const std::vector<std::vector<element>>& table) {
        order_ = static_cast<std::uint32_t>(table.size());
        if (order_ == 0) throw invalid_group("empty multiplication table");
        table_.resize(static_cast<std::size_t>(order_) * order_);
        for (std::uint32_t i = 0; i < order_; ++i) {
            if (table[i].size() != order_) throw invalid_group("multiplication table is not square");
            for (std::uint32_t j = 0; j < order_; ++j) {
                if (table[i][j] >= order_) throw invalid_group("table entry out of range");
                table_[i * order_ + j] = table[i][j];
            }
        }
        identity_ = find_identity();
        inverse_ = find_inverses();
        if (order_ <= 64) check_associativity();
        names_.resize(order_);
        for (std::uint32_t i = 0; i < order_; ++i) names_[i] = "a" + std::to_string(i);
        names_[identity_] = "e";
    }

    element find_identity() const {
        for (element e = 0; e < order_; ++e) {
            bool ok = true;
            for (element a = 0; a < order_ && ok; ++a)
                ok = table_[e * order_ + a] == a && table_[a * order_ + e] == a;
            if (ok) return e;
        }
        throw invalid_group("multiplication table has no identity");
    }

    std::vector<element> find_inverses() const {
        std::vector<element> inv(order_, order_);
        for (element a = 0; a < order_; ++a) {
            for (element b = 0; b < order_; ++b) {
                if (table_[a * order_ + b] == identity_ && table_[b * order_ + a] == identity_) {
                    inv[a] = b;
                    break;
                }
            }
            if (inv[a] == order_) throw invalid_group("element without inverse");
        }
        return inv;
    }

    // Closure of a sorted subgroup plus one extra element under products;
    // finiteness makes this the generated subgroup.
    std::vector<element> closure(const std::vector<element>& s, element extra) const {
        std::vector<bool> in(order_, false);
        std::vector<element> members;
        const auto add = [&](element x) {
            if (!in[x]) {
                in[x] = true;
                members.push_back(x);
            }
        };
        for (element x : s) add(x);
        add(extra);
        for (std::size_t k = 0; k < members.size(); ++k) {
            for (std::size_t j = 0; j < members.size(); ++j) {
                add(multiply(members[k], members[j]));
                add(multiply(members[j], members[k]));
            }
        }
        std::sort(members.begin(), members.end());
        return members;
    }

    void check_associativity() const {
        for (element a = 0; a < order_; ++a)
            for (element b = 0; b < order_; ++b)
                for (element c = 0; c < order_; ++c)
                    if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
                        throw invalid_group("multiplication table is not associative");
    }

    std::uint32_t order_;
    std::vector<element> table_;
    element identity_;
    std::vector<element> inverse_;
    std::vector<std::string> names_;
};

// ---------------------------------------------------------------------------
// Free abelian groups Z^n; elements are integer exponent vectors.
// ---------------------------------------------------------------------------

class free_abelian_group {
public:
    using element = std::vector<std::int64_t>;
    using element_less = std::less<element>;

    explicit free_abelian_group(int rank) : rank_(rank) {
        if (rank < 1) throw invalid_group("free abelian group needs rank >= 1");
    }

    int rank() const { return rank_; }
    element identity() const { return element(static_cast<std::size_t>(rank_), 0); }

    element multiply(element a, const element& b) const {
        check(a);
        check(b);
        for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
        return a;
    }
    element inverse(element a) const {
        check(a);
        for (auto& x : a) x = -x;
        return a;
    }

    element generator(int index) const {
        element e = identity();
        e[static_cast<std::size_t>(index)] = 1;
        return e;
    }

    std::string generator_name(int index) const {
        if (rank_ == 1) return "z";
        if (rank_ == 2) return index == 0 ? "z" : "w";
        return "z" + std::to_string(index + 1);
    }

    std::string element_name(const element& a) const {
        check(a);
        std::string out;
        for (int k = 0; k < rank_; ++k) {
            const std::int64_t p = a[static_cast<std::size_t>(k)];
            if (p == 0) continue;
            if (!out.empty()) out += "*";
            out += generator_name(k);
            if (p != 1) out += "^" + std::to_string(p);
        }
        return out.empty() ? "e" : out;
    }

    friend bool operator==(const free_abelian_group& a, const free_abelian_group& b) {
        return a.rank_ == b.rank_;
    }

    // Automorphism of Z^n: an integer matrix with determinant +-1. The inverse
    // is computed over the rationals and checked to be integral.
    class automorphism {
    public:
        automorphism(const free_abelian_group& g, std::vector<std::vector<std::int64_t>> m)
            : fwd_(std::move(m)) {
            const std::size_t n = static_cast<std::size_t>(g.rank());
            if (fwd_.size() != n) throw invalid_group("automorphism matrix has wrong size");
            for (const auto& row : fwd_)
                if (row.size() != n) throw invalid_group("automorphism matrix is not square");
            inv_ = integral_inverse(fwd_);
        }

        static automorphism identity_map(const free_abelian_group& g) {
            const std::size_t n = static_cast<std::size_t>(g.rank());
            std::vector<std::vector<std::int64_t>> id(n, std::vector<std::int64_t>(n, 0));
            for (std::size_t k = 0; k < n; ++k) id[k][k] = 1;
            return automorphism(g, std::move(id));
        }

        element apply(const element& a) const {
            element out(a.size(), 0);
            for (std::size_t i = 0; i < fwd_.size(); ++i)
                for (std::size_t j = 0; j < a.size(); ++j) out[i] += fwd_[i][j] * a[j];
            return out;
        }

        bool is_identity() const {
            for (std::size_t i = 0; i < fwd_.size(); ++i)
                for (std::size_t j = 0; j < fwd_.size(); ++j)
                    if (fwd_[i][j] != (i == j ? 1 : 0)) return false;
            return true;
        }

        automorphism inverted() const {
            automorphism out = *this;
            std::swap(out.fwd_, out.inv_);
            return out;
        }

    private:
        static std::vector<std::vector<std::int64_t>> integral_inverse(
            const std::vector<std::vector<std::int64_t>>& m);

        std::vector<std::vector<std::int64_t>> fwd_;
        std::vector<std::vector<std::int64_t>> inv_;
    };

private:
    void check(const element& a) const {
        if (a.size() != static_cast<std::size_t>(rank_))
            throw mismatched_groups("exponent vector has wrong rank");
    }

    int rank_;
};

// ---------------------------------------------------------------------------
// Free groups; elements are reduced words. Letter +k is generator k (1-based),
// letter -k its inverse.
// ---------------------------------------------------------------------------

class free_group {
public:
    using element = std::vector<std::int32_t>;

    // Graded order: shorter words first, then letterwise with
    // x < x^-1 < y < y^-1 < ... This makes ball enumeration and term maps
    // deterministic.
    struct element_less {
        static int letter_key(std::int32_t l) {
            return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1;
        }
        bool operator()(const element& a, const element& b) const {
            if (a.size() != b.size()) return a.size() < b.size();
            for (std::size_t k = 0; k < a.size(); ++k) {
                if (a[k] != b[k]) return letter_key(a[k]) < letter_key(b[k]);
            }
            return false;
        }
    };

    explicit free_group(int rank) : rank_(rank) {
        if (rank < 1) throw invalid_group("free group needs rank >= 1");
    }

    int rank() const { return rank_; }
    element identity() const { return {}; }

    element multiply(const element& a, const element& b) const {
        check(a);
        check(b);
        element out = a;
        for (std::int32_t letter : b) {
            if (!out.empty() && out.back() == -letter) {
                out.pop_back();
            } else {
                out.push_back(letter);
            }
        }
        return out;
    }

    element inverse(const element& a) const {
        check(a);
        element out;
        out.reserve(a.size());
        for (auto it = a.rbegin(); it != a.rend(); ++it) out.push_back(-*it);
        return out;
    }

    element generator(int index) const { return {static_cast<std::int32_t>(index + 1)}; }

    // All reduced words of length <= radius in the order of element_less.
    std::vector<element> ball(unsigned radius) const {
        std::vector<element> out{identity()};
        std::vector<element> sphere{identity()};
        for (unsigned r = 1; r <= radius; ++r) {
            std::vector<element> next;
            for (const element& w : sphere) {
                for (int g = 0; g < rank_; ++g) {
                    for (std::int32_t letter : {static_cast<std::int32_t>(g + 1),
                                                static_cast<std::int32_t>(-(g + 1))}) {
                        if (!w.empty() && w.back() == -letter) continue;
                        element ext = w;
                        ext.push_back(letter);
                        next.push_back(std::move(ext));
                    }
                }
            }
            std::sort(next.begin(), next.end(), element_less{});
            out.insert(out.end(), next.begin(), next.end());
            sphere = std::move(next);
        }
        return out;
    }

    std::string generator_name(int index) const {
        if (rank_ == 1) return "x";
        if (rank_ == 2) return index == 0 ? "x" : "y";
        return "x" + std::to_string(index + 1);
    }

    std::string element_name(const element& a) const {
        if (a.empty()) return "e";
        std::string out;
        std::size_t k = 0;
        while (k < a.size()) {
            std::size_t run = k;
            while (run < a.size() && a[run] == a[k]) ++run;
            const std::size_t count = run - k;
            if (!out.empty()) out += "*";
            out += generator_name(std::abs(a[k]) - 1);
            if (a[k] < 0) {
                out += "^-" + std::to_string(count);
            } else if (count > 1) {
                out += "^" + std::to_string(count);
            }
            k = run;
        }
        return out;
    }

    friend bool operator==(const free_group& a, const free_group& b) { return a.rank_ == b.rank_; }

private:
    void check(const element& a) const {
        for (std::int32_t letter : a) {
            if (letter == 0 || std::abs(letter) > rank_)
                throw mismatched_groups("word uses a generator outside this free group");
        }
    }

    int rank_;
};

inline std::vector<std::vector<std::int64_t>> free_abelian_group::automorphism::integral_inverse(
    const std::vector<std::vector<std::int64_t>>& m) {
    const std::size_t n = m.size();
    matrix<rational> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = rational(m[i][j]);
        aug(i, n + i) = 1;
    }
    // Plain Gauss-Jordan over Q; the matrix is tiny.
    std::size_t row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = row;
        while (pivot < n && aug(pivot, col) == 0) ++pivot;
        if (pivot == n) throw invalid_group("automorphism matrix is singular");
        if (pivot != row)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(row, j), aug(pivot, j));
        const rational inv = rational(1) / aug(row, col);
        for (std::size_t j = 0; j < 2 * n; ++j) aug(row, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || aug(i, col) == 0) continue;
            const rational f = aug(i, col);
            for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(row, j);
        }
        ++row;
    }
    std::vector<std::vector<std::int64_t>> out(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const rational& x = aug(i, n + j);
            if (!is_integer(x))
                throw invalid_group("automorphism matrix is not invertible over the integers");
            out[i][j] = static_cast<std::int64_t>(numerator(x));
        }
    }
    return out;
}

inline std::size_t ball_size(const free_group& g, unsigned radius) {
    return g.ball(radius).size();
}

// The set of orders of finite subgroups, per group family. Free groups and
// free abelian groups are torsion free, so only the trivial subgroup is
// finite.
inline std::set<unsigned> finite_subgroup_orders(const finite_group& g) { return g.subgroup_orders(); }
inline std::set<unsigned> finite_subgroup_orders(const free_abelian_group&) { return {1u}; }
inline std::set<unsigned> finite_subgroup_orders(const free_group&) { return {1u}; }

} // namespace l2lab

#endif
