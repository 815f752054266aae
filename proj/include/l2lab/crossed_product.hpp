#ifndef L2LAB_CROSSED_PRODUCT_HPP
#define L2LAB_CROSSED_PRODUCT_HPP

#include <map>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "group_ring.hpp"

namespace l2lab {

template <class CP>
class crossed_element;

// Crossed product R*H of the group ring of a base group with a finite acting
// group H: a free R-module on section symbols mu(h) with
//
//   (r mu(h)) (r' mu(h')) = r alpha_h(r') tau(h,h') mu(hh').
//
// Construction validates the section normalization mu(e) = e and
// mu(h^-1) = mu(h)^-1, that every tau value is a unit (an explicit inverse is
// part of the input), the cocycle identity on all triples of H, and the
// compatibility of the action with conjugation by tau on base generators.
// The set of finite subgroup orders is declared input: subgroup enumeration
// in the resulting infinite group is out of reach here.
template <class Base>
class crossed_product {
public:
    using base_group = Base;
    using base_ring_element = group_ring_element<Base>;
    using act_element = finite_group::element;
    using base_automorphism = typename Base::automorphism;

    // The base group lives behind a shared_ptr so that ring elements keep a
    // stable group address across copies and moves of the crossed product;
    // the cocycle tables are rebound onto it here.
    crossed_product(Base base, finite_group act, std::vector<base_automorphism> action,
                    const std::vector<std::vector<base_ring_element>>& tau,
                    const std::vector<std::vector<base_ring_element>>& tau_inverse,
                    std::set<unsigned> declared_finite_subgroup_orders)
        : base_(std::make_shared<const Base>(std::move(base))),
          act_(std::move(act)),
          alpha_(std::move(action)),
          tau_(rebind_table(tau)),
          tau_inv_(rebind_table(tau_inverse)),
          orders_(std::move(declared_finite_subgroup_orders)) {
        validate();
    }

    // Split crossed product: trivial cocycle, only the action matters.
    static crossed_product split(Base base, finite_group act, std::vector<base_automorphism> action,
                                 std::set<unsigned> declared_orders) {
        const std::uint32_t n = act.order();
        const base_ring_element unit = base_ring_element::one(base);
        std::vector<std::vector<base_ring_element>> tau(n, std::vector<base_ring_element>(n, unit));
        return crossed_product(std::move(base), std::move(act), std::move(action), tau, tau,
                               std::move(declared_orders));
    }

    const Base& base() const { return *base_; }
    const finite_group& act() const { return act_; }
    std::uint32_t act_order() const { return act_.order(); }
    const std::set<unsigned>& declared_finite_subgroup_orders() const { return orders_; }

    const base_ring_element& tau(act_element a, act_element b) const { return tau_[a][b]; }
    const base_ring_element& tau_inverse(act_element a, act_element b) const { return tau_inv_[a][b]; }

    base_ring_element apply_action(act_element h, const base_ring_element& r) const {
        base_ring_element out(*base_);
        for (const auto& [e, c] : r.terms()) {
            out += base_ring_element::of(*base_, alpha_[h].apply(e), c);
        }
        return out;
    }

    friend bool operator==(const crossed_product& a, const crossed_product& b) { return &a == &b; }

private:
    base_ring_element rebind(const base_ring_element& r) const {
        base_ring_element out(*base_);
        for (const auto& [e, c] : r.terms()) out += base_ring_element::of(*base_, e, c);
        return out;
    }

    std::vector<std::vector<base_ring_element>> rebind_table(
        const std::vector<std::vector<base_ring_element>>& table) const {
        std::vector<std::vector<base_ring_element>> out;
        out.reserve(table.size());
        for (const auto& row : table) {
            std::vector<base_ring_element> r;
            r.reserve(row.size());
            for (const auto& x : row) r.push_back(rebind(x));
            out.push_back(std::move(r));
        }
        return out;
    }

    void validate() const {
        const std::uint32_t n = act_.order();
        if (alpha_.size() != n) throw invalid_crossed_product("one automorphism per acting element required");
        if (tau_.size() != n || tau_inv_.size() != n)
            throw invalid_crossed_product("cocycle table must be |H| x |H|");
        for (std::uint32_t a = 0; a < n; ++a) {
            if (tau_[a].size() != n || tau_inv_[a].size() != n)
                throw invalid_crossed_product("cocycle table must be |H| x |H|");
        }
        if (!alpha_[act_.identity()].is_identity())
            throw invalid_crossed_product("the identity of H must act trivially");

        const base_ring_element unit = base_ring_element::one(*base_);
        for (std::uint32_t a = 0; a < n; ++a) {
            for (std::uint32_t b = 0; b < n; ++b) {
                if (!(tau_[a][b] * tau_inv_[a][b] == unit) || !(tau_inv_[a][b] * tau_[a][b] == unit))
                    throw invalid_crossed_product("cocycle value is not a unit");
            }
        }
        // mu(e) = e and mu(h^-1) = mu(h)^-1 pin down these cocycle values.
        const act_element e = act_.identity();
        for (std::uint32_t h = 0; h < n; ++h) {
            if (!(tau_[e][h] == unit) || !(tau_[h][e] == unit))
                throw invalid_crossed_product("cocycle must be normalized at the identity");
            if (!(tau_[h][act_.inverse(h)] == unit))
                throw invalid_crossed_product("section must satisfy mu(h^-1) = mu(h)^-1");
        }
        // Associativity of the twisted product on all H-triples.
        for (std::uint32_t a = 0; a < n; ++a) {
            for (std::uint32_t b = 0; b < n; ++b) {
                for (std::uint32_t c = 0; c < n; ++c) {
                    const base_ring_element lhs = tau_[a][b] * tau_[act_.multiply(a, b)][c];
                    const base_ring_element rhs =
                        apply_action(a, tau_[b][c]) * tau_[a][act_.multiply(b, c)];
                    if (!(lhs == rhs)) throw invalid_crossed_product("cocycle identity fails");
                }
            }
        }
        // alpha_a alpha_b = c_{tau(a,b)} alpha_{ab}, checked on base generators.
        for (std::uint32_t a = 0; a < n; ++a) {
            for (std::uint32_t b = 0; b < n; ++b) {
                for (const auto& r : base_generator_elements()) {
                    const base_ring_element lhs = apply_action(a, apply_action(b, r));
                    const base_ring_element rhs =
                        tau_[a][b] * apply_action(act_.multiply(a, b), r) * tau_inv_[a][b];
                    if (!(lhs == rhs))
                        throw invalid_crossed_product("action is incompatible with the cocycle");
                }
            }
        }
    }

    std::vector<base_ring_element> base_generator_elements() const {
        std::vector<base_ring_element> out;
        if constexpr (std::is_same_v<Base, finite_group>) {
            for (std::uint32_t g = 0; g < base_->order(); ++g)
                out.push_back(base_ring_element::of(*base_, g));
        } else {
            for (int k = 0; k < base_->rank(); ++k)
                out.push_back(base_ring_element::of(*base_, base_->generator(k)));
        }
        return out;
    }

    std::shared_ptr<const Base> base_;
    finite_group act_;
    std::vector<base_automorphism> alpha_;
    std::vector<std::vector<base_ring_element>> tau_;
    std::vector<std::vector<base_ring_element>> tau_inv_;
    std::set<unsigned> orders_;
};

// Element of a crossed product, stored H-graded: a finite map h -> base ring
// coefficient. Restriction to the base ring is then just the mu(e) slot.
template <class CP>
class crossed_element {
public:
    using product_type = CP;
    using act_element = typename CP::act_element;
    using base_ring_element = typename CP::base_ring_element;

    crossed_element() = default;
    explicit crossed_element(const CP& cp) : cp_(&cp) {}

    static crossed_element from_base(const CP& cp, base_ring_element r) {
        crossed_element out(cp);
        if (!r.is_zero()) out.terms_.emplace(cp.act().identity(), std::move(r));
        return out;
    }

    static crossed_element section(const CP& cp, act_element h) {
        crossed_element out(cp);
        out.terms_.emplace(h, base_ring_element::one(cp.base()));
        return out;
    }

    static crossed_element scalar(const CP& cp, gaussian_rational c) {
        return from_base(cp, base_ring_element::scalar(cp.base(), std::move(c)));
    }

    static crossed_element one(const CP& cp) { return scalar(cp, gaussian_rational(1)); }

    const CP* product() const { return cp_; }
    const std::map<act_element, base_ring_element>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    base_ring_element base_coefficient(act_element h) const {
        auto it = terms_.find(h);
        return it == terms_.end() ? base_ring_element() : it->second;
    }

    gaussian_rational trace() const {
        if (!cp_) return gaussian_rational(0);
        return base_coefficient(cp_->act().identity()).trace();
    }

    crossed_element star() const {
        crossed_element out;
        out.cp_ = cp_;
        if (!cp_) return out;
        for (const auto& [h, r] : terms_) {
            const act_element hi = cp_->act().inverse(h);
            out.add_term(hi, cp_->apply_action(hi, r.star()));
        }
        return out;
    }

    crossed_element operator-() const {
        crossed_element out;
        out.cp_ = cp_;
        for (const auto& [h, r] : terms_) out.terms_.emplace(h, -r);
        return out;
    }

    friend crossed_element operator+(const crossed_element& a, const crossed_element& b) {
        const CP* cp = common(a, b);
        crossed_element out;
        out.cp_ = cp;
        out.terms_ = a.terms_;
        for (const auto& [h, r] : b.terms_) out.add_term(h, r);
        return out;
    }

    friend crossed_element operator-(const crossed_element& a, const crossed_element& b) {
        return a + (-b);
    }

    friend crossed_element operator*(const crossed_element& a, const crossed_element& b) {
        const CP* cp = common(a, b);
        crossed_element out;
        out.cp_ = cp;
        if (!cp) return out;
        for (const auto& [h, r] : a.terms_) {
            for (const auto& [k, s] : b.terms_) {
                out.add_term(cp->act().multiply(h, k),
                             r * cp->apply_action(h, s) * cp->tau(h, k));
            }
        }
        return out;
    }

    friend crossed_element operator*(const crossed_element& a, const gaussian_rational& c) {
        crossed_element out;
        out.cp_ = a.cp_;
        if (c.is_zero()) return out;
        for (const auto& [h, r] : a.terms_) out.add_term(h, r * c);
        return out;
    }
    friend crossed_element operator*(const gaussian_rational& c, const crossed_element& a) {
        return a * c;
    }

    crossed_element& operator+=(const crossed_element& o) { return *this = *this + o; }
    crossed_element& operator-=(const crossed_element& o) { return *this = *this - o; }
    crossed_element& operator*=(const crossed_element& o) { return *this = *this * o; }

    friend bool operator==(const crossed_element& a, const crossed_element& b) {
        if (a.terms_.empty() && b.terms_.empty()) return true;
        common(a, b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const crossed_element& a, const crossed_element& b) { return !(a == b); }

    crossed_element pow(long long k) const {
        if (k < 0) {
            if (terms_.size() != 1) throw error("negative power of a non-monomial element");
            const auto& [h, r] = *terms_.begin();
            if (r.support_size() != 1) throw error("negative power of a non-monomial element");
            crossed_element inv = section(*cp_, cp_->act().inverse(h));
            // (r mu(h))^-1 = mu(h)^-1 r^-1 = mu(h^-1) r^-1.
            const auto& [e, c] = *r.terms().begin();
            inv = inv * from_base(*cp_, base_ring_element::of(cp_->base(), cp_->base().inverse(e),
                                                              c.inverse()));
            return inv.pow(-k);
        }
        crossed_element acc = cp_ ? one(*cp_) : crossed_element();
        crossed_element base = *this;
        auto n = static_cast<unsigned long long>(k);
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

private:
    static const CP* common(const crossed_element& a, const crossed_element& b) {
        if (!a.cp_ || a.terms_.empty()) return b.cp_ ? b.cp_ : a.cp_;
        if (!b.cp_ || b.terms_.empty()) return a.cp_;
        if (a.cp_ != b.cp_) throw mismatched_groups("elements of different crossed products");
        return a.cp_;
    }

    void add_term(act_element h, const base_ring_element& r) {
        if (r.is_zero()) return;
        auto it = terms_.find(h);
        if (it == terms_.end()) {
            terms_.emplace(h, r);
        } else {
            it->second += r;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const CP* cp_ = nullptr;
    std::map<act_element, base_ring_element> terms_;
};

template <class CP>
gaussian_rational trace(const crossed_element<CP>& a) {
    return a.trace();
}

// Right multiplication by `a` on the free base module with basis mu(H):
// mu(h) a = sum_k rho(a)_{h,k} mu(k). A ring homomorphism into |H| x |H|
// matrices over the base ring.
template <class Base>
matrix<group_ring_element<Base>> regular_representation(
    const crossed_element<crossed_product<Base>>& a) {
    const crossed_product<Base>* cp = a.product();
    if (!cp) throw unsupported_group("regular representation of a product-less zero");
    const std::uint32_t n = cp->act_order();
    matrix<group_ring_element<Base>> out(n, n);
    for (std::uint32_t h = 0; h < n; ++h) {
        for (const auto& [k, r] : a.terms()) {
            const std::uint32_t col = cp->act().multiply(h, k);
            out(h, col) += cp->apply_action(h, r) * cp->tau(h, k);
        }
    }
    return out;
}

template <class Base>
matrix<group_ring_element<Base>> regular_representation(
    const crossed_product<Base>& cp, const matrix<crossed_element<crossed_product<Base>>>& m) {
    const std::uint32_t n = cp.act_order();
    matrix<group_ring_element<Base>> out(m.rows() * n, m.cols() * n);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            const auto block = regular_representation(m(i, j));
            for (std::uint32_t r = 0; r < n; ++r)
                for (std::uint32_t c = 0; c < n; ++c) out(i * n + r, j * n + c) = block(r, c);
        }
    }
    return out;
}

// A base-ring matrix viewed over the crossed product (the induced
// presentation).
template <class Base>
matrix<crossed_element<crossed_product<Base>>> induce_matrix(
    const crossed_product<Base>& cp, const matrix<group_ring_element<Base>>& m) {
    matrix<crossed_element<crossed_product<Base>>> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero())
                out(i, j) = crossed_element<crossed_product<Base>>::from_base(cp, m(i, j));
    return out;
}

template <class Base>
std::set<unsigned> finite_subgroup_orders(const crossed_product<Base>& cp) {
    return cp.declared_finite_subgroup_orders();
}

// The infinite dihedral group as Z x| Z/2: the reflection inverts the
// translation. Every finite subgroup is trivial or generated by a
// reflection, so the declared order set is {1, 2}.
inline crossed_product<free_abelian_group> dihedral_infinite() {
    free_abelian_group base(1);
    finite_group act = finite_group::cyclic(2);
    act.set_element_name(1, "s");
    std::vector<free_abelian_group::automorphism> action;
    action.push_back(free_abelian_group::automorphism::identity_map(base));
    action.push_back(free_abelian_group::automorphism(base, {{-1}}));
    return crossed_product<free_abelian_group>::split(std::move(base), std::move(act),
                                                      std::move(action), {1u, 2u});
}

// ---------------------------------------------------------------------------
// Split crossed products with an infinite cyclic acting group. Only the
// ring structure is provided; no rank backend exists for these.
// ---------------------------------------------------------------------------

template <class Base>
class cyclic_crossed_product {
public:
    using base_group = Base;
    using base_ring_element = group_ring_element<Base>;
    using act_element = std::int64_t;
    using base_automorphism = typename Base::automorphism;

    cyclic_crossed_product(Base base, base_automorphism generator_action,
                           std::set<unsigned> declared_orders = {1u})
        : base_(std::make_shared<const Base>(std::move(base))),
          fwd_(std::move(generator_action)),
          inv_(fwd_.inverted()),
          orders_(std::move(declared_orders)) {}

    const Base& base() const { return *base_; }
    const std::set<unsigned>& declared_finite_subgroup_orders() const { return orders_; }

    act_element act_multiply(act_element a, act_element b) const { return a + b; }
    act_element act_inverse(act_element a) const { return -a; }
    act_element act_identity() const { return 0; }

    base_ring_element apply_action(act_element h, const base_ring_element& r) const {
        base_ring_element out(*base_);
        for (const auto& [e, c] : r.terms()) {
            auto x = e;
            for (act_element k = 0; k < (h < 0 ? -h : h); ++k) {
                x = h > 0 ? fwd_.apply(x) : inv_.apply(x);
            }
            out += base_ring_element::of(*base_, x, c);
        }
        return out;
    }

private:
    std::shared_ptr<const Base> base_;
    base_automorphism fwd_;
    base_automorphism inv_;
    std::set<unsigned> orders_;
};

// Element of a split Z-crossed product; the cocycle is trivial.
template <class Base>
class cyclic_crossed_element {
public:
    using CP = cyclic_crossed_product<Base>;
    using base_ring_element = typename CP::base_ring_element;

    cyclic_crossed_element() = default;
    explicit cyclic_crossed_element(const CP& cp) : cp_(&cp) {}

    static cyclic_crossed_element from_base(const CP& cp, base_ring_element r) {
        cyclic_crossed_element out(cp);
        if (!r.is_zero()) out.terms_.emplace(0, std::move(r));
        return out;
    }

    static cyclic_crossed_element section(const CP& cp, std::int64_t h) {
        cyclic_crossed_element out(cp);
        out.terms_.emplace(h, base_ring_element::one(cp.base()));
        return out;
    }

    const std::map<std::int64_t, base_ring_element>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend cyclic_crossed_element operator+(const cyclic_crossed_element& a,
                                            const cyclic_crossed_element& b) {
        cyclic_crossed_element out = a;
        if (!out.cp_) out.cp_ = b.cp_;
        for (const auto& [h, r] : b.terms_) out.add_term(h, r);
        return out;
    }

    friend cyclic_crossed_element operator*(const cyclic_crossed_element& a,
                                            const cyclic_crossed_element& b) {
        cyclic_crossed_element out;
        out.cp_ = a.cp_ ? a.cp_ : b.cp_;
        if (!out.cp_) return out;
        for (const auto& [h, r] : a.terms_) {
            for (const auto& [k, s] : b.terms_) {
                out.add_term(h + k, r * out.cp_->apply_action(h, s));
            }
        }
        return out;
    }

    friend bool operator==(const cyclic_crossed_element& a, const cyclic_crossed_element& b) {
        return a.terms_ == b.terms_;
    }

private:
    void add_term(std::int64_t h, const base_ring_element& r) {
        if (r.is_zero()) return;
        auto it = terms_.find(h);
        if (it == terms_.end()) {
            terms_.emplace(h, r);
        } else {
            it->second += r;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const CP* cp_ = nullptr;
    std::map<std::int64_t, base_ring_element> terms_;
};

} // namespace l2lab

#endif
