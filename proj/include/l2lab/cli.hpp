#ifndef L2LAB_CLI_HPP
#define L2LAB_CLI_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "atiyah.hpp"
#include "chain_complex.hpp"
#include "format.hpp"
#include "localization.hpp"
#include "parse.hpp"

namespace l2lab {
namespace cli {

// One batch job per invocation. Exit status: 0 on success, 1 on computation
// errors, 2 on parse errors.
struct job_options {
    std::string command;
    std::string input_text;
    std::uint64_t seed = 0;
    unsigned radius = 4;
    bool machine = false;
    std::vector<unsigned> ladder{2, 4, 6, 8};
    bool reduce = false;
};

namespace detail {

struct printer {
    std::ostream& out;
    bool machine;

    void kv(const std::string& key, const std::string& value) const {
        out << key << (machine ? "=" : " = ") << value << "\n";
    }
    void kv(const std::string& key, const rational& value) const { kv(key, format_rational(value)); }
    void kv(const std::string& key, bool value) const { kv(key, std::string(value ? "true" : "false")); }
    void note(const std::string& text) const {
        if (!machine) out << "# " << text << "\n";
    }
};

template <class F>
auto with_group(const group_decl& g, F&& f) {
    switch (g.which) {
        case group_decl::kind::finite: return f(*g.finite);
        case group_decl::kind::abelian: return f(*g.abelian);
        case group_decl::kind::free: return f(*g.free);
        case group_decl::kind::dihedral: return f(*g.dihedral);
    }
    throw error("unreachable group kind");
}

inline void expect_end(lexer& lx) {
    if (!lx.at_end()) throw parse_error(lx.peek().pos, "unexpected trailing input");
}

template <class Ctx>
std::vector<presented_module<Ctx>> parse_modules(lexer& lx, const Ctx& ctx) {
    std::vector<presented_module<Ctx>> out;
    while (lx.accept_ident("module")) out.push_back(parse_module_body(lx, ctx));
    if (out.empty()) throw parse_error(lx.peek().pos, "expected at least one 'module'");
    return out;
}

inline std::string indexed(const std::string& key, std::size_t i, std::size_t total) {
    return total > 1 ? key + std::to_string(i) : key;
}

template <class Ctx>
void run_dim(const Ctx& ctx, lexer& lx, const printer& p, const oracle_config& cfg) {
    const auto mods = parse_modules(lx, ctx);
    expect_end(lx);
    for (std::size_t i = 0; i < mods.size(); ++i) {
        const dimension_value d = dim_fp(mods[i], cfg);
        p.kv(indexed("dim", i, mods.size()), d.value);
        p.kv(indexed("engine", i, mods.size()), engine_name(d.engine));
        p.kv(indexed("certified", i, mods.size()), d.exact);
    }
}

template <class Ctx>
void run_atiyah(const Ctx& ctx, lexer& lx, const printer& p, const oracle_config& cfg) {
    const auto mods = parse_modules(lx, ctx);
    expect_end(lx);
    for (std::size_t i = 0; i < mods.size(); ++i) {
        const integrality_verdict v = atiyah_check(mods[i], cfg);
        p.kv(indexed("dim", i, mods.size()), v.dim.value);
        p.kv(indexed("l", i, mods.size()), rational(v.lcm_orders));
        p.kv(indexed("verdict", i, mods.size()), std::string(v.pass ? "pass" : "fail"));
        p.kv(indexed("certified", i, mods.size()), v.certified);
    }
}

template <class Ctx>
void run_betti(const Ctx& ctx, lexer& lx, const printer& p, const oracle_config& cfg,
               bool euler_only) {
    const free_chain_complex<Ctx> c = parse_complex_body(lx, ctx);
    expect_end(lx);
    const betti_report rep = l2_betti(c, cfg);
    if (!euler_only) {
        for (std::size_t i = 0; i < rep.betti.size(); ++i)
            p.kv("b" + std::to_string(i), rep.betti[i].value);
    }
    p.kv("euler", rep.euler);
    if (!euler_only && !rep.betti.empty()) p.kv("engine", engine_name(rep.betti[0].engine));
    p.kv("certified", rep.exact);
}

template <class Ctx>
void run_tor(const Ctx& ctx, lexer& lx, const printer& p, const oracle_config& cfg) {
    if (!lx.accept_ident("module")) throw parse_error(lx.peek().pos, "expected 'module'");
    const presented_module<Ctx> m = parse_module_body(lx, ctx);
    if (!lx.accept_ident("resolution")) throw parse_error(lx.peek().pos, "expected 'resolution'");
    const free_chain_complex<Ctx> r = parse_complex_body(lx, ctx);
    expect_end(lx);
    const tor_report<Ctx> rep = tor_dims(m, r, cfg);
    for (std::size_t i = 0; i < rep.tor.size(); ++i)
        p.kv("tor" + std::to_string(i), rep.tor[i].value);
    p.kv("certified", rep.exact);
    p.note(rep.caveat);
}

inline void run_ore_check(const free_abelian_group& g, lexer& lx, const printer& p) {
    const source_pos pos = lx.peek().pos;
    if (!lx.accept_ident("oreset")) throw parse_error(pos, "expected 'oreset'");
    const std::string which = lx.expect_ident();
    ore_set<laurent_poly> t;
    if (which == "nonzero") {
        t = nonzero_laurent_set();
    } else if (which == "monomials") {
        t = monomial_laurent_set();
    } else {
        throw parse_error(pos, "unknown Ore set '" + which + "' (nonzero or monomials)");
    }

    const element_grammar<free_abelian_group> grammar(g);
    std::map<std::string, ore_fraction<laurent_poly>> fracs;
    const auto lookup = [&](const std::string& name, source_pos at) -> const ore_fraction<laurent_poly>& {
        auto it = fracs.find(name);
        if (it == fracs.end()) throw parse_error(at, "unknown fraction '" + name + "'");
        return it->second;
    };
    const auto fmt = [&](const ore_fraction<laurent_poly>& f) {
        return "(" + format_laurent(f.num) + ")/(" + format_laurent(f.den) + ")";
    };

    while (!lx.at_end()) {
        const source_pos at = lx.peek().pos;
        const std::string verb = lx.expect_ident();
        if (verb == "frac") {
            const std::string name = lx.expect_ident();
            lx.expect_punct('=');
            laurent_poly num = to_laurent(grammar.parse(lx));
            laurent_poly den = laurent_poly::constant(g.rank(), gaussian_rational(1));
            if (lx.accept_punct('/')) den = to_laurent(grammar.parse(lx));
            fracs.insert_or_assign(name, make_ore_fraction(t, std::move(num), std::move(den)));
        } else if (verb == "eq" || verb == "add" || verb == "mul" || verb == "sub") {
            const std::string lhs = lx.expect_ident();
            const std::string rhs = lx.expect_ident();
            const auto& f = lookup(lhs, at);
            const auto& h = lookup(rhs, at);
            const std::string key = verb + "(" + lhs + "," + rhs + ")";
            if (verb == "eq") {
                p.kv(key, ore_eq(t, f, h));
            } else if (verb == "add") {
                p.kv(key, fmt(ore_add(t, f, h)));
            } else if (verb == "sub") {
                p.kv(key, fmt(ore_sub(t, f, h)));
            } else {
                p.kv(key, fmt(ore_mul(t, f, h)));
            }
        } else {
            throw parse_error(at, "unknown statement '" + verb + "'");
        }
    }
}

inline void run_cramer(const free_abelian_group& g, lexer& lx, const printer& p, bool reduce) {
    if (!lx.accept_ident("matrix")) throw parse_error(lx.peek().pos, "expected 'matrix'");
    const matrix<rational_function> a = parse_rational_function_matrix(lx, g);
    expect_end(lx);
    const cramer_witness w = cramer_factorize(a);
    const auto fmt_rf = [&](const rational_function& f) {
        return format_rational_function(reduce ? f.reduce_content() : f);
    };
    p.kv("s", format_matrix(w.s));
    p.kv("x", format_matrix(w.x, fmt_rf));
    p.kv("b", format_matrix(w.b));
    p.kv("verified", w.verify(a));
}

inline void run_linearize(const free_abelian_group& g, lexer& lx, const printer& p, bool reduce) {
    if (!lx.accept_ident("function")) throw parse_error(lx.peek().pos, "expected 'function'");
    const rational_function f = parse_rational_function(lx, g);
    expect_end(lx);
    const linearization lin = rational_closure_linearize(f);
    const auto fmt_rf = [&](const rational_function& x) {
        return format_rational_function(reduce ? x.reduce_content() : x);
    };
    p.kv("m", format_matrix(lin.mat));
    p.kv("inverse", format_matrix(lin.inverse, fmt_rf));
    p.kv("sigma_member", sigma_member(lin.mat));
    p.kv("verified", true);
}

inline void run_certify(lexer* lx, unsigned radius, const printer& p) {
    ore_certificate cert;
    if (lx && !lx->at_end()) {
        const group_decl decl = parse_group_decl(*lx);
        if (decl.which != group_decl::kind::free)
            throw error("the Ore-failure certificate needs a free group");
        const free_group& g = *decl.free;
        if (!lx->accept_ident("map")) throw parse_error(lx->peek().pos, "expected 'map'");
        const matrix<group_ring_element<free_group>> m = parse_element_matrix(*lx, g);
        if (m.rows() != 1 || m.cols() != 2)
            throw parse_error(lx->peek().pos, "map must be a 1 x 2 matrix of multipliers");
        expect_end(*lx);
        cert = ore_failure_certificate(g, m(0, 0), m(0, 1), radius);
        p.kv("radius", rational(cert.radius));
        p.kv("kernel_dim", rational(cert.kernel_dimension));
        p.kv("certified", cert.certified);
        if (cert.witness) {
            p.kv("witness_u", format_element(cert.witness->first));
            p.kv("witness_v", format_element(cert.witness->second));
        }
        return;
    }
    const free_group g(2);
    cert = ore_failure_certificate(g, radius);
    p.kv("radius", rational(cert.radius));
    p.kv("kernel_dim", rational(cert.kernel_dimension));
    p.kv("certified", cert.certified);
}

} // namespace detail

inline int run_job(const job_options& job, std::ostream& out, std::ostream& err) {
    const detail::printer p{out, job.machine};
    oracle_config cfg;
    cfg.seed = job.seed;
    if (!job.ladder.empty()) cfg.ladder = job.ladder;
    try {
        if (job.command == "certify-ore-failure") {
            if (job.input_text.empty()) {
                detail::run_certify(nullptr, job.radius, p);
            } else {
                lexer lx(job.input_text);
                detail::run_certify(&lx, job.radius, p);
            }
            return 0;
        }

        lexer lx(job.input_text);
        const group_decl decl = parse_group_decl(lx);

        if (job.command == "dim") {
            detail::with_group(decl, [&](const auto& ctx) { detail::run_dim(ctx, lx, p, cfg); });
        } else if (job.command == "atiyah") {
            detail::with_group(decl, [&](const auto& ctx) { detail::run_atiyah(ctx, lx, p, cfg); });
        } else if (job.command == "betti") {
            detail::with_group(decl,
                               [&](const auto& ctx) { detail::run_betti(ctx, lx, p, cfg, false); });
        } else if (job.command == "euler") {
            detail::with_group(decl,
                               [&](const auto& ctx) { detail::run_betti(ctx, lx, p, cfg, true); });
        } else if (job.command == "ore-check") {
            if (decl.which != group_decl::kind::abelian)
                throw error("ore-check works over abelian group rings");
            detail::run_ore_check(*decl.abelian, lx, p);
        } else if (job.command == "cramer") {
            if (decl.which != group_decl::kind::abelian)
                throw error("cramer works over abelian group rings");
            detail::run_cramer(*decl.abelian, lx, p, job.reduce);
        } else if (job.command == "linearize") {
            if (decl.which != group_decl::kind::abelian)
                throw error("linearize works over abelian group rings");
            detail::run_linearize(*decl.abelian, lx, p, job.reduce);
        } else if (job.command == "tor") {
            detail::with_group(decl, [&](const auto& ctx) { detail::run_tor(ctx, lx, p, cfg); });
        } else {
            err << "error: unknown command '" << job.command << "'\n";
            return 1;
        }
        return 0;
    } catch (const parse_error& e) {
        err << "parse error at " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace cli
} // namespace l2lab

#endif
