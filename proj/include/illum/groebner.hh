#ifndef ILLUM_GROEBNER_HH
#define ILLUM_GROEBNER_HH

// Buchberger's algorithm with normal pair selection, the coprime and chain
// criteria (toggleable), content-stripped reductions, and a reduced-basis
// post-pass. Deterministic by construction: pair selection orders by the
// pair's lcm under the active monomial order with index tiebreaks, and all
// resource guards are structural (sizes and step counts, never wall clock).

#include "illum/monomial.hh"
#include "illum/polynomial.hh"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace illum {

struct BuchbergerOptions {
    bool use_coprime_criterion = true;
    bool use_chain_criterion = true;
    size_t max_basis = 5000;
    size_t max_pairs = 20000;
    size_t max_reductions = 5000000;
};

class ResourceExhausted : public std::runtime_error {
public:
    explicit ResourceExhausted(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Index of the leading term of p under ord (storage is grevlex-sorted, so a
// scan is needed for other orders).
inline size_t leading_index(const MultiPoly& p, const MonomialOrder& ord) {
    const auto& ts = p.terms();
    size_t best = 0;
    for (size_t i = 1; i < ts.size(); ++i)
        if (ord.greater(ts[i].mono, ts[best].mono)) best = i;
    return best;
}

inline const Term& leading_term(const MultiPoly& p, const MonomialOrder& ord) {
    return p.terms()[leading_index(p, ord)];
}

} // namespace detail

// Fully reduce p modulo the basis under ord. Every reduction step draws on
// `budget`; exhaustion throws ResourceExhausted.
inline MultiPoly normal_form(MultiPoly p, const std::vector<MultiPoly>& basis,
                             const MonomialOrder& ord, size_t& budget) {
    const ContextPtr& ctx = p.context();
    MultiPoly done(ctx);
    while (!p.is_zero()) {
        const Term lt = detail::leading_term(p, ord);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const Term& lg = detail::leading_term(g, ord);
            if (!lg.mono.divides(lt.mono)) continue;
            if (budget == 0) throw ResourceExhausted("normal_form: reduction budget exhausted");
            --budget;
            p -= g.term_scaled(lt.coeff / lg.coeff, lt.mono.div(lg.mono));
            reduced = true;
            break;
        }
        if (!reduced) {
            // Leading term irreducible: retire it and continue on the tail.
            MultiPoly head = MultiPoly::from_terms(ctx, {lt});
            done += head;
            p -= head;
        }
    }
    return done;
}

inline MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& ord) {
    const Term& lf = detail::leading_term(f, ord);
    const Term& lg = detail::leading_term(g, ord);
    Monomial l = lf.mono.lcm(lg.mono);
    return f.term_scaled(lf.coeff.inv(), l.div(lf.mono)) -
           g.term_scaled(lg.coeff.inv(), l.div(lg.mono));
}

// Reduced Groebner basis of the input ideal under ord. Elements come back
// content-free with positive leading coefficient, sorted by leading monomial.
inline std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens, const MonomialOrder& ord,
                                         const BuchbergerOptions& opt = {}) {
    std::vector<MultiPoly> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.primitive_sign_preserving());
    if (basis.empty()) return basis;
    size_t budget = opt.max_reductions;

    struct Pair {
        Monomial lcm;
        size_t i, j;
    };
    auto pair_less = [&ord](const Pair& a, const Pair& b) {
        int c = ord.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<Pair, decltype(pair_less)> queue(pair_less);
    std::set<std::pair<size_t, size_t>> processed;

    auto add_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            if (basis[i].is_zero()) continue;
            Monomial l = detail::leading_term(basis[i], ord)
                             .mono.lcm(detail::leading_term(basis[j], ord).mono);
            queue.insert({l, i, j});
            if (queue.size() > opt.max_pairs)
                throw ResourceExhausted("buchberger: pair queue guard exceeded");
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        processed.insert({pr.i, pr.j});
        const MultiPoly& f = basis[pr.i];
        const MultiPoly& g = basis[pr.j];
        const Monomial& mf = detail::leading_term(f, ord).mono;
        const Monomial& mg = detail::leading_term(g, ord).mono;
        if (opt.use_coprime_criterion && mf.coprime_with(mg)) continue;
        if (opt.use_chain_criterion) {
            bool skip = false;
            for (size_t k = 0; k < basis.size() && !skip; ++k) {
                if (k == pr.i || k == pr.j || basis[k].is_zero()) continue;
                if (!detail::leading_term(basis[k], ord).mono.divides(pr.lcm)) continue;
                auto key_ik = std::minmax(pr.i, k);
                auto key_jk = std::minmax(pr.j, k);
                if (processed.count({key_ik.first, key_ik.second}) &&
                    processed.count({key_jk.first, key_jk.second}))
                    skip = true;
            }
            if (skip) continue;
        }
        MultiPoly s = normal_form(s_polynomial(f, g, ord), basis, ord, budget);
        if (s.is_zero()) continue;
        basis.push_back(s.primitive_sign_preserving());
        if (basis.size() > opt.max_basis)
            throw ResourceExhausted("buchberger: basis size guard exceeded");
        add_pairs_for(basis.size() - 1);
    }

    // Minimize: drop members whose leading monomial is divisible by another's.
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        const Monomial& mi = detail::leading_term(basis[i], ord).mono;
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mj = detail::leading_term(basis[j], ord).mono;
            if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // Inter-reduce tails and normalize.
    std::vector<MultiPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = normal_form(minimal[i], others, ord, budget);
        if (r.is_zero()) continue;
        r = r.primitive_sign_preserving();
        if (detail::leading_term(r, ord).coeff.sign() < 0) r = -r;
        reduced.push_back(r);
    }
    std::sort(reduced.begin(), reduced.end(), [&ord](const MultiPoly& a, const MultiPoly& b) {
        return ord.less(detail::leading_term(a, ord).mono, detail::leading_term(b, ord).mono);
    });
    return reduced;
}

// Restrict a Groebner basis (under a block order eliminating the first
// `head` variables of its context) to the members free of those variables,
// mapped into `target` (the retained variables, in order).
inline std::vector<MultiPoly> elimination_ideal(const std::vector<MultiPoly>& basis, int head,
                                                const ContextPtr& target) {
    std::vector<MultiPoly> out;
    for (const auto& g : basis) {
        bool free_of_head = true;
        for (const auto& t : g.terms())
            if (t.mono.degree_range(0, head) > 0) {
                free_of_head = false;
                break;
            }
        if (!free_of_head) continue;
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            Monomial m;
            for (int i = head; i < g.context()->arity(); ++i)
                m.set_exp(i - head, t.mono.exp(i));
            terms.push_back({m, t.coeff});
        }
        out.push_back(MultiPoly::from_terms(target, std::move(terms)));
    }
    return out;
}

// Eliminate the named variables from the ideal generated by `gens`:
// reorders the ring so the dropped variables lead, runs Buchberger under the
// block elimination order, and keeps the generators free of them. Returned
// polynomials live in the context of the remaining variables (original
// relative order), canonicalized and sorted.
inline std::vector<MultiPoly> eliminate(const std::vector<MultiPoly>& gens,
                                        const std::vector<std::string>& drop,
                                        const BuchbergerOptions& opt = {}) {
    if (gens.empty()) return {};
    const ContextPtr& ctx = gens[0].context();
    std::vector<std::string> head_vars, tail_vars;
    for (const auto& name : drop) {
        if (!ctx->index(name)) throw std::logic_error("eliminate: unknown variable " + name);
        head_vars.push_back(name);
    }
    for (const auto& name : ctx->names())
        if (std::find(drop.begin(), drop.end(), name) == drop.end()) tail_vars.push_back(name);
    if (head_vars.empty() || tail_vars.empty())
        throw std::logic_error("eliminate: nothing to eliminate or nothing retained");

    std::vector<std::string> reordered = head_vars;
    reordered.insert(reordered.end(), tail_vars.begin(), tail_vars.end());
    ContextPtr work = Context::of(reordered);
    ContextPtr target = Context::of(tail_vars);

    std::vector<MultiPoly> args;
    for (const auto& name : ctx->names())
        args.push_back(MultiPoly::variable(work, name));
    std::vector<MultiPoly> moved;
    for (const auto& g : gens) moved.push_back(g.compose(args, work));

    MonomialOrder ord =
        MonomialOrder::block_elim(work->arity(), static_cast<int>(head_vars.size()));
    std::vector<MultiPoly> basis = buchberger(std::move(moved), ord, opt);
    std::vector<MultiPoly> out =
        elimination_ideal(basis, static_cast<int>(head_vars.size()), target);
    for (auto& p : out) p = p.canonical();
    std::sort(out.begin(), out.end(), [](const MultiPoly& a, const MultiPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.str() < b.str();
    });
    return out;
}

} // namespace illum

#endif // ILLUM_GROEBNER_HH
