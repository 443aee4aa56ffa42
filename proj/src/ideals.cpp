#include "cag/ideals.hpp"

#include <algorithm>
#include <set>

namespace cag {
namespace ideals {

void Budget::check_bits(const MultiPoly& f) const {
    if (f.coeff_bits() > max_coeff_bits)
        throw budget_exceeded("coefficient bit budget exceeded");
}

Ideal::Ideal(RingPtr r, std::vector<MultiPoly> g) : ring(std::move(r)) {
    for (auto& f : g) {
        if (f.is_zero()) continue;
        if (!f.ring()->same_as(*ring)) throw error("Ideal: generator in wrong ring");
        gens.push_back(std::move(f));
    }
}

bool GroebnerBasis::contains_one() const {
    return b_.size() == 1 && b_[0].is_constant() && !b_[0].is_zero();
}

// ------------------------------------------------------------ reduction

namespace {

// full normal form of f against a list of monic polynomials
MultiPoly reduce_full(MultiPoly p, const std::vector<MultiPoly>& G) {
    if (G.empty()) return p;
    const RingPtr& R = p.ring();
    std::vector<poly::Term> rem;
    while (!p.is_zero()) {
        bool hit = false;
        const auto& lt = p.lead();
        for (const auto& g : G) {
            if (g.lead().m.divides(lt.m)) {
                p.axpy(-lt.c, lt.m.div(g.lead().m), g);
                hit = true;
                break;
            }
        }
        if (!hit) {
            rem.push_back(lt);
            MultiPoly mono = MultiPoly::monomial(R, lt.m, lt.c);
            p = p - mono;
        }
    }
    return MultiPoly(R, std::move(rem));
}

struct Pair {
    size_t i, j;
    Monomial lcm;
    int sugar;
    int lcm_deg;
};

}  // namespace

GroebnerBasis buchberger(const Ideal& I, const Budget& budget) {
    const RingPtr& R = I.ring;
    if (!R) throw error("buchberger: empty ideal ring");
    const MonomialOrder& ord = R->order();

    std::vector<MultiPoly> G;
    std::vector<int> sugar_of;
    std::vector<Pair> pairs;
    // processed + skipped lcms, for the chain criterion
    std::set<std::pair<size_t, size_t>> done;

    auto add_pairs = [&](size_t k) {
        for (size_t i = 0; i < k; ++i) {
            const Monomial& mi = G[i].lead().m;
            const Monomial& mk = G[k].lead().m;
            if (mi.coprime(mk)) {
                done.insert({i, k});  // product criterion
                continue;
            }
            Monomial l = mi.lcm(mk);
            int s = std::max(sugar_of[i] + (l.total_degree() - mi.total_degree()),
                             sugar_of[k] + (l.total_degree() - mk.total_degree()));
            pairs.push_back({i, k, l, s, l.total_degree()});
        }
    };

    for (const auto& f : I.gens) {
        G.push_back(f.monic());
        sugar_of.push_back(f.total_degree());
        add_pairs(G.size() - 1);
    }
    if (G.empty()) return GroebnerBasis(R, {});

    size_t processed = 0;
    while (!pairs.empty()) {
        // degree-sugar selection: smallest sugar, then smallest lcm in the order
        size_t best = 0;
        for (size_t t = 1; t < pairs.size(); ++t) {
            const Pair &a = pairs[t], &b = pairs[best];
            if (a.sugar != b.sugar ? a.sugar < b.sugar
                                   : ord.cmp(a.lcm, b.lcm) < 0)
                best = t;
        }
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + best);
        done.insert({pr.i, pr.j});

        if (++processed > budget.max_pairs)
            throw budget_exceeded("S-pair budget exceeded in buchberger");

        // chain criterion: some k with lead(k) | lcm(i,j) and both (i,k),(j,k) done
        bool skip = false;
        for (size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!G[k].lead().m.divides(pr.lcm)) continue;
            auto key = [&](size_t a, size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) skip = true;
        }
        if (skip) continue;

        const MultiPoly &fi = G[pr.i], &fj = G[pr.j];
        Monomial mi = pr.lcm.div(fi.lead().m);
        Monomial mj = pr.lcm.div(fj.lead().m);
        MultiPoly s = MultiPoly::monomial(R, mi, fi.lead().c.inv()) * fi -
                      MultiPoly::monomial(R, mj, fj.lead().c.inv()) * fj;
        MultiPoly r = reduce_full(std::move(s), G);
        if (r.is_zero()) continue;
        budget.check_bits(r);
        G.push_back(r.monic());
        sugar_of.push_back(pr.sugar);
        if (G.size() > budget.max_basis)
            throw budget_exceeded("basis size budget exceeded in buchberger");
        add_pairs(G.size() - 1);
    }

    // minimalize: drop polynomials whose lead is divisible by another lead
    std::vector<MultiPoly> mini;
    for (size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            if (G[j].lead().m.divides(G[i].lead().m)) {
                if (!(G[i].lead().m == G[j].lead().m) || j < i) redundant = true;
            }
        }
        if (!redundant) mini.push_back(G[i]);
    }
    // interreduce fully
    std::vector<MultiPoly> red;
    for (size_t i = 0; i < mini.size(); ++i) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < mini.size(); ++j)
            if (j != i) others.push_back(mini[j]);
        MultiPoly r = reduce_full(mini[i], others);
        if (!r.is_zero()) red.push_back(r.monic());
    }
    std::sort(red.begin(), red.end(), [&ord](const MultiPoly& a, const MultiPoly& b) {
        return ord.cmp(a.lead().m, b.lead().m) > 0;
    });
    return GroebnerBasis(R, std::move(red));
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& G) {
    if (!G.ring() || G.basis().empty()) return f;
    if (!f.ring()->same_as(*G.ring())) throw error("normal_form: ring mismatch");
    return reduce_full(f, G.basis());
}

bool member(const MultiPoly& f, const GroebnerBasis& G) {
    return normal_form(f, G).is_zero();
}

bool member(const MultiPoly& f, const Ideal& I, const Budget& budget) {
    return member(f, buchberger(I, budget));
}

bool ideal_equal(const Ideal& A, const Ideal& B, const Budget& budget) {
    GroebnerBasis GA = buchberger(A, budget), GB = buchberger(B, budget);
    for (const auto& f : A.gens)
        if (!member(f, GB)) return false;
    for (const auto& g : B.gens)
        if (!member(g, GA)) return false;
    return true;
}

// ------------------------------------------------------------ elimination

Ideal elimination_ideal(const Ideal& I, const std::vector<std::string>& drop,
                        const Budget& budget) {
    const RingPtr& R = I.ring;
    std::vector<std::string> dropped, kept;
    for (const auto& v : drop) {
        if (R->var_index(v) < 0) throw error("elimination_ideal: unknown variable " + v);
        dropped.push_back(v);
    }
    for (const auto& v : R->vars())
        if (std::find(dropped.begin(), dropped.end(), v) == dropped.end())
            kept.push_back(v);
    if (kept.empty()) throw error("elimination_ideal: no variables left");

    std::vector<std::string> reordered = dropped;
    reordered.insert(reordered.end(), kept.begin(), kept.end());
    RingPtr elim_ring = poly::PolyRing::make(R->field(), reordered,
                                             MonomialOrder::Block(dropped.size()));
    std::vector<MultiPoly> gens;
    for (const auto& f : I.gens) gens.push_back(f.to_ring(elim_ring));
    GroebnerBasis G = buchberger(Ideal(elim_ring, std::move(gens)), budget);

    RingPtr sub = poly::PolyRing::make(R->field(), kept);
    std::vector<MultiPoly> out;
    for (const auto& g : G.basis()) {
        bool pure = true;
        for (size_t i = 0; i < dropped.size() && pure; ++i)
            if (g.depends_on(i)) pure = false;
        if (pure) out.push_back(g.to_ring(sub));
    }
    return Ideal(sub, std::move(out));
}

// ----------------------------------------------------------- zero-dim solve

namespace {

// gcd of everything univariate in `var` inside the basis
UniPoly eliminant(const GroebnerBasis& G, size_t var) {
    UniPoly g(G.ring()->field());
    for (const auto& f : G.basis()) {
        bool uni = true;
        for (size_t i = 0; i < G.ring()->nvars() && uni; ++i)
            if (i != var && f.depends_on(i)) uni = false;
        if (!uni) continue;
        UniPoly u = UniPoly::from_multipoly(f, var);
        g = g.is_zero() ? u : poly::gcd_uni(g, u);
    }
    return g;
}

using Assignment = std::vector<std::pair<std::string, NFElem>>;

void solve_rec(const Ideal& I, const Budget& budget, Assignment fixed,
               std::vector<Assignment>& solutions, SolutionSet& out) {
    const RingPtr& R = I.ring;
    GroebnerBasis G = buchberger(I, budget);
    if (G.contains_one()) return;  // inconsistent branch
    if (G.basis().empty())
        throw error("solve_zero_dim: trivial ideal is not zero-dimensional");

    if (R->nvars() == 1) {
        UniPoly g = eliminant(G, 0);
        if (g.is_zero())
            throw error("solve_zero_dim: no univariate eliminant for " + R->vars()[0]);
        if (g.deg() < 1) return;
        auto fr = poly::field_roots(g);
        for (const auto& [root, mult] : fr.roots) {
            Assignment full = fixed;
            full.push_back({R->vars()[0], root});
            solutions.push_back(std::move(full));
        }
        for (const auto& rf : fr.residual) out.residual.push_back({R->vars()[0], rf});
        return;
    }

    // last variable: the lex basis contains its eliminant
    size_t last = R->nvars() - 1;
    UniPoly g = eliminant(G, last);
    if (g.is_zero())
        throw error("solve_zero_dim: system is not zero-dimensional (no eliminant in " +
                    R->vars()[last] + ")");
    auto fr = poly::field_roots(g);
    for (const auto& rf : fr.residual) out.residual.push_back({R->vars()[last], rf});

    std::vector<std::string> rest(R->vars().begin(), R->vars().end() - 1);
    RingPtr sub = poly::PolyRing::make(R->field(), rest, MonomialOrder::Lex());
    for (const auto& [root, mult] : fr.roots) {
        std::map<std::string, MultiPoly> sub_assign;
        sub_assign.emplace(R->vars()[last], MultiPoly::constant(sub, root));
        std::vector<MultiPoly> gens;
        for (const auto& f : G.basis()) {
            MultiPoly s = poly::substitute(f, sub_assign);
            if (!s.is_zero()) gens.push_back(s);
        }
        Assignment fixed2 = fixed;
        fixed2.push_back({R->vars()[last], root});
        if (gens.empty())
            throw error("solve_zero_dim: branch became trivial (positive-dimensional)");
        solve_rec(Ideal(sub, std::move(gens)), budget, std::move(fixed2), solutions, out);
    }
}

}  // namespace

SolutionSet solve_zero_dim(const Ideal& I, const Budget& budget) {
    const RingPtr& R = I.ring;
    if (I.gens.empty()) throw error("solve_zero_dim: empty system");
    RingPtr lexring = poly::PolyRing::make(R->field(), R->vars(), MonomialOrder::Lex());
    std::vector<MultiPoly> gens;
    for (const auto& f : I.gens) gens.push_back(f.to_ring(lexring));
    Ideal J(lexring, std::move(gens));

    SolutionSet out;
    std::vector<Assignment> solutions;
    solve_rec(J, budget, {}, solutions, out);

    for (const auto& named : solutions) {
        std::vector<NFElem> pt(R->nvars(), NFElem::zero(R->field()));
        for (const auto& [name, val] : named) {
            int i = R->var_index(name);
            if (i < 0) throw error("solve_zero_dim: internal name mismatch");
            pt[i] = val;
        }
        bool ok = true;
        for (const auto& f : I.gens)
            if (!f.evaluate(pt).is_zero()) { ok = false; break; }
        if (!ok) throw error("solve_zero_dim: extracted point fails a generator");
        out.points.push_back(std::move(pt));
    }
    return out;
}

}  // namespace ideals
}  // namespace cag
