#include "cag/curves.hpp"

#include <algorithm>
#include <sstream>

namespace cag {
namespace curves {

using poly::Monomial;
using poly::MonomialOrder;
using poly::PolyRing;
using poly::Term;

// -------------------------------------------------------------- ProjPoint

ProjPoint::ProjPoint(NFElem x, NFElem y, NFElem z) : c_{std::move(x), std::move(y), std::move(z)} {
    int last = -1;
    for (int i = 2; i >= 0; --i)
        if (!c_[i].is_zero()) { last = i; break; }
    if (last < 0) throw error("ProjPoint: all coordinates zero");
    NFElem inv = c_[last].inv();
    for (auto& v : c_) v = v * inv;
}

bool ProjPoint::operator==(const ProjPoint& o) const {
    return c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2];
}

std::string ProjPoint::str() const {
    return "[" + c_[0].str() + " : " + c_[1].str() + " : " + c_[2].str() + "]";
}

// -------------------------------------------------------------- PlaneCurve

PlaneCurve::PlaneCurve(MultiPoly form) : f_(std::move(form)) {
    if (f_.is_zero()) throw error("PlaneCurve: zero form");
    if (f_.ring()->nvars() != 3) throw error("PlaneCurve: ambient ring must have 3 variables");
    auto d = f_.homogeneous_degree();
    if (!d) throw error("PlaneCurve: form is not homogeneous");
    if (*d < 1) throw error("PlaneCurve: form is constant");
    deg_ = *d;
}

bool PlaneCurve::contains(const ProjPoint& p) const {
    return f_.evaluate({p[0], p[1], p[2]}).is_zero();
}

bool PlaneCurve::is_reduced() const {
    // repeated factors other than the chart line survive dehomogenization
    auto [q, zmult] = poly::divide_out(f_, MultiPoly::variable(ring(), 2));
    if (zmult >= 2) return false;
    std::map<std::string, MultiPoly> at1;
    at1.emplace(ring()->vars()[2], MultiPoly::constant(ring(), Rat(1)));
    MultiPoly f = poly::substitute(f_, at1);
    if (f.is_constant()) return true;  // form was a power of z; zmult <= 1 here
    MultiPoly g = poly::gcd_multi(poly::gcd_multi(f, f.derivative(0)), f.derivative(1));
    return g.is_constant();
}

PlaneCurve line_through(const ProjPoint& a, const ProjPoint& b) {
    if (a == b) throw error("line_through: points coincide");
    const FieldPtr& K = a.field();
    RingPtr R = PolyRing::make(K, {"x", "y", "z"});
    // cross product gives the line coefficients
    NFElem cx = a[1] * b[2] - a[2] * b[1];
    NFElem cy = a[2] * b[0] - a[0] * b[2];
    NFElem cz = a[0] * b[1] - a[1] * b[0];
    MultiPoly L = MultiPoly::constant(R, cx) * MultiPoly::variable(R, 0) +
                  MultiPoly::constant(R, cy) * MultiPoly::variable(R, 1) +
                  MultiPoly::constant(R, cz) * MultiPoly::variable(R, 2);
    return PlaneCurve(L);
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    NFElem det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                 a[2] * (b[0] * c[1] - b[1] * c[0]);
    return det.is_zero();
}

// -------------------------------------------------------------- localize

LocalForm localize(const MultiPoly& form, const ProjPoint& p) {
    const RingPtr& R = form.ring();
    const FieldPtr& K = R->field();
    RingPtr L = PolyRing::make(K, {"u", "v"});
    MultiPoly u = MultiPoly::variable(L, 0), v = MultiPoly::variable(L, 1);
    int chart = -1;
    for (int i = 2; i >= 0; --i)
        if (p[i].is_one()) { chart = i; break; }
    if (chart < 0) throw error("localize: point not normalized");

    std::map<std::string, MultiPoly> sub;
    auto cst = [&](const NFElem& c) { return MultiPoly::constant(L, c); };
    if (chart == 2) {
        sub.emplace(R->vars()[0], u + cst(p[0]));
        sub.emplace(R->vars()[1], v + cst(p[1]));
        sub.emplace(R->vars()[2], cst(NFElem::one(K)));
    } else if (chart == 1) {
        sub.emplace(R->vars()[0], u + cst(p[0]));
        sub.emplace(R->vars()[1], cst(NFElem::one(K)));
        sub.emplace(R->vars()[2], v);
    } else {
        sub.emplace(R->vars()[0], cst(NFElem::one(K)));
        sub.emplace(R->vars()[1], u);
        sub.emplace(R->vars()[2], v);
    }
    return {poly::substitute(form, sub), chart, p};
}

namespace {

// express a form of the local (u, v) ring back in the ambient coordinates,
// consistent with the substitution in localize
MultiPoly unlocalize_jet(const MultiPoly& jet, const LocalForm& lf, const RingPtr& R) {
    MultiPoly x = MultiPoly::variable(R, 0), y = MultiPoly::variable(R, 1),
              z = MultiPoly::variable(R, 2);
    auto cst = [&](const NFElem& c) { return MultiPoly::constant(R, c); };
    std::map<std::string, MultiPoly> sub;
    if (lf.chart == 2) {
        sub.emplace("u", x - cst(lf.center[0]) * z);
        sub.emplace("v", y - cst(lf.center[1]) * z);
    } else if (lf.chart == 1) {
        sub.emplace("u", x - cst(lf.center[0]) * y);
        sub.emplace("v", z);
    } else {
        sub.emplace("u", y);
        sub.emplace("v", z);
    }
    return poly::substitute(jet, sub);
}

int local_multiplicity(const MultiPoly& f) {
    int m = -1;
    for (const auto& t : f.terms()) {
        int d = t.m.total_degree();
        if (m < 0 || d < m) m = d;
    }
    return m;
}

MultiPoly lowest_jet(const MultiPoly& f) {
    int m = local_multiplicity(f);
    std::vector<Term> ts;
    for (const auto& t : f.terms())
        if (t.m.total_degree() == m) ts.push_back(t);
    return MultiPoly(f.ring(), std::move(ts));
}

NFElem eval00(const MultiPoly& f) {
    const FieldPtr& K = f.ring()->field();
    return f.evaluate({NFElem::zero(K), NFElem::zero(K)});
}

}  // namespace

// ---------------------------------------------------- multiplicity and cone

int multiplicity_at(const PlaneCurve& C, const ProjPoint& p) {
    LocalForm lf = localize(C.form(), p);
    if (!eval00(lf.f).is_zero()) throw error("multiplicity_at: point not on curve");
    return local_multiplicity(lf.f);
}

MultiPoly tangent_cone(const PlaneCurve& C, const ProjPoint& p) {
    LocalForm lf = localize(C.form(), p);
    if (!eval00(lf.f).is_zero()) throw error("tangent_cone: point not on curve");
    return unlocalize_jet(lowest_jet(lf.f), lf, C.ring());
}

// ------------------------------------------------------------------ Fulton

namespace {

poly::UniPoly on_axis(const MultiPoly& f) {
    // f(u, 0) as a univariate in u
    std::map<std::string, NFElem> s{{"v", NFElem::zero(f.ring()->field())}};
    return poly::UniPoly::from_multipoly(poly::substitute(f, s), 0);
}

int ord_of(const poly::UniPoly& p) {
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        if (!p.coeffs()[i].is_zero()) return (int)i;
    throw error("ord_of: zero polynomial");
}

// Fulton's recursive procedure at the origin of the (u, v) chart; the caller
// has excluded common components through the origin. The Euclid-style step
// cancels the top term of the axis restriction, so its degree strictly drops
// until a factor of v splits off.
int fulton_origin(MultiPoly f, MultiPoly g, long guard) {
    const RingPtr& R = f.ring();
    int total = 0;
    MultiPoly v = MultiPoly::variable(R, 1);
    while (true) {
        if (--guard < 0) throw error("intersection_multiplicity: iteration guard tripped");
        if (!eval00(f).is_zero() || !eval00(g).is_zero()) return total;
        poly::UniPoly f0 = on_axis(f), g0 = on_axis(g);
        if (f0.is_zero() && g0.is_zero())
            throw error("intersection_multiplicity: common axis factor slipped through");
        if (f0.is_zero()) { std::swap(f, g); std::swap(f0, g0); }
        if (g0.is_zero()) {
            // g = v * h  and  I(f, v) = ord_u f(u, 0)
            auto h = poly::exact_divide(g, v);
            if (!h) throw error("intersection_multiplicity: v-division failed");
            total += ord_of(f0);
            g = std::move(*h);
            continue;
        }
        int r = f0.deg(), s = g0.deg();
        if (r > s) { std::swap(f, g); std::swap(f0, g0); std::swap(r, s); }
        NFElem a = f0.lead(), b = g0.lead();
        Monomial shift(2);
        shift.e[0] = s - r;
        g = g.scaled(a);
        g.axpy(-b, shift, f);
    }
}

}  // namespace

std::optional<int> intersection_multiplicity(const PlaneCurve& C, const PlaneCurve& D,
                                             const ProjPoint& p) {
    LocalForm lf = localize(C.form(), p), lg = localize(D.form(), p);
    if (!eval00(lf.f).is_zero() || !eval00(lg.f).is_zero()) return 0;
    if (lf.f.is_zero() || lg.f.is_zero()) return std::nullopt;
    MultiPoly d = poly::gcd_multi(lf.f, lg.f);
    if (!d.is_constant() && eval00(d).is_zero()) return std::nullopt;
    long guard = 1000 + 40L * (C.degree() + D.degree()) * (C.degree() + D.degree());
    return fulton_origin(lf.f, lg.f, guard);
}

// ------------------------------------------------------------------ Milnor

int milnor_number(const PlaneCurve& C, const ProjPoint& p) {
    LocalForm lf = localize(C.form(), p);
    if (!eval00(lf.f).is_zero()) throw error("milnor_number: point not on curve");
    if (local_multiplicity(lf.f) < 2) throw error("milnor_number: point is smooth");

    const RingPtr& L = lf.f.ring();
    // unimodular retries for degenerate charts
    const long shears[3][4] = {{1, 0, 0, 1}, {1, 1, 0, 1}, {1, 2, 1, 1}};
    for (int attempt = 0; attempt < 3; ++attempt) {
        const long* m = shears[attempt];
        std::map<std::string, MultiPoly> sub;
        MultiPoly u = MultiPoly::variable(L, 0), v = MultiPoly::variable(L, 1);
        auto c = [&](long k) { return MultiPoly::constant(L, Rat(k)); };
        sub.emplace("u", c(m[0]) * u + c(m[1]) * v);
        sub.emplace("v", c(m[2]) * u + c(m[3]) * v);
        MultiPoly f = poly::substitute(lf.f, sub);
        MultiPoly fu = f.derivative(0), fv = f.derivative(1);
        if (fu.is_zero() || fv.is_zero()) continue;
        MultiPoly d = poly::gcd_multi(fu, fv);
        if (!d.is_constant() && eval00(d).is_zero()) continue;  // non-isolated
        try {
            long guard = 2000 + 100L * f.total_degree() * f.total_degree();
            return fulton_origin(fu, fv, guard);
        } catch (const error&) {
            continue;
        }
    }
    throw error("milnor_number: local computation degenerated in all retries");
}

SingularityReport classify_ade(const PlaneCurve& C, const ProjPoint& p) {
    int mult = multiplicity_at(C, p);
    if (mult < 2) throw error("classify_ade: point is smooth");
    int mu = milnor_number(C, p);
    // a double point of a plane curve is a_k with k = Milnor number
    return SingularityReport{p, mult, mu, mult == 2};
}

// ------------------------------------------------------------ singularities

SingularLocus singular_points(const PlaneCurve& C, const Budget& budget) {
    if (!C.is_reduced()) throw error("singular_points: curve is not reduced");
    const RingPtr& R = C.ring();
    const FieldPtr& K = R->field();
    SingularLocus out;

    auto J = poly::jacobian(C.form());
    // affine chart z = 1
    RingPtr A = PolyRing::make(K, {"x", "y"}, MonomialOrder::Lex());
    std::map<std::string, MultiPoly> toA;
    toA.emplace(R->vars()[0], MultiPoly::variable(A, 0));
    toA.emplace(R->vars()[1], MultiPoly::variable(A, 1));
    toA.emplace(R->vars()[2], MultiPoly::constant(A, Rat(1)));
    std::vector<MultiPoly> gens;
    for (const auto& g : {C.form(), J[0], J[1], J[2]}) {
        MultiPoly h = poly::substitute(g, toA);
        if (!h.is_zero()) gens.push_back(h);
    }
    ideals::SolutionSet S = ideals::solve_zero_dim(ideals::Ideal(A, gens), budget);
    for (auto& pt : S.points)
        out.points.push_back(ProjPoint(pt[0], pt[1], NFElem::one(K)));
    out.residual = std::move(S.residual);

    // the line z = 0: common roots of all four restrictions
    RingPtr Ax = PolyRing::make(K, {"x"});
    std::map<std::string, MultiPoly> toInf;
    toInf.emplace(R->vars()[0], MultiPoly::variable(Ax, 0));
    toInf.emplace(R->vars()[1], MultiPoly::constant(Ax, Rat(1)));
    toInf.emplace(R->vars()[2], MultiPoly::constant(Ax, Rat(0)));
    UniPoly g(K);
    bool all_zero = true;
    for (const auto& h : {C.form(), J[0], J[1], J[2]}) {
        MultiPoly r = poly::substitute(h, toInf);
        if (r.is_zero()) continue;
        all_zero = false;
        UniPoly u = UniPoly::from_multipoly(r, 0);
        g = g.is_zero() ? u : poly::gcd_uni(g, u);
    }
    if (all_zero) throw error("singular_points: singular along the line z=0");
    if (g.deg() >= 1) {
        auto fr = poly::field_roots(g);
        for (auto& [root, mult] : fr.roots)
            out.points.push_back(ProjPoint(root, NFElem::one(K), NFElem::zero(K)));
        for (auto& rf : fr.residual) out.residual.push_back({"x:z=0", rf});
    }
    // the point (1:0:0)
    {
        std::vector<NFElem> e1{NFElem::one(K), NFElem::zero(K), NFElem::zero(K)};
        bool sing = C.form().evaluate(e1).is_zero();
        for (const auto& d : J) sing = sing && d.evaluate(e1).is_zero();
        if (sing)
            out.points.push_back(ProjPoint(NFElem::one(K), NFElem::zero(K), NFElem::zero(K)));
    }
    // dedupe
    std::vector<ProjPoint> uniq;
    for (auto& p : out.points)
        if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(p);
    out.points = std::move(uniq);
    return out;
}

// ----------------------------------------------------------------- tangent

PlaneCurve tangent_line(const PlaneCurve& C, const ProjPoint& p) {
    if (!C.contains(p)) throw error("tangent_line: point not on curve");
    auto J = poly::jacobian(C.form());
    std::vector<NFElem> pt{p[0], p[1], p[2]};
    NFElem gx = J[0].evaluate(pt), gy = J[1].evaluate(pt), gz = J[2].evaluate(pt);
    if (gx.is_zero() && gy.is_zero() && gz.is_zero())
        throw error("tangent_line: point is singular");
    const RingPtr& R = C.ring();
    MultiPoly L = MultiPoly::constant(R, gx) * MultiPoly::variable(R, 0) +
                  MultiPoly::constant(R, gy) * MultiPoly::variable(R, 1) +
                  MultiPoly::constant(R, gz) * MultiPoly::variable(R, 2);
    return PlaneCurve(L);
}

// ---------------------------------------------------------------- restrict

BinaryForm restrict_to_line(const PlaneCurve& C, const ProjPoint& a, const ProjPoint& b) {
    if (a == b) throw error("restrict_to_line: parametrization points coincide");
    const FieldPtr& K = C.ring()->field();
    RingPtr ST = PolyRing::make(K, {"s", "t"});
    MultiPoly s = MultiPoly::variable(ST, 0), t = MultiPoly::variable(ST, 1);
    std::map<std::string, MultiPoly> sub;
    const auto& vars = C.ring()->vars();
    for (int i = 0; i < 3; ++i)
        sub.emplace(vars[i], MultiPoly::constant(ST, a[i]) * s + MultiPoly::constant(ST, b[i]) * t);
    MultiPoly bf = poly::substitute(C.form(), sub);
    if (bf.is_zero()) throw error("restrict_to_line: line is contained in the curve");
    BinaryForm out;
    out.degree = C.degree();
    out.c.assign(C.degree() + 1, NFElem::zero(K));
    for (const auto& tm : bf.terms()) out.c[tm.m.e[0]] = tm.c;
    return out;
}

namespace {

// two independent points on the line a x + b y + c z = 0
std::pair<ProjPoint, ProjPoint> points_on_line(const PlaneCurve& L) {
    const FieldPtr& K = L.ring()->field();
    NFElem a = NFElem::zero(K), b = a, c = a;
    for (const auto& t : L.form().terms()) {
        if (t.m.e[0] == 1) a = t.c;
        else if (t.m.e[1] == 1) b = t.c;
        else c = t.c;
    }
    NFElem zero = NFElem::zero(K), one = NFElem::one(K);
    if (!a.is_zero())
        return {ProjPoint(-b / a, one, zero), ProjPoint(-c / a, zero, one)};
    if (!b.is_zero())
        return {ProjPoint(one, zero, zero), ProjPoint(zero, -c / b, one)};
    return {ProjPoint(one, zero, zero), ProjPoint(zero, one, zero)};
}

}  // namespace

BinaryForm restrict_to_line(const PlaneCurve& C, const PlaneCurve& L) {
    if (L.degree() != 1) throw error("restrict_to_line: second curve must be a line");
    auto [P, Q] = points_on_line(L);
    return restrict_to_line(C, P, Q);
}

// -------------------------------------------------------------- intersect

PairIntersections intersect_curves(const PlaneCurve& C, const PlaneCurve& D,
                                   const Budget& budget) {
    const RingPtr& R = C.ring();
    const FieldPtr& K = R->field();
    if (!R->compatible(*D.ring())) throw error("intersect_curves: ring mismatch");
    MultiPoly common = poly::gcd_multi(C.form(), D.form());
    if (!common.is_constant()) throw error("intersect_curves: curves share a component");

    PairIntersections out;
    out.bezout = C.degree() * D.degree();
    out.found_mass = 0;

    std::vector<ProjPoint> pts;
    // affine chart z = 1
    RingPtr A = PolyRing::make(K, {"x", "y"}, MonomialOrder::Lex());
    std::map<std::string, MultiPoly> toA;
    toA.emplace(R->vars()[0], MultiPoly::variable(A, 0));
    toA.emplace(R->vars()[1], MultiPoly::variable(A, 1));
    toA.emplace(R->vars()[2], MultiPoly::constant(A, Rat(1)));
    MultiPoly f = poly::substitute(C.form(), toA), g = poly::substitute(D.form(), toA);
    if (!f.is_constant() && !g.is_constant()) {
        ideals::SolutionSet S =
            ideals::solve_zero_dim(ideals::Ideal(A, {f, g}), budget);
        for (auto& pt : S.points) pts.push_back(ProjPoint(pt[0], pt[1], NFElem::one(K)));
        out.residual = std::move(S.residual);
    }
    // at infinity: common roots of the two restrictions to z = 0
    std::map<std::string, NFElem> z0{{R->vars()[2], NFElem::zero(K)}};
    MultiPoly fb = poly::substitute(C.form(), z0), gb = poly::substitute(D.form(), z0);
    {
        if (fb.is_zero() && gb.is_zero())
            throw error("intersect_curves: both curves contain the line z=0");
        MultiPoly h = fb.is_zero() ? gb : (gb.is_zero() ? fb : poly::gcd_multi(fb, gb));
        if (!h.is_constant()) {
            std::map<std::string, NFElem> y1{{R->vars()[1], NFElem::one(K)}};
            MultiPoly hx = poly::substitute(h, y1);
            if (!hx.is_constant()) {
                auto fr = poly::field_roots(UniPoly::from_multipoly(hx, 0));
                for (auto& [root, mult] : fr.roots)
                    pts.push_back(ProjPoint(root, NFElem::one(K), NFElem::zero(K)));
                for (auto& rf : fr.residual) out.residual.push_back({"x:z=0", rf});
            }
            std::vector<NFElem> e1{NFElem::one(K), NFElem::zero(K), NFElem::zero(K)};
            if (h.evaluate(e1).is_zero())
                pts.push_back(ProjPoint(NFElem::one(K), NFElem::zero(K), NFElem::zero(K)));
        }
    }
    // dedupe, then attach Fulton multiplicities
    std::vector<ProjPoint> uniq;
    for (auto& p : pts)
        if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(p);
    for (auto& p : uniq) {
        auto m = intersection_multiplicity(C, D, p);
        if (!m) throw error("intersect_curves: infinite local number after gcd check");
        if (*m == 0) continue;
        out.points.push_back({p, *m});
        out.found_mass += *m;
    }
    return out;
}

// ------------------------------------------------------------------ flexes

FlexSearch flexes(const PlaneCurve& C, const Budget& budget) {
    const RingPtr& R = C.ring();
    const MultiPoly& F = C.form();
    auto d2 = [&](size_t i, size_t j) { return F.derivative(i).derivative(j); };
    MultiPoly H = d2(0, 0) * (d2(1, 1) * d2(2, 2) - d2(1, 2) * d2(1, 2)) -
                  d2(0, 1) * (d2(0, 1) * d2(2, 2) - d2(1, 2) * d2(0, 2)) +
                  d2(0, 2) * (d2(0, 1) * d2(1, 2) - d2(1, 1) * d2(0, 2));
    FlexSearch out;
    if (H.is_zero()) throw error("flexes: identically vanishing Hessian");
    if (H.is_constant()) return out;  // conics and lines have no flexes

    PairIntersections hits = intersect_curves(C, PlaneCurve(H), budget);
    out.residual = hits.residual;
    auto J = poly::jacobian(F);
    const FieldPtr& K = R->field();
    for (auto& [p, mult] : hits.points) {
        std::vector<NFElem> pt{p[0], p[1], p[2]};
        NFElem gx = J[0].evaluate(pt), gy = J[1].evaluate(pt), gz = J[2].evaluate(pt);
        if (gx.is_zero() && gy.is_zero() && gz.is_zero()) continue;  // singular point
        PlaneCurve T = tangent_line(C, p);
        // parametrize the tangent with p at parameter (1:0)
        auto [P, Q] = points_on_line(T);
        ProjPoint other = (P == p) ? Q : P;
        BinaryForm bp = restrict_to_line(C, p, other);
        int contact = bp.root_multiplicity(NFElem::one(K), NFElem::zero(K));
        if (contact >= 3) out.flexes.push_back({p, T, contact});
    }
    return out;
}

// ------------------------------------------------------------ linear system

namespace {

std::vector<Monomial> degree_monomials(int d, size_t nvars) {
    // exponent vectors of total degree d in 3 variables, fixed generation order
    std::vector<Monomial> out;
    for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j) {
            Monomial m(nvars);
            m.e[0] = i;
            m.e[1] = j;
            m.e[2] = d - i - j;
            out.push_back(m);
        }
    return out;
}

struct KernelResult {
    int rank;
    std::vector<std::vector<NFElem>> kernel;
};

KernelResult kernel_of(std::vector<std::vector<NFElem>> rows, size_t ncols, const FieldPtr& K) {
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        NFElem inv = rows[r][c].inv();
        for (size_t j = c; j < ncols; ++j) rows[r][j] = rows[r][j] * inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            NFElem f = rows[i][c];
            for (size_t j = c; j < ncols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivot_col.push_back((int)c);
        ++r;
    }
    KernelResult res;
    res.rank = (int)r;
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (size_t free_c = 0; free_c < ncols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<NFElem> v(ncols, NFElem::zero(K));
        v[free_c] = NFElem::one(K);
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -rows[i][free_c];
        res.kernel.push_back(std::move(v));
    }
    return res;
}

}  // namespace

LinearSystem linear_system(const LinearSystemSpec& spec, const RingPtr& ring) {
    const FieldPtr& K = ring->field();
    auto monos = degree_monomials(spec.degree, ring->nvars());
    size_t N = monos.size();

    std::vector<std::vector<NFElem>> rows;
    for (const auto& cond : spec.conditions) {
        if (cond.multiplicity < 1) throw error("linear_system: multiplicity must be >= 1");
        if (cond.cone && cond.multiplicity != 2)
            throw error("linear_system: tangent-cone conditions need multiplicity 2");
        std::vector<MultiPoly> local;
        local.reserve(N);
        for (const auto& m : monos)
            local.push_back(localize(MultiPoly::monomial(ring, m, NFElem::one(K)), cond.point).f);
        auto jet = [&](const MultiPoly& f, int a, int b) {
            MultiPoly c = f.coeff_of(0, a).coeff_of(1, b);
            return c.is_zero() ? NFElem::zero(K) : c.terms()[0].c;
        };
        // jets of order < m vanish
        for (int a = 0; a < cond.multiplicity; ++a)
            for (int b = 0; a + b < cond.multiplicity; ++b) {
                std::vector<NFElem> row;
                row.reserve(N);
                for (const auto& lp : local) row.push_back(jet(lp, a, b));
                rows.push_back(std::move(row));
            }
        if (cond.cone) {
            LocalForm lq = localize(*cond.cone, cond.point);
            if (local_multiplicity(lq.f) != 2)
                throw error("linear_system: cone does not vanish doubly at the point");
            NFElem q20 = jet(lq.f, 2, 0), q11 = jet(lq.f, 1, 1), q02 = jet(lq.f, 0, 2);
            if (!(q11 * q11 - NFElem::from_rat(K, Rat(4)) * q20 * q02).is_zero())
                throw error("linear_system: cone is not a double line");
            // 2-jet proportional to (q20, q11, q02): cross products vanish
            std::array<std::array<int, 2>, 3> idx{{{2, 0}, {1, 1}, {0, 2}}};
            std::array<NFElem, 3> q{q20, q11, q02};
            for (int pi = 0; pi < 3; ++pi)
                for (int pj = pi + 1; pj < 3; ++pj) {
                    std::vector<NFElem> row;
                    row.reserve(N);
                    for (const auto& lp : local) {
                        NFElem ji = jet(lp, idx[pi][0], idx[pi][1]);
                        NFElem jj = jet(lp, idx[pj][0], idx[pj][1]);
                        row.push_back(ji * q[pj] - jj * q[pi]);
                    }
                    rows.push_back(std::move(row));
                }
        }
    }

    KernelResult kr = kernel_of(std::move(rows), N, K);
    LinearSystem out;
    out.rank = kr.rank;
    for (auto& v : kr.kernel) {
        std::vector<Term> ts;
        for (size_t i = 0; i < N; ++i)
            if (!v[i].is_zero()) ts.push_back({monos[i], v[i]});
        out.basis.push_back(MultiPoly(ring, std::move(ts)));
    }
    out.dimension = (int)out.basis.size();
    return out;
}

bool in_span(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
    if (f.is_zero()) return true;
    if (basis.empty()) return false;
    const RingPtr& R = f.ring();
    const FieldPtr& K = R->field();
    std::vector<Monomial> sup;
    auto add_support = [&](const MultiPoly& g) {
        for (const auto& t : g.terms())
            if (std::find(sup.begin(), sup.end(), t.m) == sup.end()) sup.push_back(t.m);
    };
    add_support(f);
    for (const auto& b : basis) add_support(b);
    auto vec = [&](const MultiPoly& g) {
        std::vector<NFElem> v(sup.size(), NFElem::zero(K));
        for (const auto& t : g.terms())
            for (size_t i = 0; i < sup.size(); ++i)
                if (sup[i] == t.m) { v[i] = t.c; break; }
        return v;
    };
    std::vector<std::vector<NFElem>> rows;
    for (const auto& b : basis) rows.push_back(vec(b));
    int r0 = kernel_of(rows, sup.size(), K).rank;
    rows.push_back(vec(f));
    int r1 = kernel_of(rows, sup.size(), K).rank;
    return r0 == r1;
}

bool same_span(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
    for (const auto& f : a)
        if (!in_span(f, b)) return false;
    for (const auto& g : b)
        if (!in_span(g, a)) return false;
    return true;
}

// -------------------------------------------------------------------- maps

ProjMap::ProjMap(std::vector<MultiPoly> comps) : components(std::move(comps)) {
    if (components.size() != 3 && components.size() != 4)
        throw error("ProjMap: need 3 or 4 components");
    auto d0 = components[0].homogeneous_degree();
    if (!d0) throw error("ProjMap: components must be homogeneous");
    MultiPoly g = components[0];
    for (size_t i = 1; i < components.size(); ++i) {
        if (!components[i].ring()->same_as(*components[0].ring()))
            throw error("ProjMap: components in different rings");
        if (components[i].homogeneous_degree() != d0)
            throw error("ProjMap: components of unequal degree");
        g = poly::gcd_multi(g, components[i]);
    }
    if (!g.is_constant()) throw error("ProjMap: components share a polynomial factor");
}

MappedCurve apply_map(const PlaneCurve& C, const ProjMap& phi,
                      const std::vector<MultiPoly>& exceptional) {
    const RingPtr& R = C.ring();
    if (!R->same_as(*phi.ring())) throw error("apply_map: ring mismatch");
    if (phi.components.size() != 3) throw error("apply_map: need a 3-component self-map");
    std::map<std::string, MultiPoly> sub;
    for (int i = 0; i < 3; ++i) sub.emplace(R->vars()[i], phi.components[i]);
    MultiPoly img = poly::substitute(C.form(), sub);
    if (img.is_zero()) throw error("apply_map: curve is contracted by the map");
    std::vector<int> stripped;
    for (const auto& e : exceptional) {
        auto [q, k] = poly::divide_out(img, e);
        img = q;
        stripped.push_back(k);
    }
    if (img.is_constant()) throw error("apply_map: curve is contracted by the map");
    return {PlaneCurve(img), std::move(stripped)};
}

namespace {

MultiPoly implicitize(const std::vector<MultiPoly>& comps, const MultiPoly* source_curve,
                      const std::vector<std::string>& image_vars, const Budget& budget) {
    const RingPtr& R = comps[0].ring();
    const FieldPtr& K = R->field();
    size_t nc = comps.size();
    if (image_vars.size() != nc) throw error("implicitize: need one image variable per component");

    std::vector<std::string> vars{"x", "y", "lambda"};
    vars.insert(vars.end(), image_vars.begin(), image_vars.end());
    RingPtr E = PolyRing::make(K, vars, MonomialOrder::Block(3));

    std::map<std::string, MultiPoly> chart;
    chart.emplace(R->vars()[0], MultiPoly::variable(E, 0));
    chart.emplace(R->vars()[1], MultiPoly::variable(E, 1));
    chart.emplace(R->vars()[2], MultiPoly::constant(E, Rat(1)));

    std::vector<MultiPoly> gens;
    if (source_curve) gens.push_back(poly::substitute(*source_curve, chart));
    MultiPoly lambda = MultiPoly::variable(E, 2);
    for (size_t i = 0; i < nc; ++i)
        gens.push_back(MultiPoly::variable(E, 3 + i) - lambda * poly::substitute(comps[i], chart));

    ideals::GroebnerBasis G = ideals::buchberger(ideals::Ideal(E, std::move(gens)), budget);
    std::vector<MultiPoly> elim;
    for (const auto& g : G.basis()) {
        bool pure = true;
        for (int i = 0; i < 3 && pure; ++i)
            if (g.depends_on(i)) pure = false;
        if (pure) elim.push_back(g);
    }
    if (elim.size() != 1)
        throw error("implicitize: elimination ideal is not principal (got " +
                    std::to_string(elim.size()) + " generators)");
    RingPtr T = PolyRing::make(K, image_vars);
    MultiPoly g = elim[0].to_ring(T);
    if (!g.homogeneous_degree())
        throw error("implicitize: image equation is not homogeneous");

    // certification: g(components) vanishes identically on the source
    std::map<std::string, MultiPoly> back;
    for (size_t i = 0; i < nc; ++i) back.emplace(image_vars[i], comps[i]);
    MultiPoly pullback = poly::substitute(g, back);
    if (source_curve) {
        if (!pullback.is_zero() && !poly::exact_divide(pullback, *source_curve))
            throw error("implicitize: certification failed (pullback not divisible)");
    } else {
        if (!pullback.is_zero())
            throw error("implicitize: certification failed (pullback nonzero)");
    }
    return g;
}

}  // namespace

MultiPoly image_curve(const ProjMap& phi, const PlaneCurve& C,
                      const std::vector<std::string>& image_vars, const Budget& budget) {
    if (phi.components.size() != 3)
        throw error("image_curve: need a 3-component map for a plane image");
    if (!phi.ring()->same_as(*C.ring())) throw error("image_curve: ring mismatch");
    return implicitize(phi.components, &C.form(), image_vars, budget);
}

MultiPoly image_of_plane(const ProjMap& phi, const std::vector<std::string>& image_vars,
                         const Budget& budget) {
    if (phi.components.size() != 4)
        throw error("image_of_plane: need a 4-component map");
    return implicitize(phi.components, nullptr, image_vars, budget);
}

// -------------------------------------------------------------- incidence

IncidenceTable incidence_table(const std::vector<PlaneCurve>& curves, const Budget& budget) {
    size_t n = curves.size();
    IncidenceTable out;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            PairIntersections pi = intersect_curves(curves[i], curves[j], budget);
            out.audits.push_back({(int)i, (int)j, pi.bezout, pi.found_mass, pi.complete()});
            for (auto& [p, m] : pi.points) {
                auto it = std::find_if(out.points.begin(), out.points.end(),
                                       [&](const IncidencePoint& q) { return q.p == p; });
                if (it == out.points.end()) {
                    IncidencePoint np{p, std::vector<bool>(n, false), {}};
                    for (size_t k = 0; k < n; ++k) np.member[k] = curves[k].contains(p);
                    out.points.push_back(std::move(np));
                    it = out.points.end() - 1;
                }
                it->mult[{(int)i, (int)j}] = m;
            }
        }
    return out;
}

}  // namespace curves
}  // namespace cag
