#include "cag/poly.hpp"

#include <algorithm>
#include <sstream>

namespace cag {
namespace poly {

// --------------------------------------------------------------- Monomial

int Monomial::total_degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

long Monomial::weighted_degree(const std::vector<long>& w) const {
    long d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += w[i] * e[i];
    return d;
}

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::mul(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

Monomial Monomial::div(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) {
        r.e[i] -= o.e[i];
        if (r.e[i] < 0) throw error("Monomial: non-divisible quotient");
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = std::max(r.e[i], o.e[i]);
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0 && o.e[i] > 0) return false;
    return true;
}

bool Monomial::is_one() const {
    for (int x : e)
        if (x) return false;
    return true;
}

namespace {

int cmp_lex(const int* a, const int* b, size_t n) {
    for (size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

int cmp_grevlex(const int* a, const int* b, size_t n) {
    int da = 0, db = 0;
    for (size_t i = 0; i < n; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da > db ? 1 : -1;
    for (size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    size_t n = a.e.size();
    switch (kind) {
        case OrderKind::lex:
            return cmp_lex(a.e.data(), b.e.data(), n);
        case OrderKind::grevlex:
            return cmp_grevlex(a.e.data(), b.e.data(), n);
        case OrderKind::block: {
            size_t k = std::min(block_split, n);
            int c = cmp_grevlex(a.e.data(), b.e.data(), k);
            if (c) return c;
            return cmp_grevlex(a.e.data() + k, b.e.data() + k, n - k);
        }
    }
    return 0;
}

// --------------------------------------------------------------- PolyRing

RingPtr PolyRing::make(FieldPtr field, std::vector<std::string> vars, MonomialOrder order) {
    if (!field) throw error("PolyRing: null field");
    if (vars.empty()) throw error("PolyRing: no variables");
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw error("PolyRing: duplicate variable " + vars[i]);
    return RingPtr(new PolyRing(std::move(field), std::move(vars), order));
}

int PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

bool PolyRing::same_as(const PolyRing& o) const {
    if (this == &o) return true;
    return compatible(o) && order_ == o.order_;
}

bool PolyRing::compatible(const PolyRing& o) const {
    return field_->same_as(*o.field_) && vars_ == o.vars_;
}

// -------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(RingPtr r, std::vector<Term> terms)
    : ring_(std::move(r)), t_(std::move(terms)) {
    normalize();
}

void MultiPoly::normalize() {
    const MonomialOrder& ord = ring_->order();
    std::sort(t_.begin(), t_.end(),
              [&ord](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c = out.back().c + t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    // a later duplicate can re-zero an earlier sum; sweep once more
    std::vector<Term> fin;
    fin.reserve(out.size());
    for (auto& t : out)
        if (!t.c.is_zero()) fin.push_back(std::move(t));
    t_ = std::move(fin);
}

MultiPoly MultiPoly::constant(RingPtr r, const NFElem& c) {
    MultiPoly p(r);
    if (!c.is_zero()) p.t_.push_back({Monomial(r->nvars()), c});
    return p;
}

MultiPoly MultiPoly::constant(RingPtr r, const Rat& c) {
    return constant(r, NFElem::from_rat(r->field(), c));
}

MultiPoly MultiPoly::variable(RingPtr r, size_t i) {
    if (i >= r->nvars()) throw error("MultiPoly: variable index out of range");
    Monomial m(r->nvars());
    m.e[i] = 1;
    NFElem one = NFElem::one(r->field());
    return monomial(std::move(r), std::move(m), std::move(one));
}

MultiPoly MultiPoly::monomial(RingPtr r, Monomial m, NFElem c) {
    MultiPoly p(r);
    if (!c.is_zero()) p.t_.push_back({std::move(m), std::move(c)});
    return p;
}

const Term& MultiPoly::lead() const {
    if (t_.empty()) throw error("MultiPoly: leading term of zero");
    return t_.front();
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, t.m.total_degree());
    return d;
}

int MultiPoly::degree_in(size_t var) const {
    int d = 0;
    for (const auto& t : t_) d = std::max(d, t.m.e[var]);
    return d;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (!ring_->same_as(*o.ring_)) throw error("MultiPoly: ring mismatch in add");
    const MonomialOrder& ord = ring_->order();
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = ord.cmp(t_[i].m, o.t_[j].m);
        if (c > 0) out.push_back(t_[i++]);
        else if (c < 0) out.push_back(o.t_[j++]);
        else {
            NFElem s = t_[i].c + o.t_[j].c;
            if (!s.is_zero()) out.push_back({t_[i].m, std::move(s)});
            ++i; ++j;
        }
    }
    while (i < t_.size()) out.push_back(t_[i++]);
    while (j < o.t_.size()) out.push_back(o.t_[j++]);
    MultiPoly r(ring_);
    r.t_ = std::move(out);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (!ring_->same_as(*o.ring_)) throw error("MultiPoly: ring mismatch in mul");
    if (is_zero() || o.is_zero()) return MultiPoly(ring_);
    const MonomialOrder& ord = ring_->order();
    auto desc = [&ord](const Monomial& a, const Monomial& b) { return ord.cmp(a, b) > 0; };
    std::map<Monomial, NFElem, decltype(desc)> acc(desc);
    for (const auto& a : t_)
        for (const auto& b : o.t_) {
            Monomial m = a.m.mul(b.m);
            NFElem c = a.c * b.c;
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(std::move(m), std::move(c));
            else it->second = it->second + c;
        }
    MultiPoly r(ring_);
    r.t_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.t_.push_back({m, c});
    return r;
}

MultiPoly MultiPoly::pow(long n) const {
    if (n < 0) throw error("MultiPoly: negative power");
    MultiPoly acc = constant(ring_, NFElem::one(ring_->field()));
    MultiPoly base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

MultiPoly MultiPoly::scaled(const NFElem& s) const {
    if (s.is_zero()) return MultiPoly(ring_);
    MultiPoly r = *this;
    for (auto& t : r.t_) t.c = t.c * s;
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().c.inv());
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (!ring_->compatible(*o.ring_)) return false;
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
    return true;
}

void MultiPoly::axpy(const NFElem& c, const Monomial& m, const MultiPoly& g) {
    const MonomialOrder& ord = ring_->order();
    std::vector<Term> out;
    out.reserve(t_.size() + g.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < g.t_.size()) {
        Monomial gm = g.t_[j].m.mul(m);
        int cv = ord.cmp(t_[i].m, gm);
        if (cv > 0) out.push_back(std::move(t_[i++]));
        else if (cv < 0) {
            out.push_back({std::move(gm), c * g.t_[j].c});
            ++j;
        } else {
            NFElem s = t_[i].c + c * g.t_[j].c;
            if (!s.is_zero()) out.push_back({t_[i].m, std::move(s)});
            ++i; ++j;
        }
    }
    while (i < t_.size()) out.push_back(std::move(t_[i++]));
    while (j < g.t_.size()) {
        out.push_back({g.t_[j].m.mul(m), c * g.t_[j].c});
        ++j;
    }
    t_ = std::move(out);
}

MultiPoly MultiPoly::derivative(size_t var) const {
    MultiPoly r(ring_);
    for (const auto& t : t_) {
        int e = t.m.e[var];
        if (e == 0) continue;
        Term nt{t.m, t.c * NFElem::from_rat(ring_->field(), Rat(e))};
        nt.m.e[var] -= 1;
        r.t_.push_back(std::move(nt));
    }
    r.normalize();
    return r;
}

NFElem MultiPoly::evaluate(const std::vector<NFElem>& point) const {
    if (point.size() != ring_->nvars()) throw error("MultiPoly: wrong point arity");
    // cached powers per variable
    std::vector<std::vector<NFElem>> pw(point.size());
    NFElem acc = NFElem::zero(ring_->field());
    for (const auto& t : t_) {
        NFElem v = t.c;
        for (size_t i = 0; i < point.size(); ++i) {
            int e = t.m.e[i];
            if (e == 0) continue;
            auto& p = pw[i];
            if (p.empty()) p.push_back(NFElem::one(ring_->field()));
            while ((int)p.size() <= e) p.push_back(p.back() * point[i]);
            v = v * p[e];
        }
        acc = acc + v;
    }
    return acc;
}

MultiPoly MultiPoly::coeff_of(size_t var, int k) const {
    MultiPoly r(ring_);
    for (const auto& t : t_) {
        if (t.m.e[var] != k) continue;
        Term nt = t;
        nt.m.e[var] = 0;
        r.t_.push_back(std::move(nt));
    }
    r.normalize();
    return r;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
    if (t_.empty()) return 0;
    int d = t_[0].m.total_degree();
    for (const auto& t : t_)
        if (t.m.total_degree() != d) return std::nullopt;
    return d;
}

std::optional<long> MultiPoly::weighted_homogeneous_degree(const std::vector<long>& w) const {
    if (w.size() != ring_->nvars()) throw error("weighted degree: arity mismatch");
    if (t_.empty()) return 0;
    long d = t_[0].m.weighted_degree(w);
    for (const auto& t : t_)
        if (t.m.weighted_degree(w) != d) return std::nullopt;
    return d;
}

MultiPoly MultiPoly::to_ring(const RingPtr& target) const {
    if (ring_->same_as(*target)) { MultiPoly r = *this; r.ring_ = target; return r; }
    if (!ring_->field()->same_as(*target->field()))
        throw error("to_ring: field mismatch");
    std::vector<int> map(ring_->nvars(), -1);
    for (size_t i = 0; i < ring_->nvars(); ++i)
        map[i] = target->var_index(ring_->vars()[i]);
    MultiPoly r(target);
    for (const auto& t : t_) {
        Monomial m(target->nvars());
        for (size_t i = 0; i < ring_->nvars(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (map[i] < 0)
                throw error("to_ring: variable " + ring_->vars()[i] + " missing in target");
            m.e[map[i]] = t.m.e[i];
        }
        r.t_.push_back({std::move(m), t.c});
    }
    r.normalize();
    return r;
}

size_t MultiPoly::coeff_bits() const {
    size_t b = 0;
    for (const auto& t : t_) b = std::max(b, t.c.bits());
    return b;
}

// ------------------------------------------------------------ substitute

MultiPoly substitute(const MultiPoly& f, const std::map<std::string, MultiPoly>& assignments) {
    RingPtr target;
    for (const auto& [k, v] : assignments) {
        if (!target) target = v.ring();
        else if (!target->same_as(*v.ring()))
            throw error("substitute: assignment targets in different rings");
    }
    if (!target) target = f.ring();
    const RingPtr& src = f.ring();
    // per-variable replacement polynomials
    std::vector<MultiPoly> rep;
    rep.reserve(src->nvars());
    for (size_t i = 0; i < src->nvars(); ++i) {
        auto it = assignments.find(src->vars()[i]);
        if (it != assignments.end()) {
            rep.push_back(it->second);
        } else {
            int j = target->var_index(src->vars()[i]);
            if (j < 0) throw error("substitute: unknown variable " + src->vars()[i]);
            rep.push_back(MultiPoly::variable(target, j));
        }
    }
    if (!src->field()->same_as(*target->field()))
        throw error("substitute: source and target fields differ");
    MultiPoly acc(target);
    std::vector<std::vector<MultiPoly>> pw(rep.size());
    for (const auto& t : f.terms()) {
        MultiPoly v = MultiPoly::constant(target, t.c);
        for (size_t i = 0; i < rep.size(); ++i) {
            int e = t.m.e[i];
            if (e == 0) continue;
            auto& p = pw[i];
            if (p.empty()) p.push_back(MultiPoly::constant(target, Rat(1)));
            while ((int)p.size() <= e) p.push_back(p.back() * rep[i]);
            v = v * p[e];
        }
        acc = acc + v;
    }
    return acc;
}

MultiPoly substitute(const MultiPoly& f, const std::map<std::string, NFElem>& values) {
    std::map<std::string, MultiPoly> as;
    for (const auto& [k, v] : values)
        as.emplace(k, MultiPoly::constant(f.ring(), v));
    return substitute(f, as);
}

std::vector<MultiPoly> jacobian(const MultiPoly& f) {
    std::vector<MultiPoly> r;
    for (size_t i = 0; i < f.ring()->nvars(); ++i) r.push_back(f.derivative(i));
    return r;
}

// --------------------------------------------------------- exact division

std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw error("exact_divide: division by zero");
    MultiPoly r = f;
    MultiPoly q(f.ring());
    std::vector<Term> qt;
    NFElem glc_inv = g.lead().c.inv();
    while (!r.is_zero()) {
        if (!g.lead().m.divides(r.lead().m)) return std::nullopt;
        Monomial m = r.lead().m.div(g.lead().m);
        NFElem c = r.lead().c * glc_inv;
        qt.push_back({m, c});
        r.axpy(-c, m, g);
    }
    return MultiPoly(f.ring(), std::move(qt));
}

std::pair<MultiPoly, int> divide_out(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_constant()) throw error("divide_out: divisor must be nonconstant");
    MultiPoly cur = f;
    int k = 0;
    while (!cur.is_zero()) {
        auto q = exact_divide(cur, g);
        if (!q) break;
        cur = std::move(*q);
        ++k;
    }
    return {cur, k};
}

// -------------------------------------------------------------- resultant

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, size_t var) {
    int m = f.degree_in(var), n = g.degree_in(var);
    if (f.is_zero() || g.is_zero()) throw error("resultant: zero input");
    if (m == 0 && n == 0) throw error("resultant: both inputs constant in the variable");
    const RingPtr& R = f.ring();
    MultiPoly zero(R), one = MultiPoly::constant(R, Rat(1));
    if (m == 0) return f.pow(n);
    if (n == 0) return g.pow(m);

    size_t N = m + n;
    std::vector<std::vector<MultiPoly>> M(N, std::vector<MultiPoly>(N, zero));
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k) M[row][row + (m - k)] = f.coeff_of(var, k);
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k) M[n + row][row + (n - k)] = g.coeff_of(var, k);

    // fraction-free Bareiss; divisions are exact
    MultiPoly prev = one;
    int sign = 1;
    for (size_t r = 0; r + 1 < N; ++r) {
        if (M[r][r].is_zero()) {
            size_t s = r + 1;
            while (s < N && M[s][r].is_zero()) ++s;
            if (s == N) return zero;  // singular: resultant vanishes
            std::swap(M[r], M[s]);
            sign = -sign;
        }
        for (size_t i = r + 1; i < N; ++i) {
            for (size_t j = r + 1; j < N; ++j) {
                MultiPoly num = M[r][r] * M[i][j] - M[i][r] * M[r][j];
                if (num.is_zero()) { M[i][j] = zero; continue; }
                auto q = exact_divide(num, prev);
                if (!q) throw error("resultant: Bareiss exact division failed");
                M[i][j] = std::move(*q);
            }
            M[i][r] = zero;
        }
        prev = M[r][r];
    }
    MultiPoly det = M[N - 1][N - 1];
    return sign < 0 ? -det : det;
}

// ------------------------------------------------------------- gcd_multi

namespace {

MultiPoly content_in(const MultiPoly& f, size_t var);

// pseudo-remainder of f by g in var (both depend on var, deg f >= deg g)
MultiPoly pseudo_rem(MultiPoly f, const MultiPoly& g, size_t var) {
    int dg = g.degree_in(var);
    MultiPoly glc = g.coeff_of(var, dg);
    RingPtr R = f.ring();
    MultiPoly xvar = MultiPoly::variable(R, var);
    while (!f.is_zero() && f.degree_in(var) >= dg) {
        int df = f.degree_in(var);
        MultiPoly flc = f.coeff_of(var, df);
        MultiPoly shift = xvar.pow(df - dg);
        f = glc * f - flc * shift * g;
    }
    return f;
}

MultiPoly primitive_part(const MultiPoly& f, size_t var, MultiPoly* content_out = nullptr) {
    MultiPoly c = content_in(f, var);
    if (content_out) *content_out = c;
    if (c.is_constant()) return f;
    auto q = exact_divide(f, c);
    if (!q) throw error("gcd_multi: content division failed");
    return *q;
}

MultiPoly content_in(const MultiPoly& f, size_t var) {
    MultiPoly c(f.ring());
    for (int k = 0; k <= f.degree_in(var); ++k) {
        MultiPoly ck = f.coeff_of(var, k);
        if (ck.is_zero()) continue;
        c = c.is_zero() ? ck : gcd_multi(c, ck);
        if (c.is_constant()) break;
    }
    return c;
}

}  // namespace

MultiPoly gcd_multi(const MultiPoly& f, const MultiPoly& g) {
    const RingPtr& R = f.ring();
    if (f.is_zero()) return g.is_zero() ? g : g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_constant() || g.is_constant())
        return MultiPoly::constant(R, Rat(1));

    // deepest variable appearing in either
    int var = -1;
    for (int i = (int)R->nvars() - 1; i >= 0; --i) {
        if (f.depends_on(i) || g.depends_on(i)) { var = i; break; }
    }
    if (var < 0) return MultiPoly::constant(R, Rat(1));

    if (!f.depends_on(var)) return gcd_multi(f, content_in(g, var));
    if (!g.depends_on(var)) return gcd_multi(g, content_in(f, var));

    MultiPoly cf, cg;
    MultiPoly pf = primitive_part(f, var, &cf);
    MultiPoly pg = primitive_part(g, var, &cg);
    MultiPoly c = gcd_multi(cf, cg);

    while (!pg.is_zero()) {
        MultiPoly r = pseudo_rem(pf, pg, var);
        pf = std::move(pg);
        pg = r.is_zero() ? r : primitive_part(r, var);
    }
    return (c * pf).monic();
}

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(FieldPtr f, std::vector<NFElem> coeffs)
    : field_(std::move(f)), c_(std::move(coeffs)) {
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

NFElem UniPoly::at(size_t i) const {
    return i < c_.size() ? c_[i] : NFElem::zero(field_);
}

const NFElem& UniPoly::lead() const {
    if (c_.empty()) throw error("UniPoly: lead of zero");
    return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<NFElem> r(std::max(c_.size(), o.c_.size()), NFElem::zero(field_));
    for (size_t i = 0; i < r.size(); ++i) r[i] = at(i) + o.at(i);
    return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<NFElem> r(std::max(c_.size(), o.c_.size()), NFElem::zero(field_));
    for (size_t i = 0; i < r.size(); ++i) r[i] = at(i) - o.at(i);
    return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly(field_);
    std::vector<NFElem> r(c_.size() + o.c_.size() - 1, NFElem::zero(field_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::scaled(const NFElem& s) const {
    std::vector<NFElem> r(c_.size(), NFElem::zero(field_));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inv());
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly(field_);
    std::vector<NFElem> r(c_.size() - 1, NFElem::zero(field_));
    for (size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i] * NFElem::from_rat(field_, Rat((long)i));
    return UniPoly(field_, std::move(r));
}

NFElem UniPoly::eval(const NFElem& x) const {
    NFElem acc = NFElem::zero(field_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw error("UniPoly: division by zero");
    r = a;
    q = UniPoly(a.field_);
    q.c_.assign(a.c_.size(), NFElem::zero(a.field_));
    NFElem binv = b.lead().inv();
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int k = r.deg() - b.deg();
        NFElem f = r.lead() * binv;
        q.c_[k] = f;
        for (int i = 0; i <= b.deg(); ++i) r.c_[i + k] = r.c_[i + k] - f * b.c_[i];
        r.trim();
    }
    q.trim();
}

UniPoly UniPoly::from_multipoly(const MultiPoly& f, size_t var) {
    for (const auto& t : f.terms())
        for (size_t i = 0; i < t.m.e.size(); ++i)
            if (i != var && t.m.e[i] != 0)
                throw error("UniPoly: polynomial is not univariate in the chosen variable");
    std::vector<NFElem> c(f.degree_in(var) + 1, NFElem::zero(f.ring()->field()));
    for (const auto& t : f.terms()) c[t.m.e[var]] = t.c;
    return UniPoly(f.ring()->field(), std::move(c));
}

MultiPoly UniPoly::to_multipoly(const RingPtr& ring, size_t var) const {
    std::vector<Term> ts;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Monomial m(ring->nvars());
        m.e[var] = (int)i;
        ts.push_back({std::move(m), c_[i]});
    }
    return MultiPoly(ring, std::move(ts));
}

UniPoly gcd_uni(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly q, r;
        UniPoly::divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero()) throw error("squarefree_part: zero polynomial");
    if (f.deg() == 0) return f.monic();
    UniPoly g = gcd_uni(f, f.derivative());
    UniPoly q, r;
    UniPoly::divmod(f, g, q, r);
    if (!r.is_zero()) throw error("squarefree_part: inexact division");
    return q.monic();
}

// ------------------------------------------------------------ field_roots

namespace {

// rational root candidates for a UniPoly over a number field: a rational
// root is a root of every coordinate polynomial, so divisor-bound the first
// nonzero coordinate
std::vector<Rat> rational_candidates(const UniPoly& f) {
    int deg = f.field()->degree();
    for (int k = 0; k < deg; ++k) {
        std::vector<Rat> coord(f.coeffs().size());
        bool nonzero = false;
        for (size_t i = 0; i < f.coeffs().size(); ++i) {
            const auto& cs = f.coeffs()[i].coeffs();
            coord[i] = (int)cs.size() > k ? cs[k] : Rat(0);
            if (!coord[i].is_zero()) nonzero = true;
        }
        if (nonzero) return arith::rational_roots(arith::RatPoly(std::move(coord)));
    }
    return {};
}

int deflate_all(UniPoly& f, const NFElem& root) {
    const FieldPtr& K = f.field();
    UniPoly lin(K, {-root, NFElem::one(K)});
    int k = 0;
    for (;;) {
        UniPoly q, r;
        UniPoly::divmod(f, lin, q, r);
        if (!r.is_zero()) break;
        f = std::move(q);
        ++k;
    }
    return k;
}

}  // namespace

FieldRoots field_roots(const UniPoly& f) {
    if (f.is_zero()) throw error("field_roots: zero polynomial");
    const FieldPtr& K = f.field();
    FieldRoots out;
    UniPoly cur = f.monic();

    // rational roots first
    for (const Rat& cand : rational_candidates(cur)) {
        NFElem r = NFElem::from_rat(K, cand);
        if (cur.eval(r).is_zero()) {
            int k = deflate_all(cur, r);
            if (k > 0) out.roots.push_back({r, k});
        }
    }
    if (cur.deg() <= 0) return out;

    if (cur.deg() == 1) {
        NFElem r = -(cur.at(0) / cur.at(1));
        out.roots.push_back({r, deflate_all(cur, r)});
        return out;
    }
    if (cur.deg() == 2) {
        NFElem a = cur.at(2), b = cur.at(1), c = cur.at(0);
        NFElem disc = b * b - NFElem::from_rat(K, Rat(4)) * a * c;
        auto s = arith::nf_sqrt(disc);
        if (s) {
            NFElem twoa = NFElem::from_rat(K, Rat(2)) * a;
            for (const NFElem& sq : {*s, -*s}) {
                NFElem r = (-b + sq) / twoa;
                if (cur.is_zero() || cur.eval(r).is_zero()) {
                    int k = deflate_all(cur, r);
                    if (k > 0) out.roots.push_back({r, k});
                }
            }
        }
        if (cur.deg() > 0) out.residual.push_back(squarefree_part(cur));
        return out;
    }
    out.residual.push_back(squarefree_part(cur));
    return out;
}

// ---------------------------------------------------------- BinaryQuartic

NFElem BinaryQuartic::inv_i() const {
    const FieldPtr& K = a.field();
    NFElem n12 = NFElem::from_rat(K, Rat(12)), n3 = NFElem::from_rat(K, Rat(3));
    return n12 * a * e - n3 * b * d + c * c;
}

NFElem BinaryQuartic::inv_j() const {
    const FieldPtr& K = a.field();
    NFElem n27 = NFElem::from_rat(K, Rat(27)), n8 = NFElem::from_rat(K, Rat(8));
    return n27 * a * d * d + n27 * b * b * e - n27 * b * c * d + n8 * c * c * c;
}

bool BinaryQuartic::has_triple_root() const {
    if (a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero() && e.is_zero())
        throw error("BinaryQuartic: zero form");
    return inv_i().is_zero() && inv_j().is_zero();
}

// ------------------------------------------------------------- BinaryForm

int BinaryForm::root_multiplicity(const NFElem& s0, const NFElem& t0) const {
    if (s0.is_zero() && t0.is_zero()) throw error("BinaryForm: (0:0) is not a point");
    const FieldPtr& K = c.at(0).field();
    if (t0.is_zero()) {
        // (1:0): multiplicity = degree drop of the t=1 dehomogenization
        UniPoly p = dehomogenized(K);
        if (p.is_zero()) throw error("BinaryForm: zero form");
        return degree - p.deg();
    }
    UniPoly p = dehomogenized(K);
    if (p.is_zero()) throw error("BinaryForm: zero form");
    NFElem x0 = s0 / t0;
    UniPoly lin(K, {-x0, NFElem::one(K)});
    int k = 0;
    for (;;) {
        UniPoly q, r;
        UniPoly::divmod(p, lin, q, r);
        if (!r.is_zero()) break;
        p = std::move(q);
        ++k;
    }
    return k;
}

UniPoly BinaryForm::dehomogenized(const FieldPtr& f) const {
    return UniPoly(f, c);
}

}  // namespace poly
}  // namespace cag
