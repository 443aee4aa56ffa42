#include "cag/numberfield.hpp"

#include <algorithm>
#include <sstream>

namespace cag {
namespace arith {

// ---------------------------------------------------------------- RatPoly

void RatPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c.size(), o.c.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = at(i) + o.at(i);
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c.size(), o.c.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = at(i) - o.at(i);
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rat> r(c.size() + o.c.size() - 1);
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::scaled(const Rat& s) const {
    std::vector<Rat> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = c[i] * s;
    return RatPoly(std::move(r));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inv());
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

void RatPoly::divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.is_zero()) throw error("RatPoly: division by zero polynomial");
    r = a;
    q = RatPoly();
    q.c.assign(a.c.size(), Rat());
    Rat binv = b.lead().inv();
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int k = r.deg() - b.deg();
        Rat f = r.lead() * binv;
        q.c[k] = f;
        for (int i = 0; i <= b.deg(); ++i) r.c[i + k] -= f * b.c[i];
        r.trim();
    }
    q.trim();
}

RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly q, r;
        RatPoly::divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

void gcdext(const RatPoly& a, const RatPoly& b, RatPoly& g, RatPoly& u, RatPoly& v) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0(std::vector<Rat>{Rat(1)}), s1;
    RatPoly t0, t1(std::vector<Rat>{Rat(1)});
    while (!r1.is_zero()) {
        RatPoly q, r;
        RatPoly::divmod(r0, r1, q, r);
        RatPoly s = s0 - q * s1;
        RatPoly t = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s);
        t0 = std::move(t1); t1 = std::move(t);
    }
    if (r0.is_zero()) { g = r0; u = s0; v = t0; return; }
    Rat linv = r0.lead().inv();
    g = r0.scaled(linv);
    u = s0.scaled(linv);
    v = t0.scaled(linv);
}

namespace {

// primitive integer model: p scaled so every coefficient is integral with
// content 1; returned lowest-first
std::vector<mpz_class> integer_model(const RatPoly& p) {
    mpz_class l = 1;
    for (const Rat& q : p.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.den().get_mpz_t());
    std::vector<mpz_class> z(p.c.size());
    mpz_class g = 0;
    for (size_t i = 0; i < p.c.size(); ++i) {
        z[i] = p.c[i].num() * (l / p.c[i].den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
    }
    if (g > 1)
        for (auto& zi : z) zi /= g;
    return z;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    mpz_class a = abs(n);
    std::vector<mpz_class> ds;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            ds.push_back(d);
            if (d * d != a) ds.push_back(a / d);
        }
    }
    return ds;
}

}  // namespace

namespace {

// all rational roots of a squarefree primitive integer polynomial, found by
// root enumeration mod a prime, Hensel lifting and rational reconstruction;
// every candidate is verified exactly before acceptance
std::vector<Rat> roots_by_lifting(const std::vector<mpz_class>& z) {
    int n = (int)z.size() - 1;
    auto eval_mod = [&](const mpz_class& x, const mpz_class& M) {
        mpz_class acc = 0;
        for (int i = n; i >= 0; --i) acc = (acc * x + z[i]) % M;
        return mpz_class((acc % M + M) % M);
    };
    auto deriv_mod = [&](const mpz_class& x, const mpz_class& M) {
        mpz_class acc = 0;
        for (int i = n; i >= 1; --i) acc = (acc * x + i * z[i]) % M;
        return mpz_class((acc % M + M) % M);
    };
    // numerators divide z[0], denominators divide z[n]
    mpz_class B = abs(z[0]) > abs(z[n]) ? abs(z[0]) : abs(z[n]);
    if (B == 0) throw error("rational_roots: internal zero bound");

    const long primes[] = {10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079};
    std::vector<Rat> out;
    for (long pl : primes) {
        mpz_class p(pl);
        if (z[n] % p == 0) continue;
        // collect simple roots mod p; a prime where some rational root is not
        // simple (disc divisible by p) is skipped for a later one
        std::vector<mpz_class> roots_p;
        bool bad = false;
        for (long r = 0; r < pl; ++r) {
            mpz_class rr(r);
            if (eval_mod(rr, p) == 0) {
                if (deriv_mod(rr, p) == 0) { bad = true; break; }
                roots_p.push_back(rr);
            }
        }
        if (bad) continue;
        // lift each root to modulus M > 2 B^2, then reconstruct
        mpz_class M = p;
        mpz_class target = 2 * B * B + 1;
        std::vector<mpz_class> lifted = roots_p;
        while (M < target) {
            mpz_class M2 = M * M;
            for (auto& r : lifted) {
                mpz_class fr = eval_mod(r, M2);
                mpz_class dr = deriv_mod(r, M2);
                mpz_class dinv;
                if (mpz_invert(dinv.get_mpz_t(), dr.get_mpz_t(), M2.get_mpz_t()) == 0)
                    throw error("rational_roots: lifting derivative not invertible");
                r = ((r - fr * dinv) % M2 + M2) % M2;
            }
            M = M2;
        }
        for (const auto& r : lifted) {
            // rational reconstruction: p/q = r mod M with |p|, |q| <= B
            mpz_class r0 = M, r1 = r, s0 = 0, s1 = 1;
            while (r1 > B) {
                mpz_class q = r0 / r1;
                mpz_class r2 = r0 - q * r1, s2 = s0 - q * s1;
                r0 = r1; r1 = r2; s0 = s1; s1 = s2;
            }
            if (s1 == 0) continue;
            Rat cand(mpq_class(r1, s1));
            // exact verification against the integer model
            mpq_class acc = 0;
            for (int i = n; i >= 0; --i) acc = acc * cand.raw() + mpq_class(z[i]);
            if (acc == 0 && std::find(out.begin(), out.end(), cand) == out.end())
                out.push_back(cand);
        }
        return out;
    }
    throw error("rational_roots: no usable prime found");
}

}  // namespace

std::vector<Rat> rational_roots(const RatPoly& p) {
    std::vector<Rat> roots;
    if (p.is_zero()) throw error("rational_roots: zero polynomial");
    RatPoly q = p;
    // strip x^k
    size_t shift = 0;
    while (shift < q.c.size() && q.c[shift].is_zero()) ++shift;
    if (shift) {
        roots.push_back(Rat(0));
        q.c.erase(q.c.begin(), q.c.begin() + shift);
    }
    if (q.deg() < 1) return roots;
    // squarefree part keeps every root and makes mod-p roots simple
    q = q.monic();
    {
        RatPoly d;
        d.c.resize(q.c.size() > 1 ? q.c.size() - 1 : 0);
        for (size_t i = 1; i < q.c.size(); ++i) d.c[i - 1] = q.c[i] * Rat((long)i);
        d.trim();
        RatPoly g = gcd(q, d);
        if (g.deg() >= 1) {
            RatPoly quo, rem;
            RatPoly::divmod(q, g, quo, rem);
            q = quo;
        }
    }
    if (q.deg() < 1) return roots;
    for (const Rat& r : roots_by_lifting(integer_model(q)))
        roots.push_back(r);
    return roots;
}

// ---------------------------------------------------------- NumberField

namespace {

// reducibility probe for monic min polys, to the extent the artifact needs:
// rational roots for every degree, and the quadratic-factor sweep for
// degree 4 (integer coefficients bounded through the Gauss lemma)
bool has_proper_factor(const RatPoly& m) {
    if (m.deg() <= 1) return false;
    if (!rational_roots(m).empty()) return true;
    if (m.deg() != 4) return false;

    auto z = integer_model(m);  // degree 4, content 1
    // Cauchy bound on root magnitude, as a rational
    Rat lead(mpz_class(abs(z[4])));
    Rat maxq(0);
    for (int i = 0; i < 4; ++i) {
        Rat q = Rat(mpz_class(abs(z[i]))) / lead;
        if (q > maxq) maxq = q;
    }
    Rat bound = Rat(1) + maxq;
    for (const auto& A : positive_divisors(z[4])) {
        for (const auto& Cd : positive_divisors(z[0])) {
            for (int sc : {1, -1}) {
                mpz_class C = sc * Cd;
                // |B| <= 2*A*bound
                Rat blim = Rat(mpz_class(2 * A)) * bound;
                mpz_class bmax = blim.num() / blim.den() + 1;
                for (mpz_class B = -bmax; B <= bmax; ++B) {
                    RatPoly f(std::vector<Rat>{Rat(C), Rat(B), Rat(A)});
                    RatPoly q, r;
                    RatPoly::divmod(m, f, q, r);
                    if (r.is_zero()) return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

NumberField::NumberField(RatPoly m, std::string g)
    : min_(std::move(m)), deg_(min_.deg()), gen_(std::move(g)) {}

std::shared_ptr<const NumberField> NumberField::make(RatPoly min_poly,
                                                     std::string gen_symbol) {
    min_poly.trim();
    if (min_poly.deg() < 1 || min_poly.deg() > 8)
        throw error("NumberField: degree must be in 1..8");
    if (!min_poly.lead().is_one())
        throw error("NumberField: min_poly must be monic");
    if (has_proper_factor(min_poly))
        throw error("NumberField: min_poly is reducible over Q");
    return std::shared_ptr<const NumberField>(
        new NumberField(std::move(min_poly), std::move(gen_symbol)));
}

std::shared_ptr<const NumberField> NumberField::rationals() {
    static std::shared_ptr<const NumberField> qq(
        new NumberField(RatPoly(std::vector<Rat>{Rat(0), Rat(1)}), "r"));
    return qq;
}

bool NumberField::same_as(const NumberField& o) const {
    if (this == &o) return true;
    if (deg_ != o.deg_) return false;
    return min_.c == o.min_.c;
}

// --------------------------------------------------------------- NFElem

NFElem::NFElem(const Rat& r) : field_(NumberField::rationals()), c_{r} {}

NFElem::NFElem(FieldPtr f, std::vector<Rat> coeffs) : field_(std::move(f)) {
    if (!field_) throw error("NFElem: null field");
    if ((int)coeffs.size() > field_->degree()) {
        // reduce mod min_poly
        RatPoly p(std::move(coeffs));
        RatPoly q, r;
        RatPoly::divmod(p, field_->min_poly(), q, r);
        coeffs = std::move(r.c);
    }
    coeffs.resize(field_->degree());
    c_ = std::move(coeffs);
}

NFElem NFElem::zero(FieldPtr f) { return NFElem(std::move(f), {}); }

NFElem NFElem::one(FieldPtr f) { return NFElem(std::move(f), {Rat(1)}); }

NFElem NFElem::generator(FieldPtr f) {
    return NFElem(std::move(f), {Rat(0), Rat(1)});
}

NFElem NFElem::from_rat(FieldPtr f, const Rat& r) {
    return NFElem(std::move(f), {r});
}

bool NFElem::is_zero() const {
    for (const Rat& q : c_)
        if (!q.is_zero()) return false;
    return true;
}

bool NFElem::is_one() const {
    if (c_.empty() || !c_[0].is_one()) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool NFElem::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rat NFElem::rat_value() const {
    if (!is_rational()) throw error("NFElem: not a rational value");
    return c_.empty() ? Rat(0) : c_[0];
}

void NFElem::ensure(const NFElem& o, const char* op) const {
    if (!field_ || !o.field_) throw error(std::string("NFElem: null field in ") + op);
    if (!field_->same_as(*o.field_))
        throw error(std::string("NFElem: field mismatch in ") + op);
}

NFElem NFElem::operator-() const {
    NFElem r = *this;
    for (Rat& q : r.c_) q = -q;
    return r;
}

NFElem NFElem::operator+(const NFElem& o) const {
    ensure(o, "add");
    NFElem r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

NFElem NFElem::operator-(const NFElem& o) const {
    ensure(o, "sub");
    NFElem r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

NFElem NFElem::operator*(const NFElem& o) const {
    ensure(o, "mul");
    size_t d = c_.size();
    std::vector<Rat> prod(2 * d - 1);
    for (size_t i = 0; i < d; ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < d; ++j) {
            if (o.c_[j].is_zero()) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    return NFElem(field_, std::move(prod));
}

NFElem NFElem::inv() const {
    if (is_zero()) throw error("NFElem: division by zero");
    RatPoly a{std::vector<Rat>(c_)};
    RatPoly g, u, v;
    gcdext(a, field_->min_poly(), g, u, v);
    if (g.deg() != 0)
        throw error("NFElem: non-invertible residue (min_poly not irreducible?)");
    // u*a = g mod m, g constant 1 after normalization
    return NFElem(field_, std::move(u.c));
}

NFElem NFElem::operator/(const NFElem& o) const {
    ensure(o, "div");
    return *this * o.inv();
}

NFElem NFElem::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    NFElem acc = NFElem::one(field_ ? field_ : NumberField::rationals());
    NFElem base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool NFElem::operator==(const NFElem& o) const {
    if (!field_ && !o.field_) return true;
    const NFElem* a = this;
    NFElem tmp;
    if (!field_) { tmp = NFElem(o.field_, {}); a = &tmp; }
    const NFElem* b = &o;
    NFElem tmp2;
    if (!o.field_) { tmp2 = NFElem(field_, {}); b = &tmp2; }
    a->ensure(*b, "eq");
    return a->c_ == b->c_;
}

std::string NFElem::str() const {
    if (!field_ || is_rational()) return (c_.empty() ? Rat(0) : c_[0]).str();
    std::ostringstream os;
    bool first = true;
    const std::string& g = field_->gen();
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rat q = c_[i];
        if (first) {
            if (q.sign() < 0) { os << "-"; q = -q; }
        } else {
            os << (q.sign() < 0 ? "-" : "+");
            if (q.sign() < 0) q = -q;
        }
        first = false;
        if (i == 0) {
            os << q.str();
        } else {
            if (!q.is_one()) os << q.str() << "*";
            os << g;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

size_t NFElem::hash() const {
    size_t h = 14695981039346656037ull;
    for (const Rat& q : c_) {
        h ^= q.hash();
        h *= 1099511628211ull;
    }
    return h;
}

size_t NFElem::bits() const {
    size_t b = 0;
    for (const Rat& q : c_) b += q.bits();
    return b;
}

// --------------------------------------------------------------- embed

NFElem nf_embed(const NFElem& a, const FieldPtr& target, const NFElem& gen_image) {
    const FieldPtr& src = a.field();
    if (!src) throw error("nf_embed: element has no field");
    if (!src->is_rational()) {
        // gen_image must kill the source min_poly
        NFElem acc = NFElem::zero(target);
        const RatPoly& m = src->min_poly();
        for (size_t i = m.c.size(); i-- > 0;)
            acc = acc * gen_image + NFElem::from_rat(target, m.c[i]);
        if (!acc.is_zero())
            throw error("nf_embed: gen_image is not a root of the source min_poly");
    }
    NFElem r = NFElem::zero(target);
    const auto& cs = a.coeffs();
    for (size_t i = cs.size(); i-- > 0;)
        r = r * gen_image + NFElem::from_rat(target, cs[i]);
    return r;
}

// ---------------------------------------------------------------- sqrt

namespace {

// sqrt in a quadratic field given as alpha + beta*sqrt(D) with rational
// alpha, beta and D the (non-square) discriminant-like radicand
std::optional<std::pair<Rat, Rat>> sqrt_quadratic(const Rat& alpha, const Rat& beta,
                                                  const Rat& D) {
    if (beta.is_zero()) {
        if (auto u = rat_sqrt(alpha)) return std::make_pair(*u, Rat(0));
        if (!D.is_zero()) {
            Rat q = alpha / D;
            if (auto v = rat_sqrt(q)) return std::make_pair(Rat(0), *v);
        }
        return std::nullopt;
    }
    // (u + v sqrt(D))^2 = u^2 + D v^2 + 2uv sqrt(D)
    Rat N = alpha * alpha - D * beta * beta;
    auto sn = rat_sqrt(N);
    if (!sn) return std::nullopt;
    for (int s : {1, -1}) {
        Rat usq = (alpha + (s > 0 ? *sn : -*sn)) / Rat(2);
        if (auto u = rat_sqrt(usq)) {
            if (u->is_zero()) continue;
            Rat v = beta / (Rat(2) * *u);
            return std::make_pair(*u, v);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<NFElem> nf_sqrt(const NFElem& a) {
    const FieldPtr& f = a.field();
    if (!f) return nf_sqrt(NFElem(Rat(0)));
    int d = f->degree();
    const auto& c = a.coeffs();

    if (d == 1) {
        if (auto r = rat_sqrt(c.empty() ? Rat(0) : c[0]))
            return NFElem::from_rat(f, *r);
        return std::nullopt;
    }

    if (d == 2) {
        // t^2 + p t + q: write elements over sqrt(D), D = p^2 - 4q
        Rat p = f->min_poly().at(1), q = f->min_poly().at(0);
        Rat D = p * p - Rat(4) * q;
        // a = c0 + c1 t = (c0 - c1 p/2) + (c1/2) sqrt(D)
        Rat alpha = c[0] - c[1] * p / Rat(2);
        Rat beta = c[1] / Rat(2);
        auto uv = sqrt_quadratic(alpha, beta, D);
        if (!uv) return std::nullopt;
        // back to the t basis: sqrt(D) = 2t + p
        auto [u, v] = *uv;
        return NFElem(f, {u + v * p, Rat(2) * v});
    }

    if (d == 4) {
        const RatPoly& m = f->min_poly();
        if (!m.at(1).is_zero() || !m.at(2).is_zero() || !m.at(3).is_zero())
            throw error("nf_sqrt: quartic fields supported only with binomial min_poly");
        Rat cc = -m.at(0);  // t^4 = cc
        // subfield F = Q(w), w = t^2, w^2 = cc; a = alpha + beta t, alpha,beta in F
        FieldPtr F = NumberField::make(RatPoly(std::vector<Rat>{-cc, Rat(0), Rat(1)}), "w");
        NFElem alpha(F, {c[0], c[2]});
        NFElem beta(F, {c[1], c[3]});
        NFElem w = NFElem::generator(F);
        auto lift = [&](const NFElem& u, const NFElem& v) {
            // u + v t with u = u0+u1 w, v = v0+v1 w  ->  coeffs in t
            const auto& uc = u.coeffs();
            const auto& vc = v.coeffs();
            return NFElem(f, {uc[0], vc[0], uc[1], vc[1]});
        };
        if (beta.is_zero()) {
            if (auto u = nf_sqrt(alpha)) return lift(*u, NFElem::zero(F));
            NFElem q = alpha / w;
            if (auto v = nf_sqrt(q)) return lift(NFElem::zero(F), *v);
            return std::nullopt;
        }
        // s = u + v t, u^2 + w v^2 = alpha, 2uv = beta
        NFElem N = alpha * alpha - w * beta * beta;
        auto sn = nf_sqrt(N);
        if (!sn) return std::nullopt;
        NFElem two = NFElem::from_rat(F, Rat(2));
        for (int s : {1, -1}) {
            NFElem usq = (alpha + (s > 0 ? *sn : -*sn)) / two;
            if (auto u = nf_sqrt(usq)) {
                if (u->is_zero()) continue;
                NFElem v = beta / (two * *u);
                NFElem cand = lift(*u, v);
                if (cand * cand == a) return cand;
            }
        }
        return std::nullopt;
    }

    throw error("nf_sqrt: unsupported field shape (degree " + std::to_string(d) + ")");
}

}  // namespace arith
}  // namespace cag
