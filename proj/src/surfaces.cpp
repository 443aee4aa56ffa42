#include "cag/surfaces.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cag {
namespace surfaces {

Rat ResolutionChain::continued_fraction() const {
    // b1 - 1/(b2 - 1/(...))
    if (b.empty()) throw error("ResolutionChain: empty chain");
    Rat v(b.back());
    for (size_t i = b.size() - 1; i-- > 0;) v = Rat(b[i]) - v.inv();
    return v;
}

ResolutionChain hj_resolution(long n, long q) {
    if (!(0 < q && q < n)) throw error("hj_resolution: need 0 < q < n");
    if (std::gcd(n, q) != 1) throw error("hj_resolution: n, q not coprime");
    ResolutionChain c;
    while (q > 0) {
        long bi = (n + q - 1) / q;  // ceil(n/q)
        c.b.push_back(bi);
        long n2 = q, q2 = bi * q - n;
        n = n2;
        q = q2;
    }
    for (long bi : c.b)
        if (bi < 2) throw error("hj_resolution: chain entry below 2");
    return c;
}

Rat weighted_bezout(long d1, long d2, const std::array<long, 3>& w) {
    if (w[0] <= 0 || w[1] <= 0 || w[2] <= 0)
        throw error("weighted_bezout: weights must be positive");
    return Rat(d1) * Rat(d2) / Rat(w[0] * w[1] * w[2]);
}

// -------------------------------------------------------------- the model

namespace {

// positive definite check by leading principal minors (Sylvester)
void assert_positive_definite(const std::vector<std::vector<Rat>>& M) {
    size_t n = M.size();
    for (size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<Rat>> A(k, std::vector<Rat>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) A[i][j] = M[i][j];
        Rat det(1);
        for (size_t c = 0; c < k; ++c) {
            size_t piv = c;
            while (piv < k && A[piv][c].is_zero()) ++piv;
            if (piv == k) { det = Rat(0); break; }
            if (piv != c) { std::swap(A[piv], A[c]); det = -det; }
            det *= A[c][c];
            Rat inv = A[c][c].inv();
            for (size_t i = c + 1; i < k; ++i) {
                Rat f = A[i][c] * inv;
                for (size_t j = c; j < k; ++j) A[i][j] -= f * A[c][j];
            }
        }
        if (!(det > Rat(0)))
            throw error("NormalSurfaceModel: exceptional block is not negative definite");
    }
}

std::vector<std::vector<Rat>> minus_intersection_matrix(const ResolutionChain& c) {
    size_t n = c.length();
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        M[i][i] = Rat(c.b[i]);
        if (i + 1 < n) {
            M[i][i + 1] = Rat(-1);
            M[i + 1][i] = Rat(-1);
        }
    }
    return M;
}

std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> A, std::vector<Rat> rhs) {
    size_t n = A.size();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && A[piv][c].is_zero()) ++piv;
        if (piv == n) throw error("solve_linear: singular matrix");
        std::swap(A[piv], A[c]);
        std::swap(rhs[piv], rhs[c]);
        Rat inv = A[c][c].inv();
        for (size_t j = c; j < n; ++j) A[c][j] *= inv;
        rhs[c] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == c || A[i][c].is_zero()) continue;
            Rat f = A[i][c];
            for (size_t j = c; j < n; ++j) A[i][j] -= f * A[c][j];
            rhs[i] -= f * rhs[c];
        }
    }
    return rhs;
}

}  // namespace

NormalSurfaceModel::NormalSurfaceModel(std::vector<CycQuotSing> sings)
    : sings_(std::move(sings)) {
    for (const auto& s : sings_) {
        ResolutionChain c = hj_resolution(s.n, s.q);
        assert_positive_definite(minus_intersection_matrix(c));
        nexc_ += c.length();
        chains_.push_back(std::move(c));
    }
    // discrepancies solve Int d = (b_j - 2), i.e. K_Z.C_j = -2 - C_j^2
    for (const auto& c : chains_) {
        auto M = minus_intersection_matrix(c);
        std::vector<Rat> rhs(c.length());
        for (size_t j = 0; j < c.length(); ++j) rhs[j] = Rat(-(c.b[j] - 2));
        std::vector<Rat> d = solve_linear(M, rhs);
        for (auto& x : d) disc_.push_back(x);
    }
}

Rat NormalSurfaceModel::exc_pairing(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
    if (a.size() != nexc_ || b.size() != nexc_) throw error("exc_pairing: wrong vector size");
    Rat acc(0);
    size_t off = 0;
    for (const auto& c : chains_) {
        size_t n = c.length();
        for (size_t i = 0; i < n; ++i) {
            acc += a[off + i] * b[off + i] * Rat(-c.b[i]);
            if (i + 1 < n) acc += a[off + i] * b[off + i + 1] + a[off + i + 1] * b[off + i];
        }
        off += n;
    }
    return acc;
}

std::vector<Rat> NormalSurfaceModel::solve_u(const std::vector<long>& u) const {
    if (u.size() != nexc_) throw error("solve_u: wrong vector size");
    std::vector<Rat> a;
    a.reserve(nexc_);
    size_t off = 0;
    for (const auto& c : chains_) {
        auto M = minus_intersection_matrix(c);
        std::vector<Rat> rhs(c.length());
        for (size_t i = 0; i < c.length(); ++i) rhs[i] = Rat(u[off + i]);
        for (auto& x : solve_linear(M, rhs)) a.push_back(x);
        off += c.length();
    }
    return a;
}

void NormalSurfaceModel::add_curve(const std::string& name, Rat res_self, Rat res_k,
                                   std::vector<long> u) {
    if (curves_.count(name)) throw error("add_curve: duplicate curve " + name);
    for (long x : u)
        if (x < 0) throw error("add_curve: negative local intersection");
    Curve c{res_self, res_k, u, solve_u(u)};
    curves_.emplace(name, std::move(c));
}

void NormalSurfaceModel::set_res_pair(const std::string& a, const std::string& b, Rat value) {
    curve(a);
    curve(b);
    pair_res_[{std::min(a, b), std::max(a, b)}] = value;
}

const NormalSurfaceModel::Curve& NormalSurfaceModel::curve(const std::string& name) const {
    auto it = curves_.find(name);
    if (it == curves_.end()) throw error("NormalSurfaceModel: unknown curve " + name);
    return it->second;
}

const std::vector<long>& NormalSurfaceModel::u_of(const std::string& name) const {
    return curve(name).u;
}
const std::vector<Rat>& NormalSurfaceModel::coeffs_of(const std::string& name) const {
    return curve(name).a;
}
Rat NormalSurfaceModel::res_self(const std::string& name) const { return curve(name).res_self; }
Rat NormalSurfaceModel::res_k(const std::string& name) const { return curve(name).res_k; }

Rat NormalSurfaceModel::res_pair(const std::string& a, const std::string& b) const {
    auto it = pair_res_.find({std::min(a, b), std::max(a, b)});
    if (it == pair_res_.end())
        throw error("NormalSurfaceModel: missing intersection datum " + a + "." + b);
    return it->second;
}

Rat NormalSurfaceModel::self_singular(const std::string& name) const {
    const Curve& c = curve(name);
    Rat au(0);
    for (size_t i = 0; i < nexc_; ++i) au += c.a[i] * Rat(c.u[i]);
    return c.res_self + au;
}

Rat NormalSurfaceModel::k_singular(const std::string& name) const {
    const Curve& c = curve(name);
    Rat du(0);
    for (size_t i = 0; i < nexc_; ++i) du += disc_[i] * Rat(c.u[i]);
    return c.res_k - du;
}

Rat NormalSurfaceModel::pair_singular(const std::string& a, const std::string& b) const {
    const Curve& ca = curve(a);
    const Curve& cb = curve(b);
    Rat au(0);
    for (size_t i = 0; i < nexc_; ++i) au += ca.a[i] * Rat(cb.u[i]);
    return res_pair(a, b) + au;
}

Rat NormalSurfaceModel::k2_res() const {
    if (!has_k2_) throw error("NormalSurfaceModel: K_Z^2 not set");
    return k2_res_;
}

Rat NormalSurfaceModel::k2_singular() const {
    return k2_res() - exc_pairing(disc_, disc_);
}

long NormalSurfaceModel::euler_resolution(long euler_singular) const {
    long e = euler_singular - (long)sings_.size();
    for (const auto& c : chains_) e += (long)c.length() + 1;
    return e;
}

// ----------------------------------------------------------- free wrappers

DivisorClass mumford_pullback(const NormalSurfaceModel& m, const std::vector<long>& u) {
    return {m.solve_u(u)};
}

DivisorClass canonical_class(const NormalSurfaceModel& m) {
    return {m.discrepancies()};
}

Rat mumford_resolution_pair(const NormalSurfaceModel& m, Rat singular_pair,
                            const std::vector<long>& u1, const std::vector<long>& u2) {
    auto a1 = m.solve_u(u1);
    Rat au(0);
    for (size_t i = 0; i < a1.size(); ++i) au += a1[i] * Rat(u2[i]);
    return singular_pair - au;
}

// ------------------------------------------------------- adjunction search

std::vector<AdjunctionSolution> adjunction_search(const NormalSurfaceModel& m,
                                                  Rat sing_self, Rat sing_k,
                                                  const std::vector<bool>& touches,
                                                  long bound) {
    if (touches.size() != m.chains().size())
        throw error("adjunction_search: touches size must match chain count");
    std::vector<size_t> active;
    size_t off = 0;
    for (size_t ci = 0; ci < m.chains().size(); ++ci) {
        for (size_t i = 0; i < m.chains()[ci].length(); ++i)
            if (touches[ci]) active.push_back(off + i);
        off += m.chains()[ci].length();
    }

    std::vector<AdjunctionSolution> out;
    std::vector<long> u(m.exceptional_count(), 0);
    const auto& d = m.discrepancies();

    std::function<void(size_t, long)> rec = [&](size_t idx, long remaining) {
        if (idx == active.size()) {
            auto a = m.solve_u(u);
            Rat au(0), du(0);
            for (size_t i = 0; i < u.size(); ++i) {
                au += a[i] * Rat(u[i]);
                du += d[i] * Rat(u[i]);
            }
            Rat res_self = sing_self - au;
            Rat res_k = sing_k + du;
            if (res_k + res_self == Rat(-2)) out.push_back({u, res_self, res_k});
            return;
        }
        for (long v = 0; v <= remaining; ++v) {
            u[active[idx]] = v;
            rec(idx + 1, remaining - v);
        }
        u[active[idx]] = 0;
    };
    rec(0, bound);
    return out;
}

// ------------------------------------------------------ quotient invariants

Rat quotient_k2(long group_order, Rat k_up_sq, Rat k_up_dot_b, Rat b_sq) {
    if (group_order <= 0) throw error("quotient_k2: group order must be positive");
    return (k_up_sq - Rat(2) * k_up_dot_b + b_sq) / Rat(group_order);
}

Rat quotient_euler(long group_order, const std::vector<std::pair<long, long>>& fixed_data) {
    if (group_order <= 0) throw error("quotient_euler: group order must be positive");
    long total = 0;
    Rat acc(0);
    for (auto& [count, e] : fixed_data) {
        total += count;
        acc += Rat(count) * Rat(e);
    }
    if (total != group_order)
        throw error("quotient_euler: fixed-locus data does not cover the group");
    return acc / Rat(group_order);
}

Rat noether_c2(Rat chi, Rat k2) { return Rat(12) * chi - k2; }

}  // namespace surfaces
}  // namespace cag
