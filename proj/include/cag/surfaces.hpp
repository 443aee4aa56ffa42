#ifndef CAG_SURFACES_HPP
#define CAG_SURFACES_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cag/rational.hpp"

namespace cag {
namespace surfaces {

using arith::Rat;

// cyclic quotient singularity of type 1/n (1, q)
struct CycQuotSing {
    long n, q;
};

// Hirzebruch-Jung chain: curve self-intersections are -b[i], each b[i] >= 2
struct ResolutionChain {
    std::vector<long> b;
    size_t length() const { return b.size(); }
    Rat continued_fraction() const;  // re-expand to n/q
};

ResolutionChain hj_resolution(long n, long q);

// d1*d2 / (w0*w1*w2)
Rat weighted_bezout(long d1, long d2, const std::array<long, 3>& w);

// Numerical model of a normal surface with cyclic quotient singularities:
// chains per singularity, plus named curves carrying resolution-side data
// (self-intersection and K-degree of the strict transform, and the local
// intersection numbers u against every exceptional curve).
class NormalSurfaceModel {
  public:
    explicit NormalSurfaceModel(std::vector<CycQuotSing> sings);

    const std::vector<CycQuotSing>& singularities() const { return sings_; }
    const std::vector<ResolutionChain>& chains() const { return chains_; }
    size_t exceptional_count() const { return nexc_; }

    // exceptional pairing  (sum over chains of a^T Int b, Int negative definite)
    Rat exc_pairing(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
    // blockwise solve of M a = u with M = -Int
    std::vector<Rat> solve_u(const std::vector<long>& u) const;
    // discrepancy coefficients d with K_Z = p*K + sum d_i C_i
    const std::vector<Rat>& discrepancies() const { return disc_; }

    // named curves (resolution-side data)
    void add_curve(const std::string& name, Rat res_self, Rat res_k, std::vector<long> u);
    void set_res_pair(const std::string& a, const std::string& b, Rat value);
    void set_k2_res(Rat v) { k2_res_ = v; has_k2_ = true; }

    bool has_curve(const std::string& name) const { return curves_.count(name) > 0; }
    const std::vector<long>& u_of(const std::string& name) const;
    const std::vector<Rat>& coeffs_of(const std::string& name) const;  // a = M^{-1} u
    Rat res_self(const std::string& name) const;
    Rat res_k(const std::string& name) const;
    Rat res_pair(const std::string& a, const std::string& b) const;

    // Mumford numbers on the singular surface
    Rat self_singular(const std::string& name) const;    // D^2 = Dt^2 + a.u
    Rat k_singular(const std::string& name) const;       // K.D = K_Z.Dt - d.u
    Rat pair_singular(const std::string& a, const std::string& b) const;
    Rat k2_res() const;
    Rat k2_singular() const;  // K^2 = K_Z^2 - d.Int.d

    // e(Z) = e(singular surface) - #sing + sum (chain length + 1)
    long euler_resolution(long euler_singular) const;

  private:
    struct Curve {
        Rat res_self, res_k;
        std::vector<long> u;
        std::vector<Rat> a;
    };
    std::vector<CycQuotSing> sings_;
    std::vector<ResolutionChain> chains_;
    size_t nexc_ = 0;
    std::vector<Rat> disc_;
    std::map<std::string, Curve> curves_;
    std::map<std::pair<std::string, std::string>, Rat> pair_res_;
    Rat k2_res_;
    bool has_k2_ = false;
    const Curve& curve(const std::string& name) const;
};

// exceptional coefficients of the Mumford pullback of a curve with local
// intersections u; also usable as a raw divisor class
struct DivisorClass {
    std::vector<Rat> a;
};
DivisorClass mumford_pullback(const NormalSurfaceModel& m, const std::vector<long>& u);
DivisorClass canonical_class(const NormalSurfaceModel& m);

// resolution-side pairing of two singular-surface classes given their
// singular pairing:  Dt1 . Dt2 = D1.D2 - a1 . u2
Rat mumford_resolution_pair(const NormalSurfaceModel& m, Rat singular_pair,
                            const std::vector<long>& u1, const std::vector<long>& u2);

// adjunction-constrained enumeration: all u >= 0 supported on the touched
// chains with sum(u) <= bound and K_Z.Dt + Dt^2 = -2
struct AdjunctionSolution {
    std::vector<long> u;
    Rat res_self;  // Dt^2
    Rat res_k;     // K_Z . Dt
};
std::vector<AdjunctionSolution> adjunction_search(const NormalSurfaceModel& m,
                                                  Rat sing_self, Rat sing_k,
                                                  const std::vector<bool>& touches,
                                                  long bound = 6);

// quotient invariants
// K_Y^2 = (K_X - B)^2 / N for a degree-N quotient with ramification B
Rat quotient_k2(long group_order, Rat k_up_sq, Rat k_up_dot_b, Rat b_sq);
// e(X/G) = (1/|G|) sum over elements of e(Fix(g)), given (count, e) pairs
Rat quotient_euler(long group_order, const std::vector<std::pair<long, long>>& fixed_data);
// Noether: c2 = 12 chi - K^2
Rat noether_c2(Rat chi, Rat k2);

}  // namespace surfaces
}  // namespace cag

#endif
