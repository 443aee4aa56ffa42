#ifndef CAG_POLY_HPP
#define CAG_POLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cag/numberfield.hpp"

namespace cag {
namespace poly {

using arith::FieldPtr;
using arith::NFElem;
using arith::Rat;

// exponent vector; length fixed per ring
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(size_t n) : e(n, 0) {}
    explicit Monomial(std::vector<int> v) : e(std::move(v)) {}

    int total_degree() const;
    long weighted_degree(const std::vector<long>& w) const;
    bool divides(const Monomial& o) const;
    Monomial mul(const Monomial& o) const;
    Monomial div(const Monomial& o) const;  // requires divides
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;
    bool is_one() const;
    bool operator==(const Monomial& o) const { return e == o.e; }
};

enum class OrderKind { lex, grevlex, block };

struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    size_t block_split = 0;  // first block = variables [0, block_split)

    static MonomialOrder Lex() { return {OrderKind::lex, 0}; }
    static MonomialOrder Grevlex() { return {OrderKind::grevlex, 0}; }
    // grevlex within each block; first block dominates (elimination order)
    static MonomialOrder Block(size_t k) { return {OrderKind::block, k}; }

    // -1 if a < b, 0 if equal, +1 if a > b
    int cmp(const Monomial& a, const Monomial& b) const;
    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && (kind != OrderKind::block || block_split == o.block_split);
    }
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

class PolyRing {
  public:
    static RingPtr make(FieldPtr field, std::vector<std::string> vars,
                        MonomialOrder order = MonomialOrder::Grevlex());

    const FieldPtr& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const MonomialOrder& order() const { return order_; }
    size_t nvars() const { return vars_.size(); }
    int var_index(const std::string& name) const;  // -1 if absent

    bool same_as(const PolyRing& o) const;
    // same field and vars, any order
    bool compatible(const PolyRing& o) const;

  private:
    PolyRing(FieldPtr f, std::vector<std::string> v, MonomialOrder o)
        : field_(std::move(f)), vars_(std::move(v)), order_(o) {}
    FieldPtr field_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

struct Term {
    Monomial m;
    NFElem c;
};

// sparse multivariate polynomial; terms strictly descending in the ring order
class MultiPoly {
  public:
    MultiPoly() = default;
    explicit MultiPoly(RingPtr r) : ring_(std::move(r)) {}
    MultiPoly(RingPtr r, std::vector<Term> terms);  // sorts and combines

    static MultiPoly zero(RingPtr r) { return MultiPoly(std::move(r)); }
    static MultiPoly constant(RingPtr r, const NFElem& c);
    static MultiPoly constant(RingPtr r, const Rat& c);
    static MultiPoly variable(RingPtr r, size_t i);
    static MultiPoly monomial(RingPtr r, Monomial m, NFElem c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
    size_t nterms() const { return t_.size(); }
    const Term& lead() const;
    int total_degree() const;  // -1 for zero
    int degree_in(size_t var) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly pow(long n) const;
    MultiPoly scaled(const NFElem& s) const;
    MultiPoly monic() const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // *this += c * x^m * g ; the workhorse of polynomial reduction
    void axpy(const NFElem& c, const Monomial& m, const MultiPoly& g);

    MultiPoly derivative(size_t var) const;
    NFElem evaluate(const std::vector<NFElem>& point) const;

    // coefficient of var^k, as a polynomial with var-exponent zero
    MultiPoly coeff_of(size_t var, int k) const;
    bool depends_on(size_t var) const { return degree_in(var) > 0; }

    std::optional<int> homogeneous_degree() const;
    std::optional<long> weighted_homogeneous_degree(const std::vector<long>& w) const;

    // move to another ring with the same field; variables matched by name
    MultiPoly to_ring(const RingPtr& target) const;

    std::string str() const;
    size_t coeff_bits() const;

  private:
    RingPtr ring_;
    std::vector<Term> t_;
    void normalize();
};

// simultaneous substitution; unassigned variables map to themselves (which
// must then exist in the target ring by name)
MultiPoly substitute(const MultiPoly& f,
                     const std::map<std::string, MultiPoly>& assignments);
MultiPoly substitute(const MultiPoly& f,
                     const std::map<std::string, NFElem>& values);

std::vector<MultiPoly> jacobian(const MultiPoly& f);

// exact division: returns f/g if g divides f, none otherwise
std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g);

// f / g^k for the maximal k with g^k | f
std::pair<MultiPoly, int> divide_out(const MultiPoly& f, const MultiPoly& g);

// Sylvester resultant in var, computed by fraction-free Bareiss elimination
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, size_t var);

// gcd of multivariate polynomials by primitive PRS recursion
MultiPoly gcd_multi(const MultiPoly& f, const MultiPoly& g);

// dense univariate polynomial over a number field, lowest degree first
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(FieldPtr f) : field_(std::move(f)) {}
    UniPoly(FieldPtr f, std::vector<NFElem> coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<NFElem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    NFElem at(size_t i) const;
    const NFElem& lead() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const NFElem& s) const;
    UniPoly monic() const;
    UniPoly derivative() const;
    NFElem eval(const NFElem& x) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);

    // view of a MultiPoly that involves only `var`
    static UniPoly from_multipoly(const MultiPoly& f, size_t var);
    MultiPoly to_multipoly(const RingPtr& ring, size_t var) const;

  private:
    FieldPtr field_;
    std::vector<NFElem> c_;
    void trim();
};

UniPoly gcd_uni(UniPoly a, UniPoly b);          // monic gcd via Euclid
UniPoly squarefree_part(const UniPoly& f);      // f / gcd(f, f')

// roots of f lying in its coefficient field: rational roots by divisor
// bounds, then quadratic factors split with nf_sqrt. Residual factors of
// higher degree are returned unsolved (monic, squarefree).
struct FieldRoots {
    std::vector<std::pair<NFElem, int>> roots;  // root, multiplicity
    std::vector<UniPoly> residual;
};
FieldRoots field_roots(const UniPoly& f);

// binary quartic a x^4 + b x^3 z + c x^2 z^2 + d x z^3 + e z^4
struct BinaryQuartic {
    NFElem a, b, c, d, e;

    NFElem inv_i() const;  // 12ae - 3bd + c^2
    NFElem inv_j() const;  // 27ad^2 + 27b^2e - 27bcd + 8c^3
    // true iff some linear form divides to order >= 3 (root at infinity included)
    bool has_triple_root() const;
};

// homogeneous binary form of fixed degree in (s, t); c[k] = coeff of s^k t^(d-k)
struct BinaryForm {
    int degree = 0;
    std::vector<NFElem> c;  // length degree+1

    // multiplicity of the root (s0 : t0)
    int root_multiplicity(const NFElem& s0, const NFElem& t0) const;
    UniPoly dehomogenized(const FieldPtr& f) const;  // t = 1
};

}  // namespace poly
}  // namespace cag

#endif
