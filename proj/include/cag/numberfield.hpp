#ifndef CAG_NUMBERFIELD_HPP
#define CAG_NUMBERFIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cag/rational.hpp"

namespace cag {
namespace arith {

// dense univariate polynomial over Rat, lowest degree first;
// internal workhorse for min-poly arithmetic and the extended Euclid
struct RatPoly {
    std::vector<Rat> c;

    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> cs) : c(std::move(cs)) { trim(); }

    void trim();
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    Rat lead() const { return c.back(); }
    Rat at(size_t i) const { return i < c.size() ? c[i] : Rat(); }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly scaled(const Rat& s) const;
    RatPoly monic() const;
    Rat eval(const Rat& x) const;

    // euclidean division, field coefficients
    static void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
};

RatPoly gcd(RatPoly a, RatPoly b);
// g = gcd(a,b) monic, with u*a + v*b = g
void gcdext(const RatPoly& a, const RatPoly& b, RatPoly& g, RatPoly& u, RatPoly& v);

// roots in QQ of a nonzero RatPoly, found by divisor bounds on the
// primitive integer model
std::vector<Rat> rational_roots(const RatPoly& p);

// Q[t]/(m(t)) for a monic irreducible m of degree 1..8.
// Degree-1 fields represent QQ itself (m = t).
class NumberField {
  public:
    // min_poly given lowest-degree-first INCLUDING the leading 1
    static std::shared_ptr<const NumberField> make(RatPoly min_poly,
                                                   std::string gen_symbol = "r");
    static std::shared_ptr<const NumberField> rationals();

    int degree() const { return deg_; }
    const RatPoly& min_poly() const { return min_; }
    const std::string& gen() const { return gen_; }
    bool is_rational() const { return deg_ == 1; }

    bool same_as(const NumberField& o) const;

  private:
    NumberField(RatPoly m, std::string g);
    RatPoly min_;
    int deg_;
    std::string gen_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// element of a number field; unique reduced residue mod min_poly
class NFElem {
  public:
    NFElem() = default;  // zero of QQ
    explicit NFElem(const Rat& r);
    NFElem(FieldPtr f, std::vector<Rat> coeffs);
    static NFElem zero(FieldPtr f);
    static NFElem one(FieldPtr f);
    static NFElem generator(FieldPtr f);
    static NFElem from_rat(FieldPtr f, const Rat& r);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;  // all higher coefficients zero
    Rat rat_value() const;     // requires is_rational()

    NFElem operator-() const;
    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator*(const NFElem& o) const;
    NFElem operator/(const NFElem& o) const;
    NFElem inv() const;
    NFElem pow(long e) const;

    bool operator==(const NFElem& o) const;
    bool operator!=(const NFElem& o) const { return !(*this == o); }

    std::string str() const;
    size_t hash() const;
    size_t bits() const;

  private:
    FieldPtr field_;        // null means plain QQ zero-initialized
    std::vector<Rat> c_;    // length = degree, reduced
    void ensure(const NFElem& o, const char* op) const;
};

// ring-homomorphic transport into target, sending the source generator to
// gen_image (checked to be a root of the source min_poly)
NFElem nf_embed(const NFElem& a, const FieldPtr& target, const NFElem& gen_image);

// exact square root inside the field, or none. Handles QQ, any quadratic
// field, and quartic fields with binomial min_poly t^4 - c (the shapes the
// scenario corpus uses); other shapes throw.
std::optional<NFElem> nf_sqrt(const NFElem& a);

}  // namespace arith
}  // namespace cag

#endif
