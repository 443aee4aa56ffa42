#ifndef CAG_CURVES_HPP
#define CAG_CURVES_HPP

#include <optional>

#include "cag/ideals.hpp"
#include "cag/poly.hpp"

namespace cag {
namespace curves {

using arith::FieldPtr;
using arith::NFElem;
using arith::Rat;
using ideals::Budget;
using poly::BinaryForm;
using poly::MultiPoly;
using poly::RingPtr;
using poly::UniPoly;

// point of P^2; normalized so the last nonzero coordinate is 1
class ProjPoint {
  public:
    ProjPoint(NFElem x, NFElem y, NFElem z);
    const NFElem& operator[](size_t i) const { return c_[i]; }
    const FieldPtr& field() const { return c_[0].field(); }
    bool operator==(const ProjPoint& o) const;
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    std::string str() const;

  private:
    std::array<NFElem, 3> c_;
};

// projective plane curve: homogeneous nonzero form in a 3-variable ring
class PlaneCurve {
  public:
    explicit PlaneCurve(MultiPoly form);
    const MultiPoly& form() const { return f_; }
    const RingPtr& ring() const { return f_.ring(); }
    int degree() const { return deg_; }
    bool contains(const ProjPoint& p) const;
    // squarefree test through a generic chart; deterministic retries
    bool is_reduced() const;

  private:
    MultiPoly f_;
    int deg_;
};

// line through two distinct points
PlaneCurve line_through(const ProjPoint& a, const ProjPoint& b);
bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

// affine localization of a form at a point: two local coordinates (u, v)
// centered at p, plus the inverse description of the chart
struct LocalForm {
    MultiPoly f;      // in the (u, v) ring
    int chart;        // which coordinate was normalized to 1
    ProjPoint center;
};
LocalForm localize(const MultiPoly& form, const ProjPoint& p);

struct SingularLocus {
    std::vector<ProjPoint> points;
    // eliminant factors without roots in the working field
    std::vector<std::pair<std::string, UniPoly>> residual;
};
SingularLocus singular_points(const PlaneCurve& C, const Budget& budget = {});

int multiplicity_at(const PlaneCurve& C, const ProjPoint& p);
// lowest jet at p, re-expressed as a homogeneous form in the ambient ring
MultiPoly tangent_cone(const PlaneCurve& C, const ProjPoint& p);

// Fulton's recursive local intersection number; nullopt means +infinity
// (a common component passes through p)
std::optional<int> intersection_multiplicity(const PlaneCurve& C, const PlaneCurve& D,
                                             const ProjPoint& p);

int milnor_number(const PlaneCurve& C, const ProjPoint& p);

struct SingularityReport {
    ProjPoint point;
    int multiplicity;
    int milnor;
    bool is_ak;  // true: label a_k with k = milnor
    std::string label() const {
        return is_ak ? ("a" + std::to_string(milnor)) : std::string("other");
    }
};
SingularityReport classify_ade(const PlaneCurve& C, const ProjPoint& p);

PlaneCurve tangent_line(const PlaneCurve& C, const ProjPoint& p);  // p smooth on C

// restriction of C to the line through a and b: binary form in (s:t) with
// parameter value (1:0) at a and (0:1) at b
BinaryForm restrict_to_line(const PlaneCurve& C, const ProjPoint& a, const ProjPoint& b);
// restriction to a line given by its equation; parametrization chosen internally
BinaryForm restrict_to_line(const PlaneCurve& C, const PlaneCurve& L);

struct Flex {
    ProjPoint point;
    PlaneCurve tangent;
    int contact_order;
};
struct FlexSearch {
    std::vector<Flex> flexes;               // smooth field-expressible flexes
    std::vector<std::pair<std::string, UniPoly>> residual;
};
FlexSearch flexes(const PlaneCurve& C, const Budget& budget = {});

// intersection points of two curves over the working field, with Fulton
// multiplicities and a Bezout completeness audit
struct PairIntersections {
    std::vector<std::pair<ProjPoint, int>> points;
    int bezout;        // deg C * deg D
    int found_mass;    // sum of found multiplicities
    bool complete() const { return bezout == found_mass; }
    std::vector<std::pair<std::string, UniPoly>> residual;
};
PairIntersections intersect_curves(const PlaneCurve& C, const PlaneCurve& D,
                                   const Budget& budget = {});

// ---------------------------------------------------------- linear systems

struct LinearCondition {
    ProjPoint point;
    int multiplicity;                       // impose all jets of order < m
    std::optional<MultiPoly> cone;          // rank-1 quadratic cone, requires m == 2
};
struct LinearSystemSpec {
    int degree;
    std::vector<LinearCondition> conditions;
};
struct LinearSystem {
    std::vector<MultiPoly> basis;
    int dimension;  // = basis.size()
    int rank;       // rank of the condition matrix
};
LinearSystem linear_system(const LinearSystemSpec& spec, const RingPtr& ring);

// does f lie in the span of the basis (exact linear algebra)?
bool in_span(const MultiPoly& f, const std::vector<MultiPoly>& basis);
bool same_span(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b);

// ------------------------------------------------------------------- maps

struct ProjMap {
    std::vector<MultiPoly> components;  // 3 or 4, same ring, equal degree

    ProjMap(std::vector<MultiPoly> comps);
    const RingPtr& ring() const { return components[0].ring(); }
};

// substitute the map into the curve, then strip the exceptional forms
struct MappedCurve {
    PlaneCurve curve;
    std::vector<int> stripped;  // multiplicity removed per exceptional form
};
MappedCurve apply_map(const PlaneCurve& C, const ProjMap& phi,
                      const std::vector<MultiPoly>& exceptional);

// implicitization by elimination in the chart z = 1 (with a cone scaling
// variable), certified by an exact divisibility identity
MultiPoly image_curve(const ProjMap& phi, const PlaneCurve& C,
                      const std::vector<std::string>& image_vars,
                      const Budget& budget = {});
// image of the whole plane under a 4-component map (a surface in P^3)
MultiPoly image_of_plane(const ProjMap& phi, const std::vector<std::string>& image_vars,
                         const Budget& budget = {});

// --------------------------------------------------------- incidence table

struct IncidencePoint {
    ProjPoint p;
    std::vector<bool> member;                  // per curve
    std::map<std::pair<int, int>, int> mult;   // local numbers for pairs through p
};
struct PairAudit {
    int i, j;
    int bezout;
    int found_mass;
    bool complete;
};
struct IncidenceTable {
    std::vector<IncidencePoint> points;
    std::vector<PairAudit> audits;
};
IncidenceTable incidence_table(const std::vector<PlaneCurve>& curves,
                               const Budget& budget = {});

}  // namespace curves
}  // namespace cag

#endif
