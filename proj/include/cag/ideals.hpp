#ifndef CAG_IDEALS_HPP
#define CAG_IDEALS_HPP

#include "cag/poly.hpp"

namespace cag {
namespace ideals {

using poly::Monomial;
using poly::MonomialOrder;
using poly::MultiPoly;
using poly::RingPtr;
using poly::UniPoly;
using arith::NFElem;

// resource caps; hitting one throws budget_exceeded, never a wrong answer
struct Budget {
    size_t max_pairs = 200000;
    size_t max_basis = 2000;
    size_t max_coeff_bits = 1u << 20;

    void check_bits(const MultiPoly& f) const;
};

struct Ideal {
    RingPtr ring;
    std::vector<MultiPoly> gens;  // zero generators dropped on construction

    Ideal() = default;
    Ideal(RingPtr r, std::vector<MultiPoly> g);
};

// reduced Groebner basis: monic, pairwise head-reduced, fully interreduced,
// sorted descending by lead monomial; unique for the ring's order
class GroebnerBasis {
  public:
    GroebnerBasis() = default;
    GroebnerBasis(RingPtr r, std::vector<MultiPoly> basis)
        : ring_(std::move(r)), b_(std::move(basis)) {}

    const RingPtr& ring() const { return ring_; }
    const std::vector<MultiPoly>& basis() const { return b_; }
    bool contains_one() const;

  private:
    RingPtr ring_;
    std::vector<MultiPoly> b_;
};

// Buchberger with product/chain criteria and degree-sugar pair selection
GroebnerBasis buchberger(const Ideal& I, const Budget& budget = {});

// unique remainder modulo a Groebner basis
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& G);

bool member(const MultiPoly& f, const GroebnerBasis& G);
bool member(const MultiPoly& f, const Ideal& I, const Budget& budget = {});

// equal as ideals (mutual membership of generators)
bool ideal_equal(const Ideal& A, const Ideal& B, const Budget& budget = {});

// I ∩ K[kept vars], returned in the subring of the kept variables
Ideal elimination_ideal(const Ideal& I, const std::vector<std::string>& drop,
                        const Budget& budget = {});

struct SolutionSet {
    // coordinates in the order of the ideal's ring variables
    std::vector<std::vector<NFElem>> points;
    // irreducible-over-extraction univariate factors left unsolved
    std::vector<std::pair<std::string, UniPoly>> residual;
};

// triangular extraction through repeated elimination; roots recovered when
// rational or reachable by a quadratic split over the working field
SolutionSet solve_zero_dim(const Ideal& I, const Budget& budget = {});

}  // namespace ideals
}  // namespace cag

#endif
