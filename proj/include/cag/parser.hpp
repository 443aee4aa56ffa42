#ifndef CAG_PARSER_HPP
#define CAG_PARSER_HPP

#include <string>

#include "cag/poly.hpp"

namespace cag {
namespace poly {

struct parse_error : error {
    size_t offset;
    parse_error(const std::string& what, size_t off)
        : error(what + " at offset " + std::to_string(off)), offset(off) {}
};

// expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
// factor := base ('^' uint)? ; base := var | rational | generator | '(' expr ')'
// whitespace insignificant; '^' > unary '-' > '*' > binary '+','-'
MultiPoly parse_poly(const std::string& text, const RingPtr& ring);

// field element: poly expression in the generator symbol alone, with an
// optional trailing '/denominator' as in "(1+2*t)/3"
arith::NFElem parse_element(const std::string& text, const arith::FieldPtr& field,
                            const std::string& gen_symbol = "");

}  // namespace poly
}  // namespace cag

#endif
