#include "cag/parser.hpp"

#include <cctype>
#include <sstream>

namespace cag {
namespace poly {

namespace {

class Parser {
  public:
    Parser(const std::string& s, RingPtr ring, std::string gen)
        : s_(s), ring_(std::move(ring)), gen_(std::move(gen)) {}

    MultiPoly run() {
        MultiPoly e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error("unexpected input", pos_);
        return e;
    }

  private:
    const std::string& s_;
    RingPtr ring_;
    std::string gen_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            skip_ws();
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = sfactor();
        while (eat('*')) acc = acc * sfactor();
        return acc;
    }

    MultiPoly sfactor() {
        int sign = 1;
        while (eat('-')) sign = -sign;
        MultiPoly f = factor();
        return sign < 0 ? -f : f;
    }

    MultiPoly factor() {
        MultiPoly b = base();
        if (eat('^')) {
            skip_ws();
            size_t start = pos_;
            unsigned long n = read_uint();
            if (n > 1000000) throw parse_error("exponent too large", start);
            return b.pow((long)n);
        }
        return b;
    }

    unsigned long read_uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
            throw parse_error("expected integer", pos_);
        unsigned long v = 0;
        std::string digits;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
            digits.push_back(s_[pos_++]);
        std::istringstream is(digits);
        is >> v;
        if (digits.size() > 18) throw parse_error("integer literal too large", pos_);
        return v;
    }

    MultiPoly base() {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly e = expr();
            if (!eat(')')) throw parse_error("expected ')'", pos_);
            return e;
        }
        if (std::isdigit((unsigned char)c)) return rational();
        if (std::isalpha((unsigned char)c) || c == '_') return symbol();
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    MultiPoly rational() {
        size_t start = pos_;
        std::string num;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
            num.push_back(s_[pos_++]);
        std::string lit = num;
        // '/' only continues a rational literal when followed by a digit
        size_t save = pos_;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            size_t slash = pos_++;
            skip_ws();
            if (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
                std::string den;
                while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
                    den.push_back(s_[pos_++]);
                lit += "/" + den;
            } else {
                throw parse_error("expected denominator", slash + 1);
            }
        } else {
            pos_ = save;
        }
        try {
            return MultiPoly::constant(ring_, arith::Rat::from_string(lit));
        } catch (const error&) {
            throw parse_error("bad rational literal", start);
        }
    }

    MultiPoly symbol() {
        size_t start = pos_;
        std::string name;
        while (pos_ < s_.size() &&
               (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_'))
            name.push_back(s_[pos_++]);
        int vi = ring_->var_index(name);
        if (vi >= 0) return MultiPoly::variable(ring_, vi);
        if (name == gen_) {
            if (ring_->field()->is_rational())
                throw parse_error("generator symbol used over the rationals", start);
            return MultiPoly::constant(ring_, NFElem::generator(ring_->field()));
        }
        throw parse_error("unknown symbol '" + name + "'", start);
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring, ring->field()->gen()).run();
}

arith::NFElem parse_element(const std::string& text, const arith::FieldPtr& field,
                            const std::string& gen_symbol) {
    std::string gen = gen_symbol.empty() ? field->gen() : gen_symbol;
    // an element literal may end in '/uint'; split at the last top-level slash
    std::string body = text;
    arith::Rat den(1);
    int depth = 0;
    for (size_t i = text.size(); i-- > 0;) {
        char c = text[i];
        if (c == ')') ++depth;
        else if (c == '(') --depth;
        else if (c == '/' && depth == 0) {
            // only treat as element-level division when the head is parenthesized
            // or a bare symbol; plain "3/5" stays a rational literal
            std::string head = text.substr(0, i), tail = text.substr(i + 1);
            bool head_paren = false;
            for (char h : head)
                if (!std::isspace((unsigned char)h)) { head_paren = (h == '('); break; }
            if (head_paren) {
                den = arith::Rat::from_string(tail);
                body = head;
            }
            break;
        }
    }
    RingPtr scratch = PolyRing::make(field, {"__u"});
    MultiPoly p = Parser(body, scratch, gen).run();
    if (!p.is_constant()) throw error("parse_element: not a field element");
    NFElem v = p.is_zero() ? NFElem::zero(field) : p.terms()[0].c;
    if (!den.is_one()) v = v / NFElem::from_rat(field, den);
    return v;
}

// ------------------------------------------------------------- printing

std::string MultiPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : t_) {
        std::string mono;
        {
            std::ostringstream ms;
            bool firstv = true;
            for (size_t i = 0; i < ring_->nvars(); ++i) {
                int e = t.m.e[i];
                if (e == 0) continue;
                if (!firstv) ms << "*";
                firstv = false;
                ms << ring_->vars()[i];
                if (e > 1) ms << "^" << e;
            }
            mono = ms.str();
        }
        if (t.c.is_rational()) {
            Rat q = t.c.rat_value();
            bool neg = q.sign() < 0;
            if (first) { if (neg) os << "-"; }
            else os << (neg ? " - " : " + ");
            Rat aq = q.abs();
            if (mono.empty()) os << aq.str();
            else if (aq.is_one()) os << mono;
            else os << aq.str() << "*" << mono;
        } else {
            if (!first) os << " + ";
            if (mono.empty()) os << "(" << t.c.str() << ")";
            else os << "(" << t.c.str() << ")*" << mono;
        }
        first = false;
    }
    return os.str();
}

}  // namespace poly
}  // namespace cag
