#ifndef CAG_RATIONAL_HPP
#define CAG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace cag {

// Base class for every error thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A resource cap was hit. Distinct from a mathematical failure: the
// computation was cut short, the answer is unknown.
struct budget_exceeded : error {
    using error::error;
};

namespace arith {

// Exact rational number. Always stored canonically: gcd(num,den)=1, den>0.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) {
        if (d == 0) throw error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rat(const mpz_class& z) : v_(z) {}

    // accepts "num", "num/den", optional leading '-'
    static Rat from_string(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat inv() const {
        if (is_zero()) throw error("Rat: inverse of zero");
        return Rat(mpq_class(1 / v_));
    }
    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    // bit length of num plus den; used by coefficient budgets
    size_t bits() const {
        return mpz_sizeinbase(v_.get_num_mpz_t(), 2) +
               mpz_sizeinbase(v_.get_den_mpz_t(), 2);
    }

    std::string str() const;

    size_t hash() const;

  private:
    mpq_class v_;
};

// exact integer square root: returns none unless z is a perfect square
std::optional<mpz_class> perfect_sqrt(const mpz_class& z);

// exact rational square root: none unless both num and den are squares
std::optional<Rat> rat_sqrt(const Rat& q);

}  // namespace arith
}  // namespace cag

#endif
