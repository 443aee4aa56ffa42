#include "cag/rational.hpp"

namespace cag {
namespace arith {

Rat Rat::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw error("Rat: bad literal '" + s + "'");
    if (q.get_den() == 0) throw error("Rat: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rat(q);
}

std::string Rat::str() const {
    return v_.get_str();
}

size_t Rat::hash() const {
    // cheap: mix low limbs of num and den
    size_t h = 1469598103934665603ull;
    auto mix = [&h](const mpz_class& z) {
        h ^= mpz_get_si(z.get_mpz_t());
        h *= 1099511628211ull;
        h ^= mpz_sizeinbase(z.get_mpz_t(), 2);
        h *= 1099511628211ull;
    };
    mix(v_.get_num());
    mix(v_.get_den());
    return h;
}

std::optional<mpz_class> perfect_sqrt(const mpz_class& z) {
    if (sgn(z) < 0) return std::nullopt;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    if (r * r == z) return r;
    return std::nullopt;
}

std::optional<Rat> rat_sqrt(const Rat& q) {
    if (q.sign() < 0) return std::nullopt;
    auto n = perfect_sqrt(q.num());
    if (!n) return std::nullopt;
    auto d = perfect_sqrt(q.den());
    if (!d) return std::nullopt;
    return Rat(mpq_class(*n, *d));
}

}  // namespace arith
}  // namespace cag
