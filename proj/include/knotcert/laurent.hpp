#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace knotcert {

using Int = boost::multiprecision::cpp_int;

// Laurent polynomial in one formal variable, exact integer coefficients.
// Exponents live in (1/2)Z; they are stored doubled so every key is an
// integer (exponent e = key/2).  Zero coefficients are never stored; the
// zero polynomial has an empty term map.
class LaurentPoly {
public:
    using Terms = std::map<long long, Int>;  // doubled exponent -> coefficient

    LaurentPoly() = default;

    static LaurentPoly constant(Int c);
    // c * x^(num2/2).  num2 is the doubled exponent: monomial2(1, 2) == x.
    static LaurentPoly monomial2(Int c, long long num2);
    // c * x^e with integer e.
    static LaurentPoly monomial(Int c, long long e) { return monomial2(std::move(c), 2 * e); }
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return constant(1); }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms2() const { return terms_; }

    // Coefficient at doubled exponent (0 if absent).
    Int coeff2(long long num2) const;
    // Coefficient at integer exponent.
    Int coeff(long long e) const { return coeff2(2 * e); }

    bool integer_exponents() const;  // true when every exponent is integral
    long long min_exp2() const;      // pre: !is_zero()
    long long max_exp2() const;      // pre: !is_zero()

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator*=(const LaurentPoly& o);

private:
    void set2(long long num2, Int c);  // inserts or erases-on-zero
    Terms terms_;
};

LaurentPoly scalar_mul(const Int& c, const LaurentPoly& p);
// x -> x^-1.
LaurentPoly substitute_inverse(const LaurentPoly& p);
// Formal d/dx applied `order` times.  Requires integer exponents: a
// half-integer exponent would force rational coefficients, which the
// coefficient ring does not represent.  order must be in [1, 12].
LaurentPoly derivative(const LaurentPoly& p, int order = 1);
// Sum of coefficients (always an integer for this coefficient ring).
Int eval_at_one(const LaurentPoly& p);
// x^2 -> x, i.e. halves every exponent.  Requires all doubled exponents
// divisible by 4 (integer exponents, all even).
LaurentPoly halve_exponents(const LaurentPoly& p);
// Exact division; throws if the quotient is not a Laurent polynomial.
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& d);

// Canonical text form: terms in descending exponent order, e.g.
// "-q^9 + q^7 - q^5 + q^3 + q + q^-1 + q^-3 - q^-5 + q^-7 - q^-9".
// Half-integer exponents render as q^1/2, q^-3/2, ...
std::string render(const LaurentPoly& p, const std::string& var);
// Inverse of render (also accepts redundant whitespace and explicit "1"
// coefficients).  Throws std::invalid_argument on malformed input or on a
// variable other than `var`.
LaurentPoly parse_poly(const std::string& text, const std::string& var);

}  // namespace knotcert
