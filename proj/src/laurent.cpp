#include "knotcert/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace knotcert {

LaurentPoly LaurentPoly::constant(Int c) { return monomial2(std::move(c), 0); }

LaurentPoly LaurentPoly::monomial2(Int c, long long num2) {
    LaurentPoly p;
    p.set2(num2, std::move(c));
    return p;
}

Int LaurentPoly::coeff2(long long num2) const {
    auto it = terms_.find(num2);
    return it == terms_.end() ? Int(0) : it->second;
}

bool LaurentPoly::integer_exponents() const {
    for (const auto& [e2, c] : terms_)
        if (e2 % 2 != 0) return false;
    return true;
}

long long LaurentPoly::min_exp2() const {
    if (is_zero()) throw std::logic_error("min_exp2 of zero polynomial");
    return terms_.begin()->first;
}

long long LaurentPoly::max_exp2() const {
    if (is_zero()) throw std::logic_error("max_exp2 of zero polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::set2(long long num2, Int c) {
    if (c == 0)
        terms_.erase(num2);
    else
        terms_[num2] = std::move(c);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e2, c] : o.terms_) {
        auto it = terms_.find(e2);
        if (it == terms_.end()) {
            terms_.emplace(e2, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e2, c] : terms_) r.terms_.emplace(e2, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e2a, ca] : terms_)
        for (const auto& [e2b, cb] : o.terms_) {
            long long e2 = e2a + e2b;
            auto it = r.terms_.find(e2);
            if (it == r.terms_.end()) {
                Int prod = ca * cb;
                if (prod != 0) r.terms_.emplace(e2, std::move(prod));
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly scalar_mul(const Int& c, const LaurentPoly& p) {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e2, pc] : p.terms2()) r += LaurentPoly::monomial2(c * pc, e2);
    return r;
}

LaurentPoly substitute_inverse(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e2, c] : p.terms2()) r += LaurentPoly::monomial2(c, -e2);
    return r;
}

LaurentPoly derivative(const LaurentPoly& p, int order) {
    if (order < 1 || order > 12) throw std::invalid_argument("derivative order must be in [1, 12]");
    if (!p.integer_exponents())
        throw std::invalid_argument(
            "derivative requires integer exponents (half-integer powers would need rational coefficients)");
    LaurentPoly cur = p;
    for (int k = 0; k < order; ++k) {
        LaurentPoly next;
        for (const auto& [e2, c] : cur.terms2()) {
            long long e = e2 / 2;
            if (e != 0) next += LaurentPoly::monomial2(c * e, e2 - 2);
        }
        cur = std::move(next);
    }
    return cur;
}

Int eval_at_one(const LaurentPoly& p) {
    Int s = 0;
    for (const auto& [e2, c] : p.terms2()) s += c;
    return s;
}

LaurentPoly halve_exponents(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e2, c] : p.terms2()) {
        if (e2 % 4 != 0) throw std::invalid_argument("halve_exponents requires all exponents even");
        r += LaurentPoly::monomial2(c, e2 / 2);
    }
    return r;
}

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    LaurentPoly rem = p, quot;
    while (!rem.is_zero()) {
        long long e2 = rem.max_exp2() - d.max_exp2();
        Int lead = rem.coeff2(rem.max_exp2());
        Int dlead = d.coeff2(d.max_exp2());
        if (lead % dlead != 0) throw std::invalid_argument("inexact polynomial division");
        LaurentPoly m = LaurentPoly::monomial2(lead / dlead, e2);
        quot += m;
        rem -= m * d;
        if (!rem.is_zero() && rem.max_exp2() >= p.max_exp2() + 1)
            throw std::logic_error("polynomial division failed to reduce");
    }
    return quot;
}

namespace {

void render_exp2(std::ostringstream& out, const std::string& var, long long e2) {
    // e2 == 2 is plain "q"; otherwise q^k or q^k/2.
    out << var;
    if (e2 == 2) return;
    out << '^';
    if (e2 % 2 == 0)
        out << e2 / 2;
    else
        out << e2 << "/2";
}

}  // namespace

std::string render(const LaurentPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms2().rbegin(); it != p.terms2().rend(); ++it) {
        const auto& [e2, c] = *it;
        bool neg = c < 0;
        Int mag = neg ? Int(-c) : c;
        if (first) {
            if (neg) out << '-';
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (mag != 1 || e2 == 0) out << mag;
        if (e2 != 0) render_exp2(out, var, e2);
    }
    return out.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
};

Int parse_digits(Cursor& c) {
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
        throw std::invalid_argument("expected digits in polynomial text");
    Int v = 0;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        v = v * 10 + (c.peek() - '0');
        ++c.i;
    }
    return v;
}

long long parse_exp2(Cursor& c) {
    // after '^': [-]digits[/2]
    bool neg = false;
    if (!c.done() && (c.peek() == '-' || c.peek() == '+')) {
        neg = c.peek() == '-';
        ++c.i;
    }
    Int mag = parse_digits(c);
    long long e = static_cast<long long>(mag);
    if (neg) e = -e;
    if (!c.done() && c.peek() == '/') {
        ++c.i;
        if (c.done() || c.peek() != '2') throw std::invalid_argument("only /2 exponent denominators are supported");
        ++c.i;
        return e;  // text exponent was already doubled
    }
    return 2 * e;
}

}  // namespace

LaurentPoly parse_poly(const std::string& text, const std::string& var) {
    if (var.empty()) throw std::invalid_argument("empty variable name");
    Cursor c{text};
    LaurentPoly p;
    c.skip_ws();
    if (c.done()) throw std::invalid_argument("empty polynomial text");
    bool any = false;
    while (true) {
        c.skip_ws();
        if (c.done()) break;
        int sign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
            if (c.peek() == '-') sign = -1;
            ++c.i;
            c.skip_ws();
        } else if (any) {
            throw std::invalid_argument("expected '+' or '-' between terms");
        }
        Int coeff = 1;
        bool saw_coeff = false;
        if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = parse_digits(c);
            saw_coeff = true;
        }
        long long e2 = 0;
        if (!c.done() && c.s.compare(c.i, var.size(), var) == 0) {
            c.i += var.size();
            e2 = 2;
            if (!c.done() && c.peek() == '^') {
                ++c.i;
                e2 = parse_exp2(c);
            }
        } else if (!saw_coeff) {
            throw std::invalid_argument("expected coefficient or variable '" + var + "'");
        }
        p += LaurentPoly::monomial2(sign * coeff, e2);
        any = true;
    }
    if (!any) throw std::invalid_argument("empty polynomial text");
    return p;
}

}  // namespace knotcert
