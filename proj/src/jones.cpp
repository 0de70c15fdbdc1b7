#include "knotcert/jones.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace knotcert {

namespace {

LaurentPoly circle_factor() {
    return LaurentPoly::zero() - LaurentPoly::monomial(1, 2) - LaurentPoly::monomial(1, -2);
}

// residual diagram mid-resolution: remaining crossings over merged edge
// classes, plus circles already closed off
struct Residual {
    std::vector<std::array<int, 4>> tuples;
    int loops = 0;

    std::string key() const {
        std::ostringstream os;
        for (const auto& t : tuples) os << t[0] << ',' << t[1] << ',' << t[2] << ',' << t[3] << ';';
        os << '|' << loops;
        return os.str();
    }
};

// merges the two label pairs, drops the first tuple, rewrites the rest to
// class representatives (smallest label wins, keeping keys canonical)
Residual resolve_first(const Residual& r, std::array<std::pair<int, int>, 2> joins) {
    std::map<int, int> parent;
    auto find = [&](int a) {
        while (true) {
            auto it = parent.find(a);
            if (it == parent.end() || it->second == a) return a;
            a = it->second;
        }
    };
    Residual out;
    out.loops = r.loops;
    for (auto [a, b] : joins) {
        int ra = find(a), rb = find(b);
        if (ra == rb)
            ++out.loops;
        else if (ra < rb)
            parent[rb] = ra;
        else
            parent[ra] = rb;
    }
    out.tuples.reserve(r.tuples.size() - 1);
    for (size_t i = 1; i < r.tuples.size(); ++i) {
        std::array<int, 4> t = r.tuples[i];
        for (int& x : t) x = find(x);
        out.tuples.push_back(t);
    }
    return out;
}

LaurentPoly bracket_rec(const Residual& r, std::unordered_map<std::string, LaurentPoly>& memo,
                        const LaurentPoly& delta) {
    if (r.tuples.empty()) {
        LaurentPoly p = LaurentPoly::one();
        for (int i = 0; i < r.loops; ++i) p *= delta;
        return p;
    }
    std::string key = r.key();
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const auto& t = r.tuples.front();
    // A-smoothing joins the incoming under-strand to its counterclockwise neighbor
    LaurentPoly result =
        LaurentPoly::monomial(1, 1) * bracket_rec(resolve_first(r, {{{t[0], t[1]}, {t[2], t[3]}}}), memo, delta) +
        LaurentPoly::monomial(1, -1) * bracket_rec(resolve_first(r, {{{t[0], t[3]}, {t[1], t[2]}}}), memo, delta);
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

LaurentPoly kauffman_bracket(const Diagram& d) {
    Residual start;
    start.loops = d.free_loop_count();
    for (const Crossing& c : d.crossings()) start.tuples.push_back(c.e);
    std::unordered_map<std::string, LaurentPoly> memo;
    LaurentPoly delta = circle_factor();
    // every complete resolution contains at least one circle, counted as a
    // delta factor above; the bracket convention drops one of them
    return divide_exact(bracket_rec(start, memo, delta), delta);
}

LaurentPoly kauffman_bracket_enumerated(const Diagram& d) {
    const int n = d.crossing_count();
    if (n > 22) throw std::invalid_argument("enumerated bracket limited to 22 crossings");
    if (n == 0) {
        LaurentPoly p = LaurentPoly::one();
        for (int i = 1; i < d.free_loop_count(); ++i) p *= circle_factor();
        return p;
    }
    // dense edge labels
    std::unordered_map<int, int> dense;
    for (const Crossing& c : d.crossings())
        for (int e : c.e) dense.try_emplace(e, static_cast<int>(dense.size()));
    const int m = static_cast<int>(dense.size());

    std::vector<LaurentPoly> delta_pow(n + d.free_loop_count() + 2);
    delta_pow[0] = LaurentPoly::one();
    for (size_t i = 1; i < delta_pow.size(); ++i) delta_pow[i] = delta_pow[i - 1] * circle_factor();

    LaurentPoly total;
    std::vector<int> parent(m);
    for (long long mask = 0; mask < (1LL << n); ++mask) {
        for (int i = 0; i < m; ++i) parent[i] = i;
        auto find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        int circles = d.free_loop_count();
        int a_count = 0;
        for (int c = 0; c < n; ++c) {
            const auto& e = d.crossings()[c].e;
            bool a_smooth = (mask >> c) & 1;
            if (a_smooth) ++a_count;
            std::array<std::pair<int, int>, 2> joins =
                a_smooth ? std::array<std::pair<int, int>, 2>{{{e[0], e[1]}, {e[2], e[3]}}}
                         : std::array<std::pair<int, int>, 2>{{{e[0], e[3]}, {e[1], e[2]}}};
            for (auto [x, y] : joins) {
                int rx = find(dense.at(x)), ry = find(dense.at(y));
                if (rx == ry)
                    ++circles;
                else
                    parent[ry] = rx;
            }
        }
        total += LaurentPoly::monomial(1, 2 * a_count - n) * delta_pow[circles - 1];
    }
    return total;
}

LaurentPoly jones_polynomial(const Diagram& d) {
    LaurentPoly bracket = kauffman_bracket(d);
    int w = d.writhe();
    // (-A^3)^{-w}
    LaurentPoly in_a = bracket * LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3LL * w);
    // A^2 -> -q^{-1}; writhe normalization leaves only even powers of A
    LaurentPoly out;
    for (auto [e2, c] : in_a.terms2()) {
        long long k = e2 / 2;  // power of A
        if (e2 % 2 != 0 || k % 2 != 0)
            throw std::logic_error("normalized bracket has an odd power of A");
        long long half = k / 2;
        out += LaurentPoly::monomial(half % 2 == 0 ? c : -c, -half);
    }
    return out;
}

LaurentPoly classical_form(const LaurentPoly& v) {
    LaurentPoly out;
    for (auto [e2, c] : v.terms2()) {
        if (e2 % 2 != 0) throw std::invalid_argument("expected integer powers of q");
        long long k = e2 / 2;  // power of q; q = -t^{1/2}
        out += LaurentPoly::monomial2(k % 2 == 0 ? c : -c, k);
    }
    return out;
}

bool verify_skein_triple(const Diagram& plus, const Diagram& minus, const Diagram& zero) {
    LaurentPoly lhs = LaurentPoly::monomial(1, -2) * jones_polynomial(plus) -
                      LaurentPoly::monomial(1, 2) * jones_polynomial(minus);
    LaurentPoly rhs = (LaurentPoly::monomial(1, -1) - LaurentPoly::monomial(1, 1)) *
                      jones_polynomial(zero);
    return lhs == rhs;
}

}  // namespace knotcert
