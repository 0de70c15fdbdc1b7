#include <vector>

#include "doctest.h"
#include "knotcert/families.hpp"
#include "knotcert/kauffman.hpp"
#include "knotcert/laurent.hpp"

using knotcert::Diagram;
using knotcert::Int;
using knotcert::LaurentPoly;
using knotcert::alexander_skein;
using knotcert::pretzel_diagram;

namespace {

const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

// symmetric polynomial sum_k c_k (t^k + t^-k) + c0, given {c0, c1, c2, ...}
LaurentPoly symmetric(const std::vector<Int>& coeffs) {
    LaurentPoly p = LaurentPoly::constant(coeffs.at(0));
    for (size_t k = 1; k < coeffs.size(); ++k) {
        p += LaurentPoly::monomial2(coeffs[k], 2 * static_cast<long long>(k)) +
             LaurentPoly::monomial2(coeffs[k], -2 * static_cast<long long>(k));
    }
    return p;
}

LaurentPoly half_z() { return LaurentPoly::monomial2(1, 1) - LaurentPoly::monomial2(1, -1); }

}  // namespace

TEST_CASE("trivial and split diagrams") {
    CHECK(alexander_skein(Diagram::parse_pd("U")) == LaurentPoly::one());
    CHECK(alexander_skein(Diagram::parse_pd("U U")) == LaurentPoly::zero());
    CHECK(alexander_skein(Diagram::parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] U")) ==
          LaurentPoly::zero());
}

TEST_CASE("unknots in disguise") {
    // capped twist column: three curls
    CHECK(alexander_skein(pretzel_diagram({3})) == LaurentPoly::one());
    CHECK(alexander_skein(pretzel_diagram({-4})) == LaurentPoly::one());
    // switching one trefoil crossing unknots it
    CHECK(alexander_skein(Diagram::parse_pd(kTrefoil).switched(0)) == LaurentPoly::one());
}

TEST_CASE("trefoil") {
    LaurentPoly expect = symmetric({-1, 1});  // t - 1 + 1/t
    Diagram d = Diagram::parse_pd(kTrefoil);
    CHECK(alexander_skein(d) == expect);
    CHECK(alexander_skein(d.mirrored()) == expect);
    CHECK(alexander_skein(pretzel_diagram({1, 1, 1})) == expect);
}

TEST_CASE("Hopf links") {
    CHECK(alexander_skein(Diagram::parse_pd("X[1,3,2,4] X[3,1,4,2]")) == half_z());
    // the mirror negates the Conway normalization of an even-component link
    CHECK(alexander_skein(Diagram::parse_pd("X[1,4,2,3] X[3,2,4,1]")) ==
          LaurentPoly::zero() - half_z());
}

TEST_CASE("figure eight") {
    Diagram d = pretzel_diagram({1, 1, 2});
    CHECK(d.crossing_count() == 4);
    CHECK(d.component_count() == 1);
    // reduced alternating with four crossings: this is the figure-eight knot
    for (int e : d.edge_ids()) CHECK(d.edge_good(e));
    CHECK(alexander_skein(d) == symmetric({3, -1}));
    CHECK(alexander_skein(d.mirrored()) == symmetric({3, -1}));
}

TEST_CASE("five-crossing knots") {
    // (2,5) torus knot, twice: five single columns, and the two-bridge sum
    // 1/3 + 1/2 = 5/6
    CHECK(alexander_skein(pretzel_diagram({1, 1, 1, 1, 1})) == symmetric({1, -1, 1}));
    CHECK(alexander_skein(pretzel_diagram({3, 2})) == symmetric({1, -1, 1}));
    // the other five-crossing knot
    CHECK(alexander_skein(pretzel_diagram({3, 1, 1})) == symmetric({-3, 2}));
    // 1/2 - 1/3 = 1/6 closes to an unknot
    CHECK(alexander_skein(pretzel_diagram({2, -3})) == LaurentPoly::one());
}

TEST_CASE("a nonsplit link with vanishing polynomial") {
    Diagram d = pretzel_diagram({3, -2, 2, -3});
    CHECK_FALSE(d.is_split());
    CHECK(alexander_skein(d) == LaurentPoly::zero());
}

TEST_CASE("resolution identity holds at every crossing") {
    std::vector<Diagram> corpus;
    corpus.push_back(Diagram::parse_pd(kTrefoil));
    corpus.push_back(pretzel_diagram({1, 1, 2}));
    corpus.push_back(pretzel_diagram({3, 2}));
    corpus.push_back(pretzel_diagram({3, -2, 2, -3}));
    corpus.push_back(Diagram::parse_pd("X[1,3,2,4] X[3,1,4,2]"));
    for (const Diagram& d : corpus) {
        for (int c = 0; c < d.crossing_count(); ++c) {
            Diagram sw = d.switched(c);
            const Diagram& plus = d.crossing_sign(c) > 0 ? d : sw;
            const Diagram& minus = d.crossing_sign(c) > 0 ? sw : d;
            CHECK(alexander_skein(plus) - alexander_skein(minus) ==
                  half_z() * alexander_skein(d.smoothed(c)));
        }
    }
}
