#include <catch_amalgamated.hpp>

#include "rhiza/poly.hpp"
#include "rhiza/symbolic.hpp"

using namespace rhiza;

TEST_CASE("polynomial arithmetic basics") {
    Poly x = Poly::var(0), y = Poly::var(1);
    Poly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK((p - p).is_zero());
    CHECK(p.total_degree() == 2);
    CHECK(p.degree_in(0) == 2);
    CHECK(Poly::constant(Scalar(3)).is_constant());
    CHECK(p.evaluate({Scalar(3), Scalar(2)}) == Scalar(5));
}

TEST_CASE("substitution and clearing") {
    Poly x = Poly::var(0), y = Poly::var(1);
    Poly p = x * x + y;
    CHECK(p.substitute(0, y) == y * y + y);
    // x := y / (y+1), cleared by (y+1)^2
    Poly cleared = p.substitute_cleared(0, y, y + Poly::constant(Scalar(1)));
    Poly expect = y * y + y * (y + Poly::constant(Scalar(1))) * (y + Poly::constant(Scalar(1)));
    CHECK(cleared == expect);
}

TEST_CASE("linear_part recognizes monomial coefficients only") {
    Poly x = Poly::var(0), y = Poly::var(1), z = Poly::var(2);
    auto lp = (Poly::constant(Scalar(2)) * x + y * z).linear_part(0);
    REQUIRE(lp.has_value());
    CHECK(lp->first == Poly::constant(Scalar(2)));
    CHECK(lp->second == y * z);

    auto lp2 = (y * x + z).linear_part(0); // coefficient y: a monomial
    REQUIRE(lp2.has_value());
    CHECK(lp2->first == y);

    CHECK_FALSE((x * x + y).linear_part(0).has_value());
    CHECK_FALSE(((y + z) * x).linear_part(0).has_value()); // coefficient not a monomial
}

TEST_CASE("solver handles monomial systems and branch merging") {
    Poly x = Poly::var(0), y = Poly::var(1);
    auto fams = PolySolver::solve({x * y});
    // union of leaves must be exactly {x = 0} u {y = 0}
    REQUIRE(fams.size() == 2);
    for (const auto& f : fams) {
        bool x_zero = f.expression_of(0).is_zero();
        bool y_zero = f.expression_of(1).is_zero();
        CHECK((x_zero || y_zero));
    }

    auto sq = PolySolver::solve({x * x});
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].expression_of(0).is_zero());
}

TEST_CASE("solver eliminates through localized coefficients") {
    Poly x = Poly::var(0), y = Poly::var(1), z = Poly::var(2);
    // x*z = y^2 with x != 0 forced by x*w - 1 = 0 style... keep it direct:
    // the system {x*z - y*y, x*y - x} of the stuck shape
    auto fams = PolySolver::solve({x * z - y * y});
    bool saw_rational = false;
    for (const auto& f : fams) {
        if (!family_solves({x * z - y * y}, f)) FAIL("family does not solve the system");
        auto it = f.solved.find(2);
        if (it != f.solved.end() && !it->second.den.is_constant()) saw_rational = true;
    }
    CHECK(saw_rational);
}

TEST_CASE("solver reports genuinely stuck inputs instead of guessing") {
    Poly x = Poly::var(0), y = Poly::var(1);
    Poly p = (x + y) * (x + y); // irreducible-to-the-rules perfect square
    CHECK_THROWS_AS(PolySolver::solve({p}), Error);
}

TEST_CASE("family verification catches non-solutions") {
    Poly x = Poly::var(0);
    SolutionFamily bogus;
    bogus.solved[0] = RatExpr{Poly::constant(Scalar(1))};
    CHECK_FALSE(family_solves({x}, bogus));
}
