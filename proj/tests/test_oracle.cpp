#include <doctest.h>

#include <random>

#include "kcha/oracle.hpp"
#include "kcha/parser.hpp"

using namespace kcha;

namespace {
UniPoly up(const std::string& s) { return parse_ratfunc(s, "mu").as_polynomial(); }

BraidWord random_braid(std::mt19937& rng, int strands, int length) {
    std::uniform_int_distribution<int> letter(1, strands - 1), sign(0, 1);
    BraidWord b;
    b.strands = strands;
    for (int i = 0; i < length; ++i) {
        int l = letter(rng);
        b.word.push_back(sign(rng) ? l : -l);
    }
    return b;
}
} // namespace

TEST_CASE("reduced Burau base cases") {
    Matrix<RatFunc> s1 = reduced_burau(BraidWord{2, {1}});
    CHECK(s1.rows() == 1);
    CHECK(s1(0, 0) == parse_ratfunc("-mu", "mu"));

    Matrix<RatFunc> id = reduced_burau(BraidWord{2, {1, -1}});
    CHECK(id(0, 0) == parse_ratfunc("1", "mu"));

    CHECK_THROWS_AS(reduced_burau(BraidWord{1, {}}), ValidationError);
    CHECK_THROWS_AS(validate_braid(BraidWord{2, {2}}), ValidationError);
    CHECK_THROWS_AS(validate_braid(BraidWord{2, {0}}), ValidationError);
}

TEST_CASE("braid relation holds on three strands") {
    Matrix<RatFunc> lhs = reduced_burau(BraidWord{3, {1, 2, 1}});
    Matrix<RatFunc> rhs = reduced_burau(BraidWord{3, {2, 1, 2}});
    CHECK(lhs == rhs);
}

TEST_CASE("representation property on random words") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 25; ++trial) {
        BraidWord u = random_braid(rng, 4, 4), v = random_braid(rng, 4, 4);
        BraidWord uv{4, u.word};
        uv.word.insert(uv.word.end(), v.word.begin(), v.word.end());
        CHECK(reduced_burau(uv) == reduced_burau(u) * reduced_burau(v));

        BraidWord cancel{4, u.word};
        for (auto it = u.word.rbegin(); it != u.word.rend(); ++it) cancel.word.push_back(-*it);
        CHECK(reduced_burau(cancel) == Matrix<RatFunc>::identity(3));
    }
}

TEST_CASE("alexander_from_braid on the trefoil and its mirror") {
    AlexReport cube = alexander_from_braid(BraidWord{2, {1, 1, 1}});
    CHECK(cube.delta == up("mu^2 - mu + 1"));
    // det(1 - rho(sigma1^3)) = 1 + mu^3.
    Matrix<RatFunc> rho = reduced_burau(BraidWord{2, {1, 1, 1}});
    RatFunc det = RatFunc::constant("mu", Rational(1)) - rho(0, 0);
    CHECK(det == RatFunc(up("1 + mu^3")));

    AlexReport mirror = alexander_from_braid(BraidWord{2, {-1, -1, -1}});
    CHECK(mirror.delta == up("mu^2 - mu + 1"));
}

TEST_CASE("alexander_from_braid trivial and figure-eight cases") {
    CHECK(alexander_from_braid(BraidWord{1, {}}).delta.is_one());

    AlexReport fig8 = alexander_from_braid(BraidWord{3, {1, -2, 1, -2}});
    // Canonical form fixes delta(1) = +1, so mu^2 - 3mu + 1 appears negated.
    CHECK(fig8.delta == normalize_alexander(up("mu^2 - 3*mu + 1")));
    CHECK(fig8.delta == up("-mu^2 + 3*mu - 1"));
}

TEST_CASE("closure detection") {
    CHECK(closure_is_knot(BraidWord{2, {1, 1, 1}}));
    CHECK_FALSE(closure_is_knot(BraidWord{2, {1, 1}}));  // Hopf link
    CHECK_FALSE(closure_is_knot(BraidWord{3, {}}));
    CHECK_THROWS_AS(alexander_from_braid(BraidWord{2, {1, 1}}), InapplicableError);
}

TEST_CASE("Markov stability under stabilization") {
    std::mt19937 rng(31415);
    int tested = 0;
    while (tested < 20) {
        BraidWord b = random_braid(rng, 3, 4);
        if (!closure_is_knot(b)) continue;
        ++tested;
        BraidWord stabilized{4, b.word};
        stabilized.word.push_back(3);
        REQUIRE(closure_is_knot(stabilized));
        CHECK(alexander_from_braid(stabilized).delta == alexander_from_braid(b).delta);
    }
}

TEST_CASE("delta(1) = +-1 and symmetry for knot closures") {
    std::mt19937 rng(2718);
    int tested = 0;
    while (tested < 25) {
        BraidWord b = random_braid(rng, 4, 7);
        if (!closure_is_knot(b)) continue;
        ++tested;
        AlexReport r = alexander_from_braid(b);
        Rational at_one = r.raw.eval(Rational(1));
        CHECK((at_one == Rational(1) || at_one == Rational(-1)));
        CHECK(normalize_alexander(r.delta.reversed()) == r.delta);
    }
}

TEST_CASE("torus knot family against the classical polynomials") {
    // T(2,5): mu^4 - mu^3 + mu^2 - mu + 1; T(2,7) continues the pattern.
    AlexReport cinq = alexander_from_braid(BraidWord{2, {1, 1, 1, 1, 1}});
    CHECK(cinq.delta == up("mu^4 - mu^3 + mu^2 - mu + 1"));
    AlexReport sept = alexander_from_braid(BraidWord{2, {1, 1, 1, 1, 1, 1, 1}});
    CHECK(sept.delta == up("mu^6 - mu^5 + mu^4 - mu^3 + mu^2 - mu + 1"));
    // T(3,4): mu^6 - mu^5 + mu^3 - mu + 1.
    AlexReport t34 = alexander_from_braid(BraidWord{3, {1, 2, 1, 2, 1, 2, 1, 2}});
    CHECK(t34.delta == normalize_alexander(up("mu^6 - mu^5 + mu^3 - mu + 1")));
}
