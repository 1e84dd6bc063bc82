#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "tamari/lattice.hpp"
#include "tamari/oracle.hpp"

using namespace tamari;
using fixtures::F;

TEST_SUITE("oracle") {
  TEST_CASE("rotations") {
    CHECK(oracle::rotations(F("(p*q)*r")) == std::vector<Formula>{F("p*(q*r)")});
    CHECK(oracle::rotations(F("p*(q*r)")).empty());
    CHECK(oracle::rotations(F("p")).empty());
    // Two rotatable nodes in the left comb of four atoms.
    const auto r = oracle::rotations(F("((p*q)*r)*s"));
    CHECK(r.size() == 2);
    for (const auto& f : r) CHECK(std::count(r.begin(), r.end(), f) == 1);
  }

  TEST_CASE("rotation order") {
    CHECK(oracle::leq_oracle(F("(p*(q*r))*s"), F("p*(q*(r*s))")));
    CHECK_FALSE(oracle::leq_oracle(F("p*(q*(r*s))"), F("(p*(q*r))*s")));
    CHECK(oracle::leq_oracle(F("p*q"), F("p*q")));
    CHECK_FALSE(oracle::leq_oracle(F("p*q"), F("q*p")));
    CHECK_FALSE(oracle::leq_oracle(F("p*(q*r)"), F("(p*q)*r")));
    // Beyond the cached sizes the search runs directly.
    CHECK(oracle::leq_oracle(bottom(canonical_frontier(10)), top(canonical_frontier(10))));
    CHECK_FALSE(oracle::leq_oracle(top(canonical_frontier(10)), bottom(canonical_frontier(10))));
  }

  TEST_CASE("rotation order with repeated atoms") {
    CHECK(oracle::leq_oracle(F("(p*p)*p"), F("p*(p*p)")));
    CHECK_FALSE(oracle::leq_oracle(F("p*(p*p)"), F("(p*p)*p")));
  }

  TEST_CASE("join and meet by scanning") {
    CHECK(oracle::join_oracle(F("p*((q*(r*((s*t)*u)))*v)"), F("(p*(q*r))*((s*t)*(u*v))")) ==
          F("p*(q*(r*((s*t)*(u*v))))"));
    CHECK(oracle::join_oracle(F("p*q*r"), F("p*q*r")) == F("p*q*r"));
    CHECK(oracle::meet_oracle(F("(p*q)*r"), F("p*(q*r)")) == F("(p*q)*r"));
    CHECK_THROWS_AS(oracle::join_oracle(F("p*q"), F("q*p")), FrontierMismatch);
  }

  TEST_CASE("interval counts by brute force") {
    CHECK(oracle::count_intervals_oracle(0) == 1);
    CHECK(oracle::count_intervals_oracle(3) == 13);
    CHECK(oracle::count_intervals_oracle(4) == 68);
    CHECK_THROWS_AS(oracle::count_intervals_oracle(7), std::length_error);
    CHECK_THROWS_AS(oracle::count_intervals_oracle(3, 2), std::length_error);
  }

  TEST_CASE("transitive reduction") {
    const auto t3 = enumerate_trees(canonical_frontier(4));
    const auto g = oracle::transitive_reduction(t3, oracle::leq_oracle);
    CHECK(g.nodes.size() == 5);
    CHECK(g.edges.size() == 5);

    const std::vector<Formula> chain{F("a1*a2*a3*a4"), F("a1*(a2*a3)*a4"), F("a1*(a2*(a3*a4))")};
    const auto c = oracle::transitive_reduction(chain, oracle::leq_oracle);
    CHECK(c.edges.size() == 2);

    const std::vector<Formula> anti{F("p"), F("q"), F("r")};
    const auto a = oracle::transitive_reduction(
        anti, [](const Formula& x, const Formula& y) { return x == y; });
    CHECK(a.edges.empty());
  }
}
