#include <algorithm>

#include "support.hpp"
#include "zetasum/checks.hpp"

using namespace zetasum;

TEST_SUITE("checks") {
  TEST_CASE("aliases resolve to canonical ids") {
    CHECK(canonical_check_id("thm1") == "s-series");
    CHECK(canonical_check_id("eq4.3") == "s-series-p0");
    CHECK(canonical_check_id("eq6.2") == "geometric-sum");
    CHECK(canonical_check_id("eq2.10") == "g-integral");
    CHECK(canonical_check_id("eps-independence") == "eps-independence");
    CHECK_THROWS_AS(canonical_check_id("thm99"), DomainError);
  }

  TEST_CASE("unknown ids are rejected before anything runs") {
    CHECK_THROWS_AS(resolve_check_ids({"thm1", "bogus"}), DomainError);
    const auto all = resolve_check_ids({"all"});
    CHECK(all == check_ids());
    CHECK(std::find(all.begin(), all.end(), "spot") != all.end());
  }

  TEST_CASE("every suite passes its tolerance") {
    for (const std::string& id : check_ids()) {
      const CheckReport r = run_check(id);
      INFO(id << ": max_dev " << r.max_deviation << " tol " << r.tolerance << " worst " << r.worst_point << " "
              << r.failure);
      CHECK(r.passed);
      CHECK(r.passed == (r.max_deviation <= r.tolerance));
      CHECK(r.grid_size > 0);
    }
  }

  TEST_CASE("a broken configuration fails visibly") {
    CheckConfig cfg;
    cfg.series.max_terms = 10;
    const CheckReport r = run_check("thm1", cfg);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.failure.empty());
  }
}
