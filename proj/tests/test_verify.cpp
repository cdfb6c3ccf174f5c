#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gfree/verify.hpp"

using namespace gfree;

namespace {

std::string describe(const VerifyReport& rep) {
  std::string out;
  for (const Failure& f : rep.failures)
    out += f.graph6 + " " + f.spec + " " + f.stage + " " + f.witness + "\n";
  return out;
}

bool same_report(const VerifyReport& a, const VerifyReport& b) {
  if (a.suite != b.suite || a.n_max != b.n_max) return false;
  if (a.instances != b.instances || a.exceptions != b.exceptions) return false;
  if (a.notes != b.notes) return false;
  if (a.failures.size() != b.failures.size()) return false;
  for (size_t i = 0; i < a.failures.size(); ++i) {
    const Failure& x = a.failures[i];
    const Failure& y = b.failures[i];
    if (x.graph6 != y.graph6 || x.spec != y.spec || x.stage != y.stage || x.witness != y.witness)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("corpus sizes") {
  CHECK(corpus(4).size() == 1 + 1 + 2 + 6);
  CHECK(corpus(5).size() == 31);
}

TEST_CASE("verify_theorem1 small corpus passes") {
  VerifyReport rep = verify_theorem1(4, default_catalog());
  INFO(describe(rep));
  CHECK(rep.failures.empty());
  CHECK(rep.instances > 0);
  CHECK(rep.exceptions > 0);  // K_3 with [K2,K2] et al.
  // every exception is one of the three documented shapes
  for (const auto& [key, count] : rep.notes)
    if (key.rfind("exception_", 0) == 0)
      CHECK((key == "exception_single_iso" || key == "exception_all_complete_h_complete" ||
             key == "exception_all_k2_odd_cycle"));
}

TEST_CASE("verify_lemma1 small corpus passes") {
  VerifyReport rep = verify_lemma1(5, default_catalog());
  INFO(describe(rep));
  CHECK(rep.failures.empty());
  CHECK(rep.instances > 0);
  CHECK(rep.notes.count("case_odd_cycle"));  // C_5 with K_2
  CHECK(rep.notes.count("case_complete"));   // K_4 with K_2
  CHECK(!rep.notes.count("case_violation"));
}

TEST_CASE("verify_bounds small corpus passes") {
  VerifyReport rep = verify_bounds(4, default_catalog());
  INFO(describe(rep));
  CHECK(rep.failures.empty());
  CHECK(rep.instances > 0);
}

TEST_CASE("verify_lovasz small corpus passes, including the fixed instances") {
  VerifyReport rep = verify_lovasz(4);
  INFO(describe(rep));
  CHECK(rep.failures.empty());
  CHECK(rep.instances > 0);
}

TEST_CASE("verify_catlin_brooks small corpus passes") {
  VerifyReport rep = verify_catlin_brooks(5);
  INFO(describe(rep));
  CHECK(rep.failures.empty());
  CHECK(rep.instances > 0);
}

TEST_CASE("verify_degenerate small corpus passes") {
  VerifyReport rep = verify_degenerate(5);
  INFO(describe(rep));
  CHECK(rep.failures.empty());
  CHECK(rep.instances > 0);  // n=5 has Delta >= 3 graphs with omega <= Delta
}

TEST_CASE("reports are identical at any worker count") {
  std::vector<Pattern> catalog = default_catalog();
  CHECK(same_report(verify_theorem1(4, catalog, 1), verify_theorem1(4, catalog, 3)));
  CHECK(same_report(verify_lemma1(4, catalog, 1), verify_lemma1(4, catalog, 4)));
  CHECK(same_report(verify_bounds(4, catalog, 2), verify_bounds(4, catalog, 5)));
  CHECK(same_report(verify_lovasz(4, 1), verify_lovasz(4, 3)));
  CHECK(same_report(verify_catlin_brooks(4, 1), verify_catlin_brooks(4, 3)));
  CHECK(same_report(verify_degenerate(4, 1), verify_degenerate(4, 3)));
}
