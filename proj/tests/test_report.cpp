#include <gtest/gtest.h>

#include <cstdlib>

#include "support.hpp"

using namespace kef;

TEST(Report, FieldsAreConsistent) {
  const InvariantReport r = make_report(analyze("c5", testing_support::cycle(5)));
  EXPECT_EQ(r.alpha, 2);
  EXPECT_EQ(r.mu, 2);
  EXPECT_EQ(r.kappa, 1);
  EXPECT_EQ(r.rho_v, 5);
  EXPECT_EQ(r.parity_class, "almost_bipartite");
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(*r.kappa, r.n - *r.alpha - r.mu);
  EXPECT_EQ(*r.xi, static_cast<int>(r.core->size()));
  EXPECT_EQ(*r.epsilon, static_cast<int>(r.ker->size()));
  EXPECT_EQ(*r.beta, static_cast<int>(r.diadem->size()));
}

TEST(Report, JsonRoundTripIsIdentity) {
  for (const Fixture& f : fixtures()) {
    const InvariantReport r = make_report(analyze(f.name, f.graph()));
    const std::string text = report_to_string(r);
    const InvariantReport back = Json::parse(text).get<InvariantReport>();
    EXPECT_EQ(back, r) << f.name;
    EXPECT_EQ(report_to_string(back), text);
  }
}

TEST(Report, PartialReportsMarkSkippedFields) {
  const InvariantReport r = make_report(analyze("c25", testing_support::cycle(25)));
  EXPECT_FALSE(r.complete);
  EXPECT_FALSE(r.skipped.empty());
  EXPECT_FALSE(r.d.has_value());
  EXPECT_EQ(r.alpha, 12);
  const Json j = r;
  EXPECT_TRUE(j.at("d").is_null());
  EXPECT_EQ(j.get<InvariantReport>(), r);
}

TEST(Report, RejectsForeignDocuments) {
  EXPECT_THROW(Json::parse(R"({"n":3})").get<InvariantReport>(), InputError);
  Json j = make_report(analyze("c5", testing_support::cycle(5)));
  j.erase("mu");
  EXPECT_THROW(j.get<InvariantReport>(), InputError);
}

TEST(Caps, EnvironmentOverridesDefaults) {
  ::setenv("KEF_CAPS_JSON", R"({"solver_n":12,"crit_count":5})", 1);
  const Caps c = caps_from_environment();
  EXPECT_EQ(c.solver_n, 12);
  EXPECT_EQ(c.crit_count, 5);
  EXPECT_EQ(c.enumeration_n, Caps{}.enumeration_n);
  ::setenv("KEF_CAPS_JSON", R"({"solver":12})", 1);
  EXPECT_THROW(caps_from_environment(), InputError);
  ::setenv("KEF_CAPS_JSON", "{", 1);
  EXPECT_THROW(caps_from_environment(), InputError);
  ::setenv("KEF_CAPS_JSON", R"({"solver_n":-1})", 1);
  EXPECT_THROW(caps_from_environment(), InputError);
  ::unsetenv("KEF_CAPS_JSON");
  EXPECT_EQ(caps_from_environment(), Caps{});
}
