#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

using namespace arrangeval::testing;

constexpr std::uint64_t kSeed = 1709;

class PropertySuites : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { complexes = new std::vector<arrangeval::ArrangementComplex>(property_complexes(kSeed)); }
  static void TearDownTestSuite() {
    delete complexes;
    complexes = nullptr;
  }
  static std::vector<arrangeval::ArrangementComplex>* complexes;
};

std::vector<arrangeval::ArrangementComplex>* PropertySuites::complexes = nullptr;

void expect_ok(const SuiteResult& r) {
  EXPECT_GE(r.cases, 100u) << r.name;
  EXPECT_EQ(r.failures, 0u) << r.name << ": first failure " << r.first_failure;
}

TEST_F(PropertySuites, Cocycle) { expect_ok(cocycle_suite(*complexes, kSeed)); }
TEST_F(PropertySuites, Emergence) { expect_ok(emergence_suite(*complexes, kSeed)); }
TEST_F(PropertySuites, Heritage) { expect_ok(heritage_suite(*complexes, kSeed)); }
TEST_F(PropertySuites, Integration) { expect_ok(integration_suite(*complexes, kSeed)); }
TEST_F(PropertySuites, FullCycle) { expect_ok(full_cycle_suite(*complexes, kSeed)); }
TEST_F(PropertySuites, Reconstruction) { expect_ok(reconstruction_suite(*complexes, kSeed)); }
TEST_F(PropertySuites, Annihilation) { expect_ok(annihilation_suite(*complexes, kSeed)); }
TEST(PushforwardSuite, LatticeInvariance) { expect_ok(pushforward_suite(kSeed)); }

}  // namespace
