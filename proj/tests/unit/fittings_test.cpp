#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "pipefit/angles.hpp"
#include "pipefit/error.hpp"
#include "pipefit/fittings.hpp"

using namespace pipefit;

namespace {

ErrorKind kind_of_load(const std::string& doc) {
  std::istringstream in(doc);
  try {
    load_catalog(in);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "catalog loaded: " << doc;
  return ErrorKind::Degenerate;
}

std::string message_of_load(const std::string& doc) {
  std::istringstream in(doc);
  try {
    load_catalog(in);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(StandardCatalog, Contents) {
  const auto c = standard_catalog();
  EXPECT_NEAR(rad_to_deg(c.hub("true-wye").arm_axis_angle), 90.0, 1e-12);
  EXPECT_EQ(c.hub("true-wye").arm_count, 3);
  EXPECT_NEAR(rad_to_deg(c.hub("cube-corner").arm_axis_angle), 54.7356, 1e-4);
  EXPECT_EQ(c.hub("four-way-plus").arm_count, 4);
  EXPECT_EQ(c.hub("five-way-planar").arm_count, 5);
  EXPECT_DOUBLE_EQ(c.hub("true-wye").arm_length, 2.5);

  ASSERT_EQ(c.elbows.size(), 4u);
  const double bends[] = {11.25, 22.5, 45.0, 90.0};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(rad_to_deg(c.elbows[i].bend_angle), bends[i], 1e-12);
    EXPECT_EQ(c.elbows[i].takeoff, 0.0);
    EXPECT_EQ(c.elbows[i].socket_depth, 0.0);
  }
  EXPECT_NO_THROW(validate_catalog(c));
}

TEST(StandardCatalog, ReferentiallyTransparent) { EXPECT_EQ(standard_catalog(), standard_catalog()); }

TEST(Catalog, LookupUnknownName) {
  const auto c = standard_catalog();
  EXPECT_EQ(c.find_hub("tee"), nullptr);
  EXPECT_THROW(c.hub("tee"), std::out_of_range);
  EXPECT_THROW(c.elbow("elbow-30"), std::out_of_range);
}

TEST(LoadCatalog, MinimalDocument) {
  std::istringstream in(R"({"hubs":[{"name":"wye","arm_count":3,"arm_axis_angle_deg":90,"arm_length":2.5,"socket_depth":0}],
                            "elbows":[{"name":"e22","bend_angle_deg":22.5,"takeoff":0,"socket_depth":0}]})");
  const auto c = load_catalog(in);
  ASSERT_EQ(c.hubs.size(), 1u);
  ASSERT_EQ(c.elbows.size(), 1u);
  EXPECT_NEAR(c.hubs[0].arm_axis_angle, kPi / 2, 1e-15);
  EXPECT_NEAR(c.elbows[0].bend_angle, kPi / 8, 1e-15);
}

TEST(LoadCatalog, DuplicateHubNamed) {
  const std::string doc = R"({"hubs":[{"name":"wye","arm_count":3,"arm_axis_angle_deg":90},
                                       {"name":"wye","arm_count":3,"arm_axis_angle_deg":90}],
                              "elbows":[{"name":"e","bend_angle_deg":22.5}]})";
  EXPECT_EQ(kind_of_load(doc), ErrorKind::CatalogValidation);
  EXPECT_NE(message_of_load(doc).find("'wye'"), std::string::npos);
}

TEST(LoadCatalog, AlphaOutOfRange) {
  const std::string doc = R"({"hubs":[{"name":"odd","arm_count":3,"arm_axis_angle_deg":120}],
                              "elbows":[{"name":"e","bend_angle_deg":22.5}]})";
  EXPECT_EQ(kind_of_load(doc), ErrorKind::CatalogValidation);
  EXPECT_NE(message_of_load(doc).find("'odd'"), std::string::npos);
}

TEST(LoadCatalog, ValidationErrors) {
  EXPECT_EQ(kind_of_load(R"({"hubs":[],"elbows":[]})"), ErrorKind::CatalogValidation);
  EXPECT_EQ(kind_of_load(R"({"hubs":[{"name":"h","arm_count":2,"arm_axis_angle_deg":90}],"elbows":[{"name":"e","bend_angle_deg":1}]})"),
            ErrorKind::CatalogValidation);
  EXPECT_EQ(kind_of_load(R"({"hubs":[{"name":"h","arm_count":3,"arm_axis_angle_deg":90,"arm_length":0}],"elbows":[{"name":"e","bend_angle_deg":1}]})"),
            ErrorKind::CatalogValidation);
  EXPECT_EQ(kind_of_load(R"({"hubs":[],"elbows":[{"name":"e","bend_angle_deg":180}]})"),
            ErrorKind::CatalogValidation);
  EXPECT_EQ(kind_of_load(R"({"hubs":[],"elbows":[{"name":"e","bend_angle_deg":10,"takeoff":-1}]})"),
            ErrorKind::CatalogValidation);
  EXPECT_EQ(kind_of_load(R"({"hubs":[],"elbows":[{"name":"e","bend_angle_deg":10},{"name":"e","bend_angle_deg":20}]})"),
            ErrorKind::CatalogValidation);
}

TEST(LoadCatalog, ParseErrors) {
  EXPECT_EQ(kind_of_load("not json"), ErrorKind::CatalogParse);
  EXPECT_EQ(kind_of_load("[]"), ErrorKind::CatalogParse);
  EXPECT_EQ(kind_of_load(R"({"hubs":[]})"), ErrorKind::CatalogParse);
  EXPECT_EQ(kind_of_load(R"({"hubs":[],"elbows":[],"pipes":[]})"), ErrorKind::CatalogParse);
  EXPECT_EQ(kind_of_load(R"({"hubs":[],"elbows":[{"name":"e","bend_angle_deg":10,"color":"white"}]})"),
            ErrorKind::CatalogParse);
  EXPECT_EQ(kind_of_load(R"({"hubs":[],"elbows":[{"name":"e","bend_angle_deg":"ten"}]})"), ErrorKind::CatalogParse);
  EXPECT_EQ(kind_of_load(R"({"hubs":[],"elbows":[{"bend_angle_deg":10}]})"), ErrorKind::CatalogParse);
  EXPECT_EQ(kind_of_load(R"({"hubs":[{"name":"h","arm_count":3.5,"arm_axis_angle_deg":90}],"elbows":[{"name":"e","bend_angle_deg":1}]})"),
            ErrorKind::CatalogParse);
  EXPECT_THROW(load_catalog_file("/nonexistent/catalog.json"), Error);
}

TEST(LoadCatalog, RoundTripProperty) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> alpha(1e-3, 90.0), bend(0.0, 179.9), len(0.01, 50.0), depth(0.0, 3.0);
  std::uniform_int_distribution<int> arms(3, 8), count(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    Catalog c;
    for (int i = 0, n = count(rng); i < n; ++i)
      c.hubs.push_back({"hub-" + std::to_string(i), arms(rng), deg_to_rad(alpha(rng)), len(rng), depth(rng)});
    for (int i = 0, n = count(rng); i < n; ++i)
      c.elbows.push_back({"elbow-" + std::to_string(i), deg_to_rad(bend(rng)), depth(rng), depth(rng)});
    validate_catalog(c);

    std::istringstream in(serialize_catalog(c));
    const auto back = load_catalog(in);
    ASSERT_EQ(back.hubs.size(), c.hubs.size());
    ASSERT_EQ(back.elbows.size(), c.elbows.size());
    for (std::size_t i = 0; i < c.hubs.size(); ++i) {
      EXPECT_EQ(back.hubs[i].name, c.hubs[i].name);
      EXPECT_EQ(back.hubs[i].arm_count, c.hubs[i].arm_count);
      EXPECT_NEAR(back.hubs[i].arm_axis_angle, c.hubs[i].arm_axis_angle, 1e-12);
      EXPECT_EQ(back.hubs[i].arm_length, c.hubs[i].arm_length);
      EXPECT_EQ(back.hubs[i].socket_depth, c.hubs[i].socket_depth);
    }
    for (std::size_t i = 0; i < c.elbows.size(); ++i) {
      EXPECT_EQ(back.elbows[i].name, c.elbows[i].name);
      EXPECT_NEAR(back.elbows[i].bend_angle, c.elbows[i].bend_angle, 1e-12);
      EXPECT_EQ(back.elbows[i].takeoff, c.elbows[i].takeoff);
      EXPECT_EQ(back.elbows[i].socket_depth, c.elbows[i].socket_depth);
    }
  }
}
