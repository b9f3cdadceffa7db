#include <gtest/gtest.h>

#include "greenkern/records.hpp"

using namespace greenkern;

namespace {
OutputRecord sample_record() {
    OutputRecord r;
    r.model = "free3d";
    r.params = {{"q", 0.0}};
    r.zeta_re = -1.0;
    r.zeta_im = 0.25;
    r.coords = {1.0 / 3.0, 0.0};
    r.value_re = 0.029274915762159584;
    r.value_im = -1e-300;
    r.abs_error = 1e-12;
    r.method = "closed_form";
    return r;
}
}  // namespace

TEST(Records, CsvIsBitStable) {
    const OutputRecord r = sample_record();
    const std::string a = to_csv(r), b = to_csv(r);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a,
              "free3d,q=0.0000000000000000e+00,-1.0000000000000000e+00,"
              "2.5000000000000000e-01,3.3333333333333331e-01;0.0000000000000000e+00,"
              "2.9274915762159584e-02,-1.0000000000000000e-300,9.9999999999999998e-13,"
              "closed_form");
    EXPECT_EQ(record_csv_header(),
              "model,params,zeta_re,zeta_im,coords,value_re,value_im,abs_error,method");
}

TEST(Records, JsonRoundTripExact) {
    const OutputRecord r = sample_record();
    const nlohmann::json j = nlohmann::json::parse(to_json(r).dump());
    const OutputRecord back = record_from_json(j);
    EXPECT_EQ(back.model, r.model);
    EXPECT_EQ(back.params.at("q"), r.params.at("q"));
    EXPECT_EQ(back.zeta_re, r.zeta_re);
    EXPECT_EQ(back.zeta_im, r.zeta_im);
    ASSERT_EQ(back.coords.size(), r.coords.size());
    for (size_t i = 0; i < r.coords.size(); ++i) EXPECT_EQ(back.coords[i], r.coords[i]);
    EXPECT_EQ(back.value_re, r.value_re);
    EXPECT_EQ(back.value_im, r.value_im);
    EXPECT_EQ(back.abs_error, r.abs_error);
    EXPECT_EQ(back.method, r.method);
}
