// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "kronwave/kronwave.h"

namespace {

struct Config {
    kw_config* ptr = nullptr;
    Config() { EXPECT_EQ(kw_config_create(&ptr), KW_OK); }
    ~Config() { kw_config_destroy(ptr); }
    void set(const char* k, const char* v) { ASSERT_EQ(kw_config_set(ptr, k, v), KW_OK) << kw_last_error(); }
};

}  // namespace

TEST(CApi, VersionAndStatusStrings) {
    EXPECT_NE(std::string{kw_version()}, "");
    EXPECT_NE(std::string{kw_status_string(KW_ERR_CONFIG)}, std::string{kw_status_string(KW_OK)});
}

TEST(CApi, ConfigErrorsMapToStatusCodes) {
    Config c;
    EXPECT_EQ(kw_config_set(c.ptr, "bogus", "1"), KW_ERR_CONFIG);
    EXPECT_NE(std::string{kw_last_error()}.find("bogus"), std::string::npos);
    EXPECT_EQ(kw_config_load_file(c.ptr, "/nonexistent/kronwave.cfg"), KW_ERR_IO);
    c.set("tau", "-1");
    EXPECT_EQ(kw_config_validate(c.ptr), KW_ERR_CONFIG);
    EXPECT_EQ(kw_config_set(nullptr, "tau", "1"), KW_ERR_INVALID_ARGUMENT);
    c.set("tau", "0.01");
    c.set("elements", "32");
    EXPECT_EQ(kw_config_validate(c.ptr), KW_ERR_CONFIG);
    c.set("full", "true");
    EXPECT_EQ(kw_config_validate(c.ptr), KW_OK);
}

TEST(CApi, EchoAndGetUseCallerBuffers) {
    Config c;
    c.set("problem", "pwave2d");
    c.set("elements", "6,4");
    size_t need = 0;
    EXPECT_EQ(kw_config_echo(c.ptr, nullptr, 0, &need), KW_OK);
    ASSERT_GT(need, 1u);
    std::string buf(need, '\0');
    EXPECT_EQ(kw_config_echo(c.ptr, buf.data(), buf.size(), &need), KW_OK);
    EXPECT_NE(buf.find("problem = pwave2d"), std::string::npos);
    char small[4];
    EXPECT_EQ(kw_config_get(c.ptr, "problem", small, sizeof small, &need), KW_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(need, 8u);
    char value[16];
    EXPECT_EQ(kw_config_get(c.ptr, "problem", value, sizeof value, nullptr), KW_OK);
    EXPECT_STREQ(value, "pwave2d");

    int counts[3] = {0, 0, 0};
    int dim = 0;
    EXPECT_EQ(kw_config_elements(c.ptr, counts, 3, &dim), KW_OK);
    EXPECT_EQ(dim, 2);
    EXPECT_EQ(counts[0], 6);
    EXPECT_EQ(counts[1], 4);
    long total = 0;
    EXPECT_EQ(kw_config_total_elements(c.ptr, &total), KW_OK);
    EXPECT_EQ(total, 24);
}

TEST(CApi, PwaveHandleConservesEnergy) {
    Config c;
    c.set("problem", "pwave2d");
    c.set("elements", "8");
    kw_pwave* sim = nullptr;
    ASSERT_EQ(kw_pwave_create(c.ptr, &sim), KW_OK) << kw_last_error();
    double k0, p0, e0;
    ASSERT_EQ(kw_pwave_energies(sim, &k0, &p0, &e0), KW_OK);
    EXPECT_GT(e0, 0.0);
    ASSERT_EQ(kw_pwave_step(sim, 25), KW_OK);
    double k1, p1, e1, t;
    int step = 0;
    ASSERT_EQ(kw_pwave_energies(sim, &k1, &p1, &e1), KW_OK);
    ASSERT_EQ(kw_pwave_time(sim, &t, &step), KW_OK);
    EXPECT_EQ(step, 25);
    EXPECT_NEAR(t, 0.25, 1e-12);
    EXPECT_NEAR(e1, e0, 1e-4 * e0);  // the split step conserves a modified energy
    size_t n = 0;
    ASSERT_EQ(kw_pwave_size(sim, &n), KW_OK);
    EXPECT_EQ(n, 100u);
    std::vector<double> u(n);
    EXPECT_EQ(kw_pwave_copy_displacement(sim, u.data(), n - 1), KW_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(kw_pwave_copy_displacement(sim, u.data(), n), KW_OK);
    EXPECT_EQ(kw_pwave_step(sim, -1), KW_ERR_INVALID_ARGUMENT);
    kw_pwave_destroy(sim);
}

TEST(CApi, ElasticHandle) {
    Config c;
    c.set("problem", "elasticity2d");
    c.set("elements", "6");
    kw_elastic* sim = nullptr;
    ASSERT_EQ(kw_elastic_create(c.ptr, &sim), KW_OK) << kw_last_error();
    ASSERT_EQ(kw_elastic_step(sim, 10), KW_OK);
    double s0 = 0.0, s1 = 0.0;
    ASSERT_EQ(kw_elastic_star_norm(sim, 1, &s0), KW_OK);
    ASSERT_EQ(kw_elastic_step(sim, 10), KW_OK);
    ASSERT_EQ(kw_elastic_star_norm(sim, 1, &s1), KW_OK);
    EXPECT_NEAR(s1, s0, 1e-10 * s0);
    double t = 0.0;
    int step = 0;
    ASSERT_EQ(kw_elastic_time(sim, &t, &step), KW_OK);
    EXPECT_EQ(step, 21);
    size_t n = 0;
    ASSERT_EQ(kw_elastic_size(sim, &n), KW_OK);
    EXPECT_EQ(n, 64u);
    std::vector<double> x(n), y(n);
    EXPECT_EQ(kw_elastic_copy_displacement(sim, x.data(), y.data(), n), KW_OK);
    kw_elastic_destroy(sim);
}

TEST(CApi, DriversFillCallerArrays) {
    Config c;
    c.set("problem", "pwave2d");
    c.set("elements", "6");
    c.set("steps", "10");
    c.set("out", "");
    kw_run_summary s{};
    ASSERT_EQ(kw_run_pwave(c.ptr, &s), KW_OK) << kw_last_error();
    EXPECT_EQ(s.records, 11);
    EXPECT_LT(s.relative_drift, 1e-4);

    c.set("taus", "0,0.5,5");
    double taus[8], radii[8], maxr = 0.0;
    int count = 0;
    ASSERT_EQ(kw_run_stability(c.ptr, taus, radii, 8, &count, &maxr), KW_OK) << kw_last_error();
    EXPECT_EQ(count, 3);
    EXPECT_LE(maxr, 1.0 + 1e-8);

    c.set("levels", "2");
    double errs[8], slope = 0.0;
    EXPECT_EQ(kw_run_convergence(c.ptr, taus, errs, 8, &count, &slope), KW_ERR_CONFIG);
}
