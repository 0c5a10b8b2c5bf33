#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "merf/analysis.hpp"
#include "merf/constants.hpp"
#include "merf/kernel.hpp"
#include "oracles.hpp"

using namespace merf;

namespace {

GridFunction constant_candidate(const QuadratureConfig& cfg, double v) {
    return sample([&](double) { return v; }, cfg);
}

GridFunction erf_candidate(const QuadratureConfig& cfg) {
    return sample([](double x) { return std::erf(x); }, cfg);
}

}  // namespace

TEST_CASE("grid function structural validation") {
    QuadratureConfig cfg = default_quadrature(0.0);
    GridFunction h = erf_candidate(cfg);
    CHECK_NOTHROW(h.validate());

    GridFunction bad = h;
    bad.values.pop_back();
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = h;
    bad.grid[5] = bad.grid[4];
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = h;
    bad.grid[0] = 0.1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad.grid = {0.0, 1.0};
    bad.values = {0.0, 1.0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = h;
    bad.values[3] = std::nan("");
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("candidate set membership") {
    QuadratureConfig cfg = default_quadrature(0.0);
    GridFunction h = erf_candidate(cfg);
    CHECK(in_candidate_set(h));
    CHECK(in_candidate_set_star(h));  // erf(0) = 0

    GridFunction g = h;
    g.values[10] = 1.5;
    CHECK_FALSE(in_candidate_set(g));

    g = h;
    g.values[10] = -0.1;
    CHECK_FALSE(in_candidate_set(g));

    g = h;
    g.tail_value = 0.0;
    CHECK_FALSE(in_candidate_set(g));

    g = h;
    g.values[0] = 0.25;
    CHECK(in_candidate_set(g));
    CHECK_FALSE(in_candidate_set_star(g));
}

TEST_CASE("quadrature config invariant") {
    for (double delta : {0.0, 1.0, 3.0}) CHECK_NOTHROW(default_quadrature(delta).validate(delta));

    QuadratureConfig cfg;
    cfg.x_max = 3.0;  // erfc(3) is far above the tail budget
    CHECK_THROWS_AS(cfg.validate(0.0), std::invalid_argument);

    cfg = default_quadrature(0.0);
    cfg.n_points = 2;
    CHECK_THROWS_AS(cfg.validate(0.0), std::invalid_argument);
}

TEST_CASE("psi direct values") {
    QuadratureConfig cfg = default_quadrature(0.5);
    ProblemSpec spec = dirichlet_problem(2.0, 0.5);
    GridFunction ones = constant_candidate(cfg, 1.0);
    for (std::size_t i = 0; i < ones.size(); i += 500) CHECK(psi(ones, spec, i) == doctest::Approx(1.5).epsilon(1e-15));

    ProblemSpec nodelta = dirichlet_problem(2.0, 0.0);
    GridFunction h = erf_candidate(cfg);
    for (std::size_t i = 0; i < h.size(); i += 500) CHECK(psi(h, nodelta, i) == 1.0);

    ProblemSpec half = dirichlet_problem(2.0, 1.0);
    GridFunction halves = constant_candidate(cfg, 0.5);
    CHECK(psi(halves, half, 0) == doctest::Approx(1.25).epsilon(1e-15));
}

TEST_CASE("kernel reduces to a Gaussian for constant conductivity") {
    QuadratureConfig cfg = default_quadrature(1.0);
    ProblemSpec spec = dirichlet_problem(1.0, 1.0);

    GridFunction zeros = constant_candidate(cfg, 0.0);
    GridFunction f = kernel_f(zeros, spec);
    CHECK(f.values.front() == 1.0);
    for (std::size_t i = 0; i < f.size(); i += 100)
        CHECK(f.values[i] == doctest::Approx(std::exp(-f.grid[i] * f.grid[i])).epsilon(1e-13));

    GridFunction ones = constant_candidate(cfg, 1.0);
    GridFunction g = kernel_f(ones, spec);
    for (std::size_t i = 0; i < g.size(); i += 100)
        CHECK(g.values[i] ==
              doctest::Approx(std::exp(-g.grid[i] * g.grid[i] / 2.0) / 2.0).epsilon(1e-13));
}

TEST_CASE("kernel envelope holds node-wise") {
    QuadratureConfig cfg = default_quadrature(0.1);
    ProblemSpec spec = dirichlet_problem(1.0, 0.1);
    GridFunction h = erf_candidate(cfg);
    GridFunction f = kernel_f(h, spec);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double x2 = f.grid[i] * f.grid[i];
        CHECK(f.values[i] >= std::exp(-x2) / 1.1);
        CHECK(f.values[i] <= std::exp(-x2 / 1.1));
        CHECK(f.values[i] > 0.0);
    }
}

TEST_CASE("kernel rejects non-candidates") {
    QuadratureConfig cfg = default_quadrature(0.1);
    ProblemSpec spec = dirichlet_problem(1.0, 0.1);
    GridFunction h = erf_candidate(cfg);
    h.values[7] = 1.7;
    CHECK_THROWS_AS(kernel_f(h, spec), std::invalid_argument);
    CHECK_THROWS_AS(kernel_integrals(h, spec), std::invalid_argument);
}

TEST_CASE("inner cumulative stays between the constant-conductivity parabolas") {
    QuadratureConfig cfg = default_quadrature(0.5);
    ProblemSpec spec = dirichlet_problem(2.0, 0.5);
    std::mt19937_64 rng(17);
    const auto grid = make_uniform_grid(cfg);
    for (int t = 0; t < 5; ++t) {
        GridFunction h = random_candidate(rng, grid, false);
        const auto I = inner_cumulative(h, spec);
        for (std::size_t i = 0; i < grid.size(); i += 50) {
            const double x2 = grid[i] * grid[i];
            CHECK(I[i] >= x2 / (2.0 * 1.5) - 1e-13);
            CHECK(I[i] <= x2 / 2.0 + 1e-13);
        }
    }
}

TEST_CASE("running trapezoid integral") {
    QuadratureConfig cfg = default_quadrature(0.0);
    cfg.n_points = 201;

    GridFunction one = sample([](double) { return 1.0; }, cfg, 0.0);
    GridFunction cum = integral_0_to_x(one);
    for (std::size_t i = 0; i < cum.size(); i += 20)
        CHECK(cum.values[i] == doctest::Approx(cum.grid[i]).epsilon(1e-14));

    GridFunction zero = sample([](double) { return 0.0; }, cfg, 0.0);
    cum = integral_0_to_x(zero);
    for (double v : cum.values) CHECK(v == 0.0);

    cfg.n_points = 2001;
    GridFunction gauss = sample([](double x) { return std::exp(-x * x); }, cfg, 0.0);
    cum = integral_0_to_x(gauss);
    CHECK(cum.values.front() == 0.0);
    const double ref = oracle::integrate([](double x) { return std::exp(-x * x); }, 0.0, 6.0);
    CHECK(std::abs(cum.values.back() - ref) <= 1e-10);
    CHECK(std::abs(cum.values.back() - kSqrtPi / 2.0) <= 1e-10);
}

TEST_CASE("running integral is monotone for non-negative integrands") {
    QuadratureConfig cfg = default_quadrature(0.3);
    ProblemSpec spec = dirichlet_problem(1.5, 0.3);
    std::mt19937_64 rng(23);
    const auto grid = make_uniform_grid(cfg);
    for (int t = 0; t < 5; ++t) {
        GridFunction f = kernel_f(random_candidate(rng, grid, false), spec);
        GridFunction cum = integral_0_to_x(f);
        for (std::size_t i = 1; i < cum.size(); ++i) CHECK(cum.values[i] >= cum.values[i - 1]);
    }
}

TEST_CASE("total integral closed forms and bounds") {
    // Psi == 1: Gaussian integral.
    {
        QuadratureConfig cfg = default_quadrature(0.0);
        ProblemSpec spec = dirichlet_problem(1.0, 0.0);
        GridFunction zeros = constant_candidate(cfg, 0.0);
        CHECK(std::abs(integral_0_to_inf(zeros, spec) - kSqrtPi / 2.0) <= 1e-10);
    }
    // Psi == 4: closed form sqrt(pi)/4.
    {
        QuadratureConfig cfg = default_quadrature(3.0);
        ProblemSpec spec = dirichlet_problem(2.0, 3.0);
        GridFunction ones = constant_candidate(cfg, 1.0);
        CHECK(std::abs(integral_0_to_inf(ones, spec) - kSqrtPi / 4.0) <= 1e-10);
    }
    // Envelope bounds for random candidates at delta = 1.
    {
        QuadratureConfig cfg = default_quadrature(1.0);
        ProblemSpec spec = dirichlet_problem(1.0, 1.0);
        std::mt19937_64 rng(31);
        const auto grid = make_uniform_grid(cfg);
        for (int t = 0; t < 10; ++t) {
            const double total = integral_0_to_inf(random_candidate(rng, grid, false), spec);
            CHECK(total >= kSqrtPi / 4.0 - 1e-12);
            CHECK(total <= std::sqrt(2.0) * kSqrtPi / 2.0 + 1e-12);
        }
    }
}

TEST_CASE("kernel integrals agree with the oracle quadrature") {
    QuadratureConfig cfg = default_quadrature(1.0);
    ProblemSpec spec = dirichlet_problem(1.0, 1.0);
    GridFunction h = erf_candidate(cfg);
    const auto ki = kernel_integrals(h, spec);

    // The oracle integrates the same continuous integrand independently.
    auto psi_of = [&](double x) { return 1.0 + std::erf(x); };
    auto inner = [&](double x) {
        return oracle::integrate([&](double t) { return t / psi_of(t); }, 0.0, x, 1e-14);
    };
    for (std::size_t i : {100u, 500u, 1000u, 1800u}) {
        const double x = ki.f.grid[i];
        const double fx = std::exp(-2.0 * inner(x)) / psi_of(x);
        CHECK(ki.f.values[i] == doctest::Approx(fx).epsilon(1e-5));  // inner rule is O(dx^2)
    }
    const double total_ref =
        oracle::integrate([&](double x) { return std::exp(-2.0 * inner(x)) / psi_of(x); }, 0.0,
                          cfg.x_max, 1e-12);
    CHECK(std::abs(ki.total - total_ref) <= 1e-5);
}

TEST_CASE("grid refinement changes the total integral at second order") {
    const double p = 1.0, delta = 1.0;
    ProblemSpec spec = dirichlet_problem(p, delta);
    auto total_at = [&](std::size_t n_points) {
        QuadratureConfig cfg = default_quadrature(delta);
        cfg.n_points = n_points;
        return integral_0_to_inf(sample([](double x) { return std::erf(x); }, cfg), spec);
    };
    const double t250 = total_at(251), t500 = total_at(501), t1000 = total_at(1001),
                 t2000 = total_at(2001);
    const double d250 = std::abs(t250 - t500);
    const double d500 = std::abs(t500 - t1000);
    const double d1000 = std::abs(t1000 - t2000);
    const double fitted_c = d250 * 250.0 * 250.0;
    CHECK(d500 * 500.0 * 500.0 <= 1.3 * fitted_c);
    CHECK(d1000 * 1000.0 * 1000.0 <= 1.3 * fitted_c);
    CHECK(d250 / d500 == doctest::Approx(4.0).epsilon(0.25));
}
