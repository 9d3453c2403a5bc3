#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "test_helpers.hpp"
#include "uncdyn/models.hpp"

using namespace uncdyn;
using test_helpers::entry_diff;

namespace {

constexpr double kPi = std::numbers::pi;

ObservablePair spin_pair(Observable a, Observable b) {
    return ObservablePair{a, b, ModelKind::spin};
}
ObservablePair osc_pair(Observable a, Observable b) {
    return ObservablePair{a, b, ModelKind::oscillator};
}

std::vector<double> grid(double start, double stop, std::size_t count) {
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
    return out;
}

}  // namespace

TEST_CASE("spin operators: printed matrices and commutation relations") {
    const SpinOperators one = spin_operators(1.0);
    CHECK(one.sx == ComplexMatrix::from_rows({{0.0, 0.5}, {0.5, 0.0}}));
    CHECK(one.sy == ComplexMatrix::from_rows({{0.0, complexd(0.0, -0.5)},
                                              {complexd(0.0, 0.5), 0.0}}));

    const SpinOperators two = spin_operators(2.0);
    CHECK(two.sz == ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}));

    for (double hbar : {1.0, 2.0, 0.7}) {
        const SpinOperators s = spin_operators(hbar);
        const complexd ih(0.0, hbar);
        CHECK(entry_diff(commutator(s.sx, s.sy), ih * s.sz) <= 1e-15);
        CHECK(entry_diff(commutator(s.sy, s.sz), ih * s.sx) <= 1e-15);
        CHECK(entry_diff(commutator(s.sz, s.sx), ih * s.sy) <= 1e-15);
    }

    CHECK_THROWS_AS(spin_operators(0.0), std::invalid_argument);
}

TEST_CASE("spin_state at the poles and the equator") {
    const StateVector up = spin_state(0.0);
    CHECK(up[0] == complexd(1.0, 0.0));
    CHECK(up[1] == complexd(0.0, 0.0));

    const StateVector down = spin_state(kPi);
    CHECK(std::abs(down[0]) <= 1e-16);
    CHECK(std::abs(down[1] - complexd(1.0, 0.0)) <= 1e-15);

    const StateVector eq = spin_state(kPi / 2);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(eq[0] - complexd(r, 0.0)) <= 1e-15);
    CHECK(std::abs(eq[1] - complexd(r, 0.0)) <= 1e-15);
}

TEST_CASE("spin commutator factor: equal times, self pair, frozen cosine") {
    const SpinModel model;
    CHECK(spin_commutator_factor(spin_pair(Observable::Sx, Observable::Sy), 1.3, 1.3, model) ==
          1.0);
    CHECK(spin_commutator_factor(spin_pair(Observable::Sx, Observable::Sx), 0.4, 0.4, model) ==
          0.0);
    CHECK(spin_commutator_factor(spin_pair(Observable::Sx, Observable::Sy), 0.3, 1.0, model) ==
          doctest::Approx(0.7648421872844885).epsilon(1e-15));
    CHECK(spin_commutator_factor(spin_pair(Observable::Sy, Observable::Sx), 0.3, 1.0, model) ==
          doctest::Approx(-0.7648421872844885).epsilon(1e-15));

    CHECK_THROWS_AS(
        spin_commutator_factor(osc_pair(Observable::X, Observable::P), 0.0, 0.0, model),
        std::invalid_argument);
}

TEST_CASE("spin analytic commutator agrees with the generic path on a grid") {
    const SpinModel model;  // omega = hbar = 1
    const SpinOperators ops = spin_operators(model.hbar);
    const QuantumSystem sys(complexd(model.omega, 0.0) * ops.sz, model.hbar);
    auto matrix_of = [&](Observable o) { return o == Observable::Sx ? ops.sx : ops.sy; };

    const std::vector<double> ts = grid(0.0, 2.0 * kPi, 21);
    for (Observable first : {Observable::Sx, Observable::Sy}) {
        for (Observable second : {Observable::Sx, Observable::Sy}) {
            const ObservablePair pair = spin_pair(first, second);
            for (double t1 : ts) {
                for (double t2 : ts) {
                    const ComplexMatrix numeric =
                        two_time_commutator(sys, matrix_of(first), t1, matrix_of(second), t2);
                    const ComplexMatrix analytic = spin_analytic_commutator(pair, t1, t2, model);
                    CHECK(entry_diff(numeric, analytic) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("spin analytic bound: equatorial state, equality values") {
    SpinModel model;
    model.theta = kPi / 2;
    for (double t1 : {0.0, 1.1}) {
        for (double t2 : {0.3, 2.8}) {
            for (auto pair : {spin_pair(Observable::Sx, Observable::Sy),
                              spin_pair(Observable::Sx, Observable::Sx)}) {
                CHECK(spin_analytic_bound(pair, t1, t2, model) <= 1e-16);
            }
        }
    }

    model.theta = 0.0;
    CHECK(spin_analytic_bound(spin_pair(Observable::Sx, Observable::Sy), 0.7, 0.7, model) ==
          doctest::Approx(0.25).epsilon(1e-15));
    CHECK(spin_analytic_bound(spin_pair(Observable::Sx, Observable::Sx), 0.0, kPi / 2, model) ==
          doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("spin analytic variance: poles, equator zero, frozen value") {
    SpinModel model;
    for (double t : {0.0, 0.9, 4.4}) {
        CHECK(spin_analytic_variance(Observable::Sx, t, model) == 0.5);
        CHECK(spin_analytic_variance(Observable::Sy, t, model) == 0.5);
    }

    model.theta = kPi / 2;
    CHECK(spin_analytic_variance(Observable::Sx, 0.0, model) <= 1e-8);

    model.theta = kPi / 3;
    CHECK(spin_analytic_variance(Observable::Sx, 0.0, model) ==
          doctest::Approx(0.25).epsilon(1e-15));

    CHECK_THROWS_AS(spin_analytic_variance(Observable::X, 0.0, model), std::invalid_argument);
}

TEST_CASE("spin variances agree with the generic path over theta and time") {
    for (double theta : {0.0, kPi / 6, kPi / 3, kPi / 2, 2 * kPi / 3, 5 * kPi / 6, kPi}) {
        SpinModel model;
        model.theta = theta;
        const SpinOperators ops = spin_operators(model.hbar);
        const QuantumSystem sys(complexd(model.omega, 0.0) * ops.sz, model.hbar);
        const StateVector psi = spin_state(theta);
        for (double t : grid(0.0, 2.0 * kPi, 9)) {
            CHECK(std::abs(variance(psi, sys, ops.sx, t) -
                           spin_analytic_variance(Observable::Sx, t, model)) <= 1e-12);
            CHECK(std::abs(variance(psi, sys, ops.sy, t) -
                           spin_analytic_variance(Observable::Sy, t, model)) <= 1e-12);
        }
    }
}

TEST_CASE("oscillator operators: ladder elements, commutator, Hamiltonian diagonal") {
    OscillatorModel model;
    model.fock_dim = 4;
    const OscillatorOperators ops = oscillator_operators(model);

    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(ops.x(0, 1) - complexd(r, 0.0)) <= 1e-15);
    CHECK(std::abs(ops.x(1, 0) - complexd(r, 0.0)) <= 1e-15);

    // [X, P] = i hbar I on levels 0 .. N-2
    const ComplexMatrix xp = commutator(ops.x, ops.p);
    for (std::size_t i = 0; i + 1 < model.fock_dim; ++i) {
        for (std::size_t j = 0; j + 1 < model.fock_dim; ++j) {
            const complexd expected = i == j ? complexd(0.0, 1.0) : complexd(0.0, 0.0);
            CHECK(std::abs(xp(i, j) - expected) <= 1e-15);
        }
    }

    CHECK(std::abs(ops.h(0, 0) - complexd(0.5, 0.0)) <= 1e-15);
    for (std::size_t n = 0; n + 1 < model.fock_dim; ++n) {
        CHECK(std::abs(ops.h(n, n) - complexd(n + 0.5, 0.0)) <= 1e-14);
    }
    // operator-built H corrupts the top diagonal entry by design
    CHECK(std::abs(ops.h(3, 3) - complexd(1.5, 0.0)) <= 1e-14);

    OscillatorModel too_small;
    too_small.fock_dim = 3;
    CHECK_THROWS_AS(oscillator_operators(too_small), std::invalid_argument);
}

TEST_CASE("oscillator state: amplitudes, norm, mean energy") {
    OscillatorModel model;
    model.fock_dim = 4;
    const StateVector psi = oscillator_state(model);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(psi[0] - complexd(r, 0.0)) <= 1e-16);
    CHECK(std::abs(psi[1] - complexd(r, 0.0)) <= 1e-16);
    CHECK(psi[2] == complexd(0.0, 0.0));
    CHECK(psi[3] == complexd(0.0, 0.0));

    double norm_sq = 0.0;
    for (std::size_t i = 0; i < psi.dim(); ++i) norm_sq += std::norm(psi[i]);
    CHECK(norm_sq == doctest::Approx(1.0).epsilon(1e-15));

    const complexd energy = expectation(psi, oscillator_operators(model).h);
    CHECK(std::abs(energy - complexd(1.0, 0.0)) <= 1e-14);
}

TEST_CASE("oscillator analytic bound: equal-time cross pair, self pairs") {
    const OscillatorModel model;
    CHECK(oscillator_analytic_bound(osc_pair(Observable::X, Observable::P), 0.8, 0.8, model) ==
          doctest::Approx(0.5).epsilon(1e-15));
    CHECK(oscillator_analytic_bound(osc_pair(Observable::X, Observable::X), 1.1, 1.1, model) ==
          0.0);
    CHECK(oscillator_analytic_bound(osc_pair(Observable::X, Observable::X), 0.0, kPi / 2, model) ==
          doctest::Approx(0.5).epsilon(1e-15));

    OscillatorModel scaled{2.0, 3.0, 0.5, 16};
    CHECK(oscillator_analytic_bound(osc_pair(Observable::P, Observable::P), 0.0, kPi / 6, scaled) ==
          doctest::Approx(0.5 * 0.5 * 2.0 * 3.0 * 1.0).epsilon(1e-14));

    CHECK_THROWS_AS(
        oscillator_analytic_bound(spin_pair(Observable::Sx, Observable::Sy), 0.0, 0.0, model),
        std::invalid_argument);
}

TEST_CASE("oscillator analytic variance: spot values") {
    const OscillatorModel model;
    CHECK(oscillator_analytic_variance(Observable::X, 0.0, model) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(oscillator_analytic_variance(Observable::P, 0.0, model) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(oscillator_analytic_variance(Observable::X, kPi / 2, model) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(oscillator_analytic_variance(Observable::Sx, 0.0, model),
                    std::invalid_argument);
}

TEST_CASE("oscillator numerics agree with the closed forms at fock_dim 16") {
    const OscillatorModel model;  // fock_dim 16, natural units
    const OscillatorOperators ops = oscillator_operators(model);
    const QuantumSystem sys(ops.h, model.hbar);
    const StateVector psi = oscillator_state(model);

    const std::vector<double> ts = grid(0.0, 2.0 * kPi, 21);
    for (double t1 : ts) {
        const ComplexMatrix x_t1 = evolve_observable(sys, ops.x, t1);
        CHECK(std::abs(variance_of_evolved(psi, x_t1) -
                       oscillator_analytic_variance(Observable::X, t1, model)) <= 1e-10);
        for (double t2 : ts) {
            const ComplexMatrix p_t2 = evolve_observable(sys, ops.p, t2);
            const complexd comm = expectation(psi, commutator(x_t1, p_t2));
            const complexd expected(0.0, std::cos(t2 - t1));
            CHECK(std::abs(comm - expected) <= 1e-10);
        }
    }
    for (double t : ts) {
        CHECK(std::abs(variance(psi, sys, ops.p, t) -
                       oscillator_analytic_variance(Observable::P, t, model)) <= 1e-10);
    }
}

TEST_CASE("small-delta limit: frozen values and error paths") {
    const OscillatorModel osc;
    CHECK(small_delta_limit_bound(osc_pair(Observable::X, Observable::X), 0.0, 0.001, osc) ==
          doctest::Approx(0.0005).epsilon(1e-15));
    CHECK(small_delta_limit_bound(osc_pair(Observable::X, Observable::X), 0.4, 0.4, osc) == 0.0);
    CHECK(small_delta_limit_bound(osc_pair(Observable::X, Observable::P), 0.9, 0.9, osc) == 0.5);

    const SpinModel spin;  // theta = 0, <Sz> = 1/2
    CHECK(small_delta_limit_bound(spin_pair(Observable::Sx, Observable::Sx), 0.0, 0.01, spin) ==
          doctest::Approx(0.0025).epsilon(1e-15));
    CHECK(small_delta_limit_bound(spin_pair(Observable::Sx, Observable::Sy), 0.2, 0.2, spin) ==
          doctest::Approx(0.25).epsilon(1e-15));

    CHECK_THROWS_AS(
        small_delta_limit_bound(spin_pair(Observable::Sx, Observable::Sy), 0.0, 0.5, spin),
        std::invalid_argument);
    CHECK_THROWS_AS(
        small_delta_limit_bound(osc_pair(Observable::P, Observable::X), 0.0, 0.5, osc),
        std::invalid_argument);
}

TEST_CASE("limit bound approximates the exact bound to cubic order") {
    SpinModel spin;
    spin.theta = kPi / 5;
    const double sz = 0.5 * spin.hbar * std::cos(spin.theta);
    const OscillatorModel osc;

    for (double dt : grid(1e-3, 0.1, 25)) {
        const ObservablePair sxx = spin_pair(Observable::Sx, Observable::Sx);
        const double spin_gap = std::abs(spin_analytic_bound(sxx, 0.0, dt, spin) -
                                         small_delta_limit_bound(sxx, 0.0, dt, spin));
        CHECK(spin_gap <= 0.5 * spin.hbar * std::abs(sz) * dt * dt * dt / 6.0);

        const ObservablePair xx = osc_pair(Observable::X, Observable::X);
        const double osc_gap = std::abs(oscillator_analytic_bound(xx, 0.0, dt, osc) -
                                        small_delta_limit_bound(xx, 0.0, dt, osc));
        CHECK(osc_gap <= 0.5 * dt * dt * dt / 6.0);
    }
}

TEST_CASE("equality of both sides at t1 = t2 = 0 for the (Sx, Sy) pair") {
    for (double theta : {0.0, kPi / 6, kPi / 3, kPi / 2, 2 * kPi / 3, 5 * kPi / 6, kPi}) {
        SpinModel model;
        model.theta = theta;
        const SpinOperators ops = spin_operators(model.hbar);
        const QuantumSystem sys(complexd(model.omega, 0.0) * ops.sz, model.hbar);
        const TwoTimeUncertaintyRecord rec =
            uncertainty_record(spin_state(theta), sys, ops.sx, 0.0, ops.sy, 0.0);
        CHECK(std::abs(rec.lhs - rec.rhs) <= 1e-12);
        CHECK(std::abs(rec.lhs - 0.25 * std::abs(std::cos(theta))) <= 1e-12);
    }
}

TEST_CASE("pair validity") {
    CHECK(pair_valid(spin_pair(Observable::Sx, Observable::Sy)));
    CHECK(!pair_valid(spin_pair(Observable::Sx, Observable::P)));
    CHECK(!pair_valid(osc_pair(Observable::Sy, Observable::P)));
    CHECK(!pair_valid(ObservablePair{Observable::Sx, Observable::Sy, ModelKind::custom}));
}
