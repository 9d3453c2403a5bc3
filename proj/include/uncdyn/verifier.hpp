#pragma once

#include <functional>
#include <optional>

#include "uncdyn/dynamics.hpp"
#include "uncdyn/models.hpp"

namespace uncdyn {

/// Inclusive arithmetic grid; count == 1 means the single point `start`.
struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    std::size_t count = 1;
};

double grid_point(const GridSpec& grid, std::size_t i);

struct Tolerances {
    double ineq = 1e-12;
    double oracle = 1e-10;
};

/// Explicit matrices for scenarios outside the two built-in models.
struct CustomSystem {
    ComplexMatrix hamiltonian;
    ComplexMatrix observable_a;
    ComplexMatrix observable_b;
    std::vector<complexd> state;
    double hbar = 1.0;
};

/// Declarative sweep description: which model, which pair, which time grids.
struct Scenario {
    ModelKind kind = ModelKind::spin;
    SpinModel spin;
    OscillatorModel oscillator;
    std::optional<std::vector<complexd>> oscillator_state;  // default (|0>+|1>)/sqrt(2)
    std::optional<CustomSystem> custom;
    std::optional<ObservablePair> pair;  // spin / oscillator kinds only
    GridSpec t1_grid;
    GridSpec t2_grid;
    Tolerances tolerances;
};

void validate(const Scenario& scenario);

/// Scenario lowered to the generic machinery: system, state, observables and
/// (for the built-in models) the closed-form oracles.
struct PreparedScenario {
    QuantumSystem system;
    StateVector state;
    ComplexMatrix observable_a;
    ComplexMatrix observable_b;
    bool has_oracle = false;
    std::function<double(double)> analytic_variance_a;
    std::function<double(double)> analytic_variance_b;
    std::function<double(double, double)> analytic_bound;
};

PreparedScenario prepare(const Scenario& scenario);

/// Records in canonical order (t1-major, then t2) regardless of how the grid
/// was evaluated.
struct SweepReport {
    std::size_t t1_count = 0;
    std::size_t t2_count = 0;
    std::vector<TwoTimeUncertaintyRecord> records;
    bool has_oracle = false;
    std::vector<double> analytic_lhs;
    std::vector<double> analytic_rhs;
    double max_oracle_error = 0.0;
    double min_slack = 0.0;
    std::vector<std::size_t> violations;  // indices with slack < -ineq tolerance
};

/// Evaluates every (t1, t2) grid point. Grid points are independent, so the
/// loop runs under OpenMP when `parallel` is set; the serial path computes
/// the identical report and is kept for testing and benchmarking.
SweepReport run_sweep(const Scenario& scenario, bool parallel = true);

struct OracleErrors {
    double lhs_err = 0.0;
    double rhs_err = 0.0;
};

/// Max |numeric - analytic| over the report; requires oracle columns.
OracleErrors compare_numeric_analytic(const SweepReport& report);

struct InequalityCheck {
    bool pass = true;
    std::vector<std::size_t> violations;
};

/// Fails iff any record has slack < -tol.
InequalityCheck check_inequality(const SweepReport& report, double tol);

/// ||(A(t+h) - A(t-h)) / 2h - heisenberg_rhs(sys, a, t)||_max
double finite_difference_check(const QuantumSystem& sys, const ComplexMatrix& a, double t,
                               double h);

}  // namespace uncdyn
