#include "uncdyn/verifier.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace uncdyn {

double grid_point(const GridSpec& grid, std::size_t i) {
    if (grid.count <= 1) return grid.start;
    return grid.start + (grid.stop - grid.start) * static_cast<double>(i) /
                            static_cast<double>(grid.count - 1);
}

namespace {

void validate_grid(const GridSpec& grid, const char* name) {
    if (grid.count < 1) {
        throw std::invalid_argument(std::string("Scenario: ") + name + ".count must be >= 1");
    }
    if (!std::isfinite(grid.start) || !std::isfinite(grid.stop)) {
        throw std::invalid_argument(std::string("Scenario: ") + name + " endpoints must be finite");
    }
}

// Truncated variance formulas degrade silently once the state reaches the
// corrupted top levels, so scenario states must stay at or below
// fock_dim - 4.
void validate_oscillator_state_support(const std::vector<complexd>& amplitudes,
                                       std::size_t fock_dim) {
    if (amplitudes.size() != fock_dim) {
        throw std::invalid_argument("Scenario: state has " + std::to_string(amplitudes.size()) +
                                    " amplitudes but fock_dim is " + std::to_string(fock_dim));
    }
    for (std::size_t n = 0; n < amplitudes.size(); ++n) {
        if (n + 4 > fock_dim && std::abs(amplitudes[n]) > 1e-15) {
            throw std::invalid_argument(
                "Scenario: state has support on level " + std::to_string(n) +
                ", above the validated range (levels <= fock_dim - 4 = " +
                std::to_string(fock_dim - 4) + ")");
        }
    }
}

}  // namespace

void validate(const Scenario& scenario) {
    validate_grid(scenario.t1_grid, "t1_grid");
    validate_grid(scenario.t2_grid, "t2_grid");
    if (!(scenario.tolerances.ineq > 0.0) || !(scenario.tolerances.oracle > 0.0)) {
        throw std::invalid_argument("Scenario: tolerances must be positive");
    }

    switch (scenario.kind) {
        case ModelKind::spin: {
            if (!scenario.pair) throw std::invalid_argument("Scenario: spin scenario needs a pair");
            require_pair(*scenario.pair, ModelKind::spin, "Scenario");
            if (!(scenario.spin.omega > 0.0) || !(scenario.spin.hbar > 0.0)) {
                throw std::invalid_argument("Scenario: spin omega and hbar must be positive");
            }
            break;
        }
        case ModelKind::oscillator: {
            if (!scenario.pair) {
                throw std::invalid_argument("Scenario: oscillator scenario needs a pair");
            }
            require_pair(*scenario.pair, ModelKind::oscillator, "Scenario");
            uncdyn::validate(scenario.oscillator);
            if (scenario.oscillator_state) {
                validate_oscillator_state_support(*scenario.oscillator_state,
                                                  scenario.oscillator.fock_dim);
            } else {
                // default state occupies level 1
                if (scenario.oscillator.fock_dim < 5) {
                    throw std::invalid_argument(
                        "Scenario: default oscillator state needs fock_dim >= 5 to stay in the "
                        "validated range");
                }
            }
            break;
        }
        case ModelKind::custom: {
            if (!scenario.custom) {
                throw std::invalid_argument("Scenario: custom scenario needs explicit matrices");
            }
            if (scenario.pair) {
                throw std::invalid_argument("Scenario: custom scenario does not take a pair");
            }
            const CustomSystem& c = *scenario.custom;
            require_hermitian(c.hamiltonian, "Scenario hamiltonian");
            require_hermitian(c.observable_a, "Scenario observable_a");
            require_hermitian(c.observable_b, "Scenario observable_b");
            require_same_dim(c.hamiltonian, c.observable_a, "Scenario observable_a");
            require_same_dim(c.hamiltonian, c.observable_b, "Scenario observable_b");
            if (c.state.size() != c.hamiltonian.dim()) {
                throw std::invalid_argument("Scenario: state dimension " +
                                            std::to_string(c.state.size()) +
                                            " does not match hamiltonian dimension " +
                                            std::to_string(c.hamiltonian.dim()));
            }
            if (!(c.hbar > 0.0)) {
                throw std::invalid_argument("Scenario: hbar must be positive, got " +
                                            std::to_string(c.hbar));
            }
            StateVector(c.state);  // norm / finiteness check
            break;
        }
    }
}

PreparedScenario prepare(const Scenario& scenario) {
    validate(scenario);

    switch (scenario.kind) {
        case ModelKind::spin: {
            const SpinModel model = scenario.spin;
            const SpinOperators ops = spin_operators(model.hbar);
            const ObservablePair pair = *scenario.pair;
            auto matrix_of = [&](Observable o) { return o == Observable::Sx ? ops.sx : ops.sy; };
            return PreparedScenario{
                QuantumSystem(complexd(model.omega, 0.0) * ops.sz, model.hbar),
                spin_state(model.theta),
                matrix_of(pair.first),
                matrix_of(pair.second),
                true,
                [model, pair](double t) { return spin_analytic_variance(pair.first, t, model); },
                [model, pair](double t) { return spin_analytic_variance(pair.second, t, model); },
                [model, pair](double t1, double t2) {
                    return spin_analytic_bound(pair, t1, t2, model);
                }};
        }
        case ModelKind::oscillator: {
            const OscillatorModel model = scenario.oscillator;
            const OscillatorOperators ops = oscillator_operators(model);
            const ObservablePair pair = *scenario.pair;
            auto matrix_of = [&](Observable o) { return o == Observable::X ? ops.x : ops.p; };
            StateVector psi = scenario.oscillator_state ? StateVector(*scenario.oscillator_state)
                                                        : oscillator_state(model);
            return PreparedScenario{
                QuantumSystem(ops.h, model.hbar),
                std::move(psi),
                matrix_of(pair.first),
                matrix_of(pair.second),
                true,
                [model, pair](double t) {
                    return oscillator_analytic_variance(pair.first, t, model);
                },
                [model, pair](double t) {
                    return oscillator_analytic_variance(pair.second, t, model);
                },
                [model, pair](double t1, double t2) {
                    return oscillator_analytic_bound(pair, t1, t2, model);
                }};
        }
        case ModelKind::custom: {
            const CustomSystem& c = *scenario.custom;
            return PreparedScenario{QuantumSystem(c.hamiltonian, c.hbar),
                                    StateVector(c.state),
                                    c.observable_a,
                                    c.observable_b,
                                    false,
                                    {},
                                    {},
                                    {}};
        }
    }
    throw std::logic_error("prepare: unreachable");
}

SweepReport run_sweep(const Scenario& scenario, bool parallel) {
    const PreparedScenario ps = prepare(scenario);

    const std::size_t n1 = scenario.t1_grid.count;
    const std::size_t n2 = scenario.t2_grid.count;
    const std::size_t total = n1 * n2;

    // Evolved observables are shared across a full grid row/column, so they
    // are computed once per distinct time.
    std::vector<ComplexMatrix> a_at(n1), b_at(n2);
    std::vector<double> t1s(n1), t2s(n2);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (long i = 0; i < static_cast<long>(n1); ++i) {
        t1s[i] = grid_point(scenario.t1_grid, static_cast<std::size_t>(i));
        a_at[i] = evolve_observable(ps.system, ps.observable_a, t1s[i]);
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (long j = 0; j < static_cast<long>(n2); ++j) {
        t2s[j] = grid_point(scenario.t2_grid, static_cast<std::size_t>(j));
        b_at[j] = evolve_observable(ps.system, ps.observable_b, t2s[j]);
    }

    SweepReport report;
    report.t1_count = n1;
    report.t2_count = n2;
    report.records.resize(total);
    report.has_oracle = ps.has_oracle;
    if (ps.has_oracle) {
        report.analytic_lhs.resize(total);
        report.analytic_rhs.resize(total);
    }

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (long k = 0; k < static_cast<long>(total); ++k) {
        const std::size_t i = static_cast<std::size_t>(k) / n2;
        const std::size_t j = static_cast<std::size_t>(k) % n2;
        report.records[k] = uncertainty_record_evolved(ps.state, a_at[i], t1s[i], b_at[j], t2s[j]);
        if (ps.has_oracle) {
            report.analytic_lhs[k] = ps.analytic_variance_a(t1s[i]) * ps.analytic_variance_b(t2s[j]);
            report.analytic_rhs[k] = ps.analytic_bound(t1s[i], t2s[j]);
        }
    }

    report.min_slack = report.records.empty() ? 0.0 : report.records.front().slack;
    for (std::size_t k = 0; k < total; ++k) {
        const TwoTimeUncertaintyRecord& rec = report.records[k];
        report.min_slack = std::min(report.min_slack, rec.slack);
        if (rec.slack < -scenario.tolerances.ineq) report.violations.push_back(k);
        if (ps.has_oracle) {
            report.max_oracle_error =
                std::max({report.max_oracle_error, std::abs(rec.lhs - report.analytic_lhs[k]),
                          std::abs(rec.rhs - report.analytic_rhs[k])});
        }
    }
    return report;
}

OracleErrors compare_numeric_analytic(const SweepReport& report) {
    if (report.records.empty()) {
        throw std::invalid_argument("compare_numeric_analytic: empty record list");
    }
    if (!report.has_oracle) {
        throw std::invalid_argument("compare_numeric_analytic: report has no oracle columns");
    }
    OracleErrors err;
    for (std::size_t k = 0; k < report.records.size(); ++k) {
        err.lhs_err = std::max(err.lhs_err, std::abs(report.records[k].lhs - report.analytic_lhs[k]));
        err.rhs_err = std::max(err.rhs_err, std::abs(report.records[k].rhs - report.analytic_rhs[k]));
    }
    return err;
}

InequalityCheck check_inequality(const SweepReport& report, double tol) {
    InequalityCheck out;
    for (std::size_t k = 0; k < report.records.size(); ++k) {
        if (report.records[k].slack < -tol) out.violations.push_back(k);
    }
    out.pass = out.violations.empty();
    return out;
}

double finite_difference_check(const QuantumSystem& sys, const ComplexMatrix& a, double t,
                               double h) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("finite_difference_check: h must be positive, got " +
                                    std::to_string(h));
    }
    const ComplexMatrix forward = evolve_observable(sys, a, t + h);
    const ComplexMatrix backward = evolve_observable(sys, a, t - h);
    const ComplexMatrix derivative = complexd(1.0 / (2.0 * h), 0.0) * (forward - backward);
    return max_abs(derivative - heisenberg_rhs(sys, a, t));
}

}  // namespace uncdyn
