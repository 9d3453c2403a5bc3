#include "uncdyn/models.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace uncdyn {

const char* to_string(Observable o) {
    switch (o) {
        case Observable::Sx: return "Sx";
        case Observable::Sy: return "Sy";
        case Observable::X: return "X";
        case Observable::P: return "P";
    }
    return "?";
}

const char* to_string(ModelKind k) {
    switch (k) {
        case ModelKind::spin: return "spin";
        case ModelKind::oscillator: return "oscillator";
        case ModelKind::custom: return "custom";
    }
    return "?";
}

namespace {

bool in_model_set(Observable o, ModelKind kind) {
    if (kind == ModelKind::spin) return o == Observable::Sx || o == Observable::Sy;
    if (kind == ModelKind::oscillator) return o == Observable::X || o == Observable::P;
    return false;
}

void validate_positive(double v, const char* name, const char* what) {
    if (!(v > 0.0)) {
        throw std::invalid_argument(std::string(what) + ": " + name + " must be positive, got " +
                                    std::to_string(v));
    }
}

}  // namespace

bool pair_valid(const ObservablePair& pair) {
    return pair.model_kind != ModelKind::custom && in_model_set(pair.first, pair.model_kind) &&
           in_model_set(pair.second, pair.model_kind);
}

void require_pair(const ObservablePair& pair, ModelKind kind, const char* what) {
    if (pair.model_kind != kind || !pair_valid(pair)) {
        throw std::invalid_argument(std::string(what) + ": pair (" + to_string(pair.first) + "," +
                                    to_string(pair.second) + ") is not in the " + to_string(kind) +
                                    " observable set");
    }
}

SpinOperators spin_operators(double hbar) {
    validate_positive(hbar, "hbar", "spin_operators");
    const double h2 = 0.5 * hbar;
    SpinOperators ops;
    ops.sx = ComplexMatrix::from_rows({{0.0, h2}, {h2, 0.0}});
    ops.sy = ComplexMatrix::from_rows({{0.0, complexd(0.0, -h2)}, {complexd(0.0, h2), 0.0}});
    ops.sz = ComplexMatrix::from_rows({{h2, 0.0}, {0.0, -h2}});
    return ops;
}

StateVector spin_state(double theta) {
    return StateVector({std::cos(0.5 * theta), std::sin(0.5 * theta)});
}

double spin_commutator_factor(const ObservablePair& pair, double t1, double t2,
                              const SpinModel& model) {
    require_pair(pair, ModelKind::spin, "spin_commutator_factor");
    const double phase = model.omega * (t2 - t1);
    if (pair.first == Observable::Sx && pair.second == Observable::Sy) return std::cos(phase);
    if (pair.first == Observable::Sy && pair.second == Observable::Sx) return -std::cos(phase);
    return -std::sin(phase);  // (Sx,Sx) and (Sy,Sy)
}

ComplexMatrix spin_analytic_commutator(const ObservablePair& pair, double t1, double t2,
                                       const SpinModel& model) {
    const double factor = spin_commutator_factor(pair, t1, t2, model);
    return complexd(0.0, model.hbar * factor) * spin_operators(model.hbar).sz;
}

double spin_analytic_bound(const ObservablePair& pair, double t1, double t2,
                           const SpinModel& model) {
    const double factor = spin_commutator_factor(pair, t1, t2, model);
    const double sz_mean = 0.5 * model.hbar * std::cos(model.theta);
    return 0.5 * model.hbar * std::abs(factor * sz_mean);
}

double spin_analytic_variance(Observable which, double t, const SpinModel& model) {
    const double s2 = std::sin(model.theta) * std::sin(model.theta);
    const double wt = model.omega * t;
    double trig;
    if (which == Observable::Sx) {
        trig = std::cos(wt);
    } else if (which == Observable::Sy) {
        trig = std::sin(wt);
    } else {
        throw std::invalid_argument(std::string("spin_analytic_variance: ") + to_string(which) +
                                    " is not a spin observable");
    }
    return 0.5 * model.hbar * std::sqrt(1.0 - s2 * trig * trig);
}

void validate(const OscillatorModel& model) {
    validate_positive(model.mass, "mass", "OscillatorModel");
    validate_positive(model.omega, "omega", "OscillatorModel");
    validate_positive(model.hbar, "hbar", "OscillatorModel");
    if (model.fock_dim < 4) {
        throw std::invalid_argument("OscillatorModel: fock_dim must be >= 4, got " +
                                    std::to_string(model.fock_dim));
    }
}

ComplexMatrix lowering_operator(std::size_t fock_dim) {
    ComplexMatrix a(fock_dim);
    for (std::size_t n = 1; n < fock_dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

OscillatorOperators oscillator_operators(const OscillatorModel& model) {
    validate(model);
    const ComplexMatrix a = lowering_operator(model.fock_dim);
    const ComplexMatrix a_dag = adjoint(a);

    const double x_scale = std::sqrt(model.hbar / (2.0 * model.mass * model.omega));
    const double p_scale = std::sqrt(model.mass * model.hbar * model.omega / 2.0);

    OscillatorOperators ops;
    ops.x = complexd(x_scale, 0.0) * (a + a_dag);
    ops.p = complexd(0.0, p_scale) * (a_dag - a);
    ops.h = complexd(1.0 / (2.0 * model.mass), 0.0) * mat_mul(ops.p, ops.p) +
            complexd(0.5 * model.mass * model.omega * model.omega, 0.0) * mat_mul(ops.x, ops.x);
    return ops;
}

StateVector oscillator_state(const OscillatorModel& model) {
    if (model.fock_dim < 2) {
        throw std::invalid_argument("oscillator_state: fock_dim must be >= 2");
    }
    std::vector<complexd> amp(model.fock_dim, 0.0);
    const double r = 1.0 / std::sqrt(2.0);
    amp[0] = r;
    amp[1] = r;
    return StateVector(std::move(amp));
}

double oscillator_analytic_bound(const ObservablePair& pair, double t1, double t2,
                                 const OscillatorModel& model) {
    require_pair(pair, ModelKind::oscillator, "oscillator_analytic_bound");
    const double phase = model.omega * (t2 - t1);
    if (pair.first != pair.second) {
        return 0.5 * model.hbar * std::abs(std::cos(phase));
    }
    if (pair.first == Observable::X) {
        return model.hbar / (2.0 * model.mass * model.omega) * std::abs(std::sin(phase));
    }
    return 0.5 * model.hbar * model.mass * model.omega * std::abs(std::sin(phase));
}

double oscillator_analytic_variance(Observable which, double t, const OscillatorModel& model) {
    const double wt = model.omega * t;
    if (which == Observable::X) {
        const double c = std::cos(wt);
        return std::sqrt(model.hbar / (2.0 * model.mass * model.omega) * (2.0 - c * c));
    }
    if (which == Observable::P) {
        const double s = std::sin(wt);
        return std::sqrt(0.5 * model.mass * model.hbar * model.omega * (2.0 - s * s));
    }
    throw std::invalid_argument(std::string("oscillator_analytic_variance: ") + to_string(which) +
                                " is not an oscillator observable");
}

namespace {

[[noreturn]] void no_limit_form(const ObservablePair& pair) {
    throw std::invalid_argument(std::string("small_delta_limit_bound: pair (") +
                                to_string(pair.first) + "," + to_string(pair.second) +
                                ") at unequal times has no limit form");
}

}  // namespace

double small_delta_limit_bound(const ObservablePair& pair, double t1, double t2,
                               const SpinModel& model) {
    require_pair(pair, ModelKind::spin, "small_delta_limit_bound");
    const double sz_mean = 0.5 * model.hbar * std::cos(model.theta);
    if (pair.first == pair.second) {
        return 0.5 * model.hbar * std::abs(model.omega * (t2 - t1) * sz_mean);
    }
    if (t1 != t2) no_limit_form(pair);
    return 0.5 * model.hbar * std::abs(sz_mean);
}

double small_delta_limit_bound(const ObservablePair& pair, double t1, double t2,
                               const OscillatorModel& model) {
    require_pair(pair, ModelKind::oscillator, "small_delta_limit_bound");
    if (pair.first == pair.second) {
        if (pair.first == Observable::X) {
            return 0.5 * model.hbar / model.mass * std::abs(t2 - t1);
        }
        return 0.5 * model.hbar * model.mass * model.omega * model.omega * std::abs(t2 - t1);
    }
    if (t1 != t2) no_limit_form(pair);
    return 0.5 * model.hbar;
}

}  // namespace uncdyn
