#pragma once

#include "uncdyn/dynamics.hpp"
#include "uncdyn/matrix.hpp"

namespace uncdyn {

enum class Observable { Sx, Sy, X, P };
enum class ModelKind { spin, oscillator, custom };

const char* to_string(Observable o);
const char* to_string(ModelKind k);

/// Which closed-form family a sweep compares against. Members must belong to
/// the model's observable set: {Sx,Sy} for spin, {X,P} for the oscillator.
struct ObservablePair {
    Observable first;
    Observable second;
    ModelKind model_kind;
};

bool pair_valid(const ObservablePair& pair);
void require_pair(const ObservablePair& pair, ModelKind kind, const char* what);

/// Spin-1/2 precessing under omega * S_z, prepared in
/// cos(theta/2)|up> + sin(theta/2)|down>.
struct SpinModel {
    double omega = 1.0;
    double hbar = 1.0;
    double theta = 0.0;
};

struct SpinOperators {
    ComplexMatrix sx, sy, sz;
};

SpinOperators spin_operators(double hbar);
StateVector spin_state(double theta);

/// [A(t1),B(t2)] = i hbar * factor * S_z for every spin pair; returns the
/// real trigonometric factor (cos of omega*(t2-t1) for cross pairs, -sin for
/// repeated ones, sign following the measurement order).
double spin_commutator_factor(const ObservablePair& pair, double t1, double t2,
                              const SpinModel& model);
ComplexMatrix spin_analytic_commutator(const ObservablePair& pair, double t1, double t2,
                                       const SpinModel& model);
double spin_analytic_bound(const ObservablePair& pair, double t1, double t2,
                           const SpinModel& model);
double spin_analytic_variance(Observable which, double t, const SpinModel& model);

/// Harmonic oscillator P^2/2m + m omega^2 X^2 / 2 on a truncated Fock space.
/// X and P come from the truncated ladder matrices; building H from them
/// corrupts the top diagonal entry, which stays invisible to states supported
/// on low levels. fock_dim >= 4 keeps X^2 and P^2 exact on levels {0,1}.
struct OscillatorModel {
    double mass = 1.0;
    double omega = 1.0;
    double hbar = 1.0;
    std::size_t fock_dim = 16;
};

void validate(const OscillatorModel& model);

struct OscillatorOperators {
    ComplexMatrix x, p, h;
};

/// Truncated lowering matrix, a|n> = sqrt(n)|n-1>.
ComplexMatrix lowering_operator(std::size_t fock_dim);
OscillatorOperators oscillator_operators(const OscillatorModel& model);

/// (|0> + |1>) / sqrt(2) padded with zeros.
StateVector oscillator_state(const OscillatorModel& model);

double oscillator_analytic_bound(const ObservablePair& pair, double t1, double t2,
                                 const OscillatorModel& model);
double oscillator_analytic_variance(Observable which, double t, const OscillatorModel& model);

/// The small-separation forms of the bounds: linearized sine for repeated
/// observables, the equal-time value for cross pairs at t1 == t2. Cross pairs
/// at unequal times have no limit form and throw.
double small_delta_limit_bound(const ObservablePair& pair, double t1, double t2,
                               const SpinModel& model);
double small_delta_limit_bound(const ObservablePair& pair, double t1, double t2,
                               const OscillatorModel& model);

}  // namespace uncdyn
