#pragma once

#include "qha/op.hpp"
#include "qha/phase_fn.hpp"

namespace qha {

// Function * function convolution (weighted):
//   (f * g)(z) = (1/n) sum_{z'} f(z') g(z - z').
// Fast path: F_sigma(f * g) = F_sigma(f) F_sigma(g).
PhaseFn conv_fun_fun(const PhaseFn& f, const PhaseFn& g);
PhaseFn conv_fun_fun_naive(const PhaseFn& f, const PhaseFn& g);

// Function * operator convolution, an operator:
//   f * S = (1/n) sum_z f(z) alpha_z(S).
// Fast path: F_W(f * S) = F_sigma(f) F_W(S).
OperatorMatrix conv_fun_op(const PhaseFn& f, const OperatorMatrix& S);
OperatorMatrix conv_fun_op_naive(const PhaseFn& f, const OperatorMatrix& S);

// Operator * operator convolution, a phase function:
//   (S * T)(z) = tr(S alpha_z(check T)).
// Fast path: F_sigma(S * T) = F_W(S) F_W(T).
PhaseFn conv_op_op(const OperatorMatrix& S, const OperatorMatrix& T);
PhaseFn conv_op_op_naive(const OperatorMatrix& S, const OperatorMatrix& T);

// Localization operator with symbol f and window pair (phi1 analysis,
// phi2 synthesis), assembled through the short-time transform in its weak
// form; coincides with conv_fun_op(f, phi2 (x) phi1).
OperatorMatrix loc_op(const PhaseFn& f, const Signal& phi1, const Signal& phi2);

}  // namespace qha
