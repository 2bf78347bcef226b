#pragma once

#include <functional>

namespace mzm {

/// Adaptive Simpson integration of f over [a, b].
///
/// Recursively bisects until the local Richardson error estimate satisfies
/// |err| <= max(abs_tol, rel_tol * |whole-interval estimate|) distributed over
/// subintervals. Throws std::runtime_error if the recursion depth limit is
/// reached before convergence.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-10, double abs_tol = 1e-14);

}  // namespace mzm
