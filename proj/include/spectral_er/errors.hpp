#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ser {

// Parameter/precondition violations (CLI maps these to exit code 2).
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// graph6 decoding failure; offset is the byte position of the problem.
struct parse_error : std::runtime_error {
    std::size_t offset;
    parse_error(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// A partition handed to quotient_matrix was not equitable.
struct not_equitable_error : std::runtime_error {
    int cell;         // cell of the disagreeing vertices
    int vertex_a;     // witness pair with different cross-degrees
    int vertex_b;
    int target_cell;  // cell they disagree on
    not_equitable_error(int c, int a, int b, int t)
        : std::runtime_error("partition not equitable: vertices " + std::to_string(a) + " and " +
                             std::to_string(b) + " in cell " + std::to_string(c) +
                             " have different degrees into cell " + std::to_string(t)),
          cell(c), vertex_a(a), vertex_b(b), target_cell(t) {}
};

// Eigensolver ran out of iteration budget; carries the best estimate.
struct convergence_error : std::runtime_error {
    double best_lambda;
    double residual;
    long iterations;
    convergence_error(double lam, double res, long it)
        : std::runtime_error("eigensolver did not converge: lambda~" + std::to_string(lam) +
                             " residual=" + std::to_string(res)),
          best_lambda(lam), residual(res), iterations(it) {}
};

}  // namespace ser
