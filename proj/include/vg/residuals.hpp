#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vg/model.hpp"
#include "vg/operators.hpp"
#include "vg/quadrature.hpp"

namespace vg {

enum class EquationId {
    time_nonlocal,
    drifted_nonlocal,
    space_ode,
    phillips,
    beghin_shift,
};

const char* equation_name(EquationId id);

// Documented residual tolerance per equation (used by CLI exit codes).
double equation_tolerance(EquationId id);

// Evaluation grid; x values must stay out of the punctured neighborhood
// (-delta, delta) of the origin where the density kinks.
struct Grid2D {
    std::vector<double> t_values;
    std::vector<double> x_values;
    double punctured_delta = 0.05;

    void validate() const;
};

// Per-point LHS/RHS record for one equation check. Points where a quadrature
// failed are annotated and carry NaN entries; they are excluded from maxima.
struct ResidualReport {
    EquationId equation{};
    Grid2D grid;
    std::vector<double> lhs, rhs, abs_residual, rel_residual; // row-major [t][x]
    std::vector<std::string> point_notes;
    double max_abs = 0.0;
    double max_rel = 0.0;
    quad::QuadConfig tolerances_used;

    std::size_t index(std::size_t it, std::size_t ix) const {
        return it * grid.x_values.size() + ix;
    }
};

// d/dt p = -(D+_{a,sqrt b} + D-_{a,sqrt b}) p, driftless closed form.
// time_step = 0 selects the default policy max(1e-4, 1e-4 t).
ResidualReport check_time_nonlocal(const VgParams& p, const Grid2D& g,
                                   const quad::QuadConfig& q = {},
                                   double time_step = 0.0);

// Drifted variant with gain/loss rates from factor_params; the density is
// evaluated through the subordination integral (no closed form for theta != 0).
ResidualReport check_drifted_nonlocal(const VgParams& p, const Grid2D& g,
                                      const quad::QuadConfig& q = {});

// x p'' - (2at-2) p' - b x p = 0, fully analytic pipeline.
ResidualReport check_space_ode(const VgParams& p, const Grid2D& g);

// d/dt p = -Phi(-Delta) p via the Phillips operator.
ResidualReport check_phillips_eq(const VgParams& p, const Grid2D& g,
                                 const quad::QuadConfig& q = {});

// d^2/dx^2 p(t,x) = b (p(t,x) - p(t - 1/a, x)); requires at > 1 and
// a (t - 1/a) > 0.
ResidualReport check_beghin_shift(const VgParams& p, double t,
                                  const std::vector<double>& x_values);

} // namespace vg
