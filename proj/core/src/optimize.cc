// Copyright 2026 The rydgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rydgate/optimize.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>

#include "parallel.h"
#include "rydgate/error.h"

namespace rydgate {

namespace {

using Point = std::vector<double>;

void check_feasible_bounds(const std::vector<ParameterSpec> &parameters) {
    if (parameters.empty()) {
        throw Error(ErrorCode::kInfeasibleStart, "no free parameters");
    }
    for (const ParameterSpec &p : parameters) {
        if (!(p.lower <= p.upper) || !std::isfinite(p.lower) || !std::isfinite(p.upper)) {
            throw Error(ErrorCode::kInfeasibleStart, "empty bounds for parameter '" + p.name + "'");
        }
        if (p.min_magnitude > std::max(std::abs(p.lower), std::abs(p.upper))) {
            throw Error(ErrorCode::kInfeasibleStart, "magnitude floor of '" + p.name + "' lies outside its bounds");
        }
    }
}

void default_projection(const std::vector<ParameterSpec> &parameters, std::span<double> x) {
    for (std::size_t i = 0; i < parameters.size(); ++i) {
        const ParameterSpec &p = parameters[i];
        double v = std::clamp(x[i], p.lower, p.upper);
        if (std::abs(v) < p.min_magnitude) {
            double up = p.min_magnitude;
            double down = -p.min_magnitude;
            bool up_ok = up <= p.upper;
            bool down_ok = down >= p.lower;
            if (up_ok && (!down_ok || v >= 0)) {
                v = up;
            } else {
                v = down;
            }
        }
        x[i] = v;
    }
}

struct Vertex {
    Point x;
    double value;  // negated objective: the simplex minimises
};

class Restart {
   public:
    Restart(const OptimizationProblem &problem, const NelderMeadOptions &options)
        : problem_(problem), options_(options) {
    }

    void project(Point &x) const {
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = std::clamp(x[i], problem_.parameters[i].lower, problem_.parameters[i].upper);
        }
        if (problem_.project) {
            problem_.project(x);
        } else {
            default_projection(problem_.parameters, x);
        }
    }

    Vertex evaluate(Point x) {
        project(x);
        ++evaluations_;
        double f = problem_.objective(x);
        return {std::move(x), std::isfinite(f) ? -f : 0.0};
    }

    Vertex run(Point start) {
        const std::size_t n = start.size();
        std::vector<Vertex> simplex;
        simplex.push_back(evaluate(std::move(start)));
        for (std::size_t i = 0; i < n; ++i) {
            const ParameterSpec &p = problem_.parameters[i];
            double step = options_.initial_step * (p.upper - p.lower);
            Point x = simplex[0].x;
            x[i] = x[i] + step <= p.upper ? x[i] + step : x[i] - step;
            simplex.push_back(evaluate(std::move(x)));
        }
        auto by_value = [](const Vertex &a, const Vertex &b) { return a.value < b.value; };
        while (true) {
            std::stable_sort(simplex.begin(), simplex.end(), by_value);
            if (diameter(simplex) < options_.diameter_tolerance || evaluations_ >= options_.max_evaluations) {
                break;
            }
            Point centroid(n, 0.0);
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t i = 0; i < n; ++i) {
                    centroid[i] += simplex[k].x[i] / static_cast<double>(n);
                }
            }
            const Vertex &worst = simplex[n];
            Vertex reflected = evaluate(along(centroid, worst.x, -1.0));
            if (reflected.value < simplex[0].value) {
                Vertex expanded = evaluate(along(centroid, worst.x, -2.0));
                simplex[n] = expanded.value < reflected.value ? std::move(expanded) : std::move(reflected);
                continue;
            }
            if (reflected.value < simplex[n - 1].value) {
                simplex[n] = std::move(reflected);
                continue;
            }
            bool outside = reflected.value < worst.value;
            Vertex contracted = evaluate(along(centroid, worst.x, outside ? -0.5 : 0.5));
            if (contracted.value < std::min(reflected.value, worst.value)) {
                simplex[n] = std::move(contracted);
                continue;
            }
            for (std::size_t k = 1; k <= n; ++k) {
                Point x(n);
                for (std::size_t i = 0; i < n; ++i) {
                    x[i] = simplex[0].x[i] + 0.5 * (simplex[k].x[i] - simplex[0].x[i]);
                }
                simplex[k] = evaluate(std::move(x));
            }
        }
        return simplex[0];
    }

    long evaluations() const noexcept {
        return evaluations_;
    }

   private:
    // centroid + t (x - centroid)
    static Point along(const Point &centroid, const Point &x, double t) {
        Point out(centroid.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = centroid[i] + t * (x[i] - centroid[i]);
        }
        return out;
    }

    static double diameter(const std::vector<Vertex> &simplex) {
        double d = 0;
        for (std::size_t k = 1; k < simplex.size(); ++k) {
            for (std::size_t i = 0; i < simplex[0].x.size(); ++i) {
                d = std::max(d, std::abs(simplex[k].x[i] - simplex[0].x[i]));
            }
        }
        return d;
    }

    const OptimizationProblem &problem_;
    const NelderMeadOptions &options_;
    long evaluations_ = 0;
};

std::vector<Point> latin_hypercube(const std::vector<ParameterSpec> &parameters, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point> points(samples, Point(parameters.size()));
    std::vector<int> strata(samples);
    for (std::size_t i = 0; i < parameters.size(); ++i) {
        std::iota(strata.begin(), strata.end(), 0);
        std::shuffle(strata.begin(), strata.end(), rng);
        for (int r = 0; r < samples; ++r) {
            double u = (strata[r] + unit(rng)) / samples;
            points[r][i] = parameters[i].lower + u * (parameters[i].upper - parameters[i].lower);
        }
    }
    return points;
}

constexpr int kThreePulses = 3;

}  // namespace

OptimizationResult nelder_mead_constrained(const OptimizationProblem &problem, std::uint64_t seed,
                                           const NelderMeadOptions &options) {
    check_feasible_bounds(problem.parameters);
    if (!problem.objective) {
        throw Error(ErrorCode::kInvalidArgument, "optimization problem has no objective");
    }
    if (options.restarts < 1 || options.max_evaluations < 1) {
        throw Error(ErrorCode::kInvalidArgument, "restarts and evaluation budget must be positive");
    }
    std::vector<Point> starts = latin_hypercube(problem.parameters, options.restarts, seed);
    for (std::size_t k = 0; k < problem.initial_points.size() && k < starts.size(); ++k) {
        if (problem.initial_points[k].size() != problem.parameters.size()) {
            throw Error(ErrorCode::kLengthMismatch, "initial point has the wrong number of parameters");
        }
        starts[k] = problem.initial_points[k];
    }
    std::vector<Vertex> best(starts.size());
    std::vector<long> evaluations(starts.size());
    internal::parallel_for(starts.size(), options.threads, [&](std::size_t r) {
        Restart restart(problem, options);
        best[r] = restart.run(starts[r]);
        evaluations[r] = restart.evaluations();
    });
    std::size_t winner = 0;
    for (std::size_t r = 1; r < best.size(); ++r) {
        if (best[r].value < best[winner].value) {
            winner = r;
        }
    }
    OptimizationResult result;
    result.best_parameters = best[winner].x;
    result.best_fidelity = problem.objective(result.best_parameters);
    result.evaluations = std::accumulate(evaluations.begin(), evaluations.end(), 0L) + 1;
    result.restarts_used = static_cast<int>(starts.size());
    return result;
}

OptimizationResult refine_area_optimum(const ProtocolFamily &family, const GateSignature &target, AreaPair start,
                                       double radius, std::uint64_t seed, const NelderMeadOptions &options) {
    OptimizationProblem problem;
    problem.parameters = {{"a_odd", start.odd - radius, start.odd + radius},
                          {"a_even", start.even - radius, start.even + radius}};
    problem.objective = [&](std::span<const double> x) { return gate_fidelity(family.at(x[0], x[1]), target); };
    problem.initial_points = {{start.odd, start.even}};
    return nelder_mead_constrained(problem, seed, options);
}

Protocol third_qubit_protocol(AreaPair areas, double b, double c_reference, double c_odd, double c_even) {
    double rest = 1.0 - b * b - c_reference * c_reference;
    if (!(rest >= 0.0) || std::abs(c_odd) > 1.0 || std::abs(c_even) > 1.0) {
        throw Error(ErrorCode::kInvalidArgument, "three-qubit factors out of range");
    }
    double scale = std::sqrt(1.0 - c_reference * c_reference);
    double ux = std::sqrt(rest) / scale;
    double uy = b / scale;
    double r_odd = std::sqrt(1.0 - c_odd * c_odd);
    double r_even = std::sqrt(1.0 - c_even * c_even);
    ProtocolFamily family(make_structural_vector({r_odd * ux, r_odd * uy, c_odd}),
                          make_structural_vector({-r_even * uy, r_even * ux, c_even}), kThreePulses);
    return family.at(areas.odd, areas.even);
}

FactorOptimization optimize_third_qubit(AreaPair areas, double b, double min_sq, double c_reference,
                                        std::uint64_t seed, const NelderMeadOptions &options) {
    if (!(min_sq >= 0.0)) {
        throw Error(ErrorCode::kInvalidArgument, "min_sq must be non-negative");
    }
    GateSignature target = GateSignature::cphase(3);
    OptimizationProblem problem;
    double floor = std::sqrt(min_sq);
    problem.parameters = {{"c_odd", -1.0, 1.0, floor}, {"c_even", -1.0, 1.0, floor}};
    problem.objective = [&](std::span<const double> x) {
        return gate_fidelity(third_qubit_protocol(areas, b, c_reference, x[0], x[1]), target);
    };
    problem.initial_points = {{c_reference, c_reference}};
    FactorOptimization out;
    out.result = nelder_mead_constrained(problem, seed, options);
    Protocol best = third_qubit_protocol(areas, b, c_reference, out.result.best_parameters[0],
                                         out.result.best_parameters[1]);
    auto odd = best.pulses()[0].vector.components();
    auto even = best.pulses()[1].vector.components();
    out.odd_vector.assign(odd.begin(), odd.end());
    out.even_vector.assign(even.begin(), even.end());
    return out;
}

Protocol all_factors_protocol(AreaPair areas, double c_fixed, double phi_odd, double phi_even) {
    if (!(std::abs(c_fixed) <= 1.0)) {
        throw Error(ErrorCode::kInvalidArgument, "c must satisfy c^2 <= 1");
    }
    double r = std::sqrt(1.0 - c_fixed * c_fixed);
    ProtocolFamily family(make_structural_vector({r * std::cos(phi_odd), r * std::sin(phi_odd), c_fixed}),
                          make_structural_vector({r * std::cos(phi_even), r * std::sin(phi_even), c_fixed}),
                          kThreePulses);
    return family.at(areas.odd, areas.even);
}

FactorOptimization optimize_all_factors(AreaPair areas, double c_fixed, double min_sq, std::uint64_t seed,
                                        const NelderMeadOptions &options) {
    if (!(std::abs(c_fixed) <= 1.0) || !(min_sq >= 0.0)) {
        throw Error(ErrorCode::kInvalidArgument, "need c^2 <= 1 and min_sq >= 0");
    }
    double radius_sq = 1.0 - c_fixed * c_fixed;
    if (2 * min_sq > radius_sq) {
        throw Error(ErrorCode::kInfeasibleStart, "a_k^2 >= min_sq and b_k^2 >= min_sq cannot both hold");
    }
    // On the circle of radius r the bounds read |cos phi|, |sin phi| >= kappa,
    // i.e. the distance of phi to the nearest axis lies in [asin kappa, acos kappa].
    double kappa = radius_sq > 0 ? std::sqrt(min_sq / radius_sq) : 0.0;
    double near = std::asin(kappa);
    double far = std::acos(kappa);
    GateSignature target = GateSignature::cphase(3);
    OptimizationProblem problem;
    problem.parameters = {{"phi_odd", -kPi, kPi}, {"phi_even", -kPi, kPi}};
    problem.project = [near, far](std::span<double> x) {
        for (double &phi : x) {
            double q = std::abs(phi);
            bool upper_half = q > kPi / 2;
            double m = std::clamp(upper_half ? kPi - q : q, near, far);
            phi = std::copysign(upper_half ? kPi - m : m, phi);
        }
    };
    problem.objective = [&](std::span<const double> x) {
        return gate_fidelity(all_factors_protocol(areas, c_fixed, x[0], x[1]), target);
    };
    double b = std::sqrt(min_sq);
    if (b * b + c_fixed * c_fixed <= 1.0) {
        for (Orthogonality orth : {Orthogonality::kSubVector, Orthogonality::kFullVector}) {
            if (orth == Orthogonality::kFullVector && 2 * c_fixed * c_fixed > 1.0) {
                continue;
            }
            ProtocolFamily fixed = ProtocolFamily::three_qubit(b, c_fixed, orth);
            problem.initial_points.push_back({std::atan2(fixed.odd_vector()[1], fixed.odd_vector()[0]),
                                              std::atan2(fixed.even_vector()[1], fixed.even_vector()[0])});
        }
    }
    FactorOptimization out;
    out.result = nelder_mead_constrained(problem, seed, options);
    Protocol best = all_factors_protocol(areas, c_fixed, out.result.best_parameters[0], out.result.best_parameters[1]);
    auto odd = best.pulses()[0].vector.components();
    auto even = best.pulses()[1].vector.components();
    out.odd_vector.assign(odd.begin(), odd.end());
    out.even_vector.assign(even.begin(), even.end());
    return out;
}

OptimizedMap optimized_map(const CellOptimizer &optimizer, int n_qubits, const AreaGrid &odd, const AreaGrid &even,
                           std::uint64_t seed, int threads) {
    OptimizedMap out;
    out.map.axis_odd = odd.axis();
    out.map.axis_even = even.axis();
    out.map.meta.n_qubits = n_qubits;
    out.map.meta.pulses = kThreePulses;
    const std::size_t cols = out.map.cols();
    const std::size_t cells = out.map.rows() * cols;
    out.map.values.assign(cells, 0.0);
    out.parameters.assign(cells, {});
    static const char *const kAxes[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
    for (const char *parity : {"odd", "even"}) {
        for (int q = 0; q < n_qubits && q < kMaxQubits; ++q) {
            out.parameter_names.push_back(std::string(kAxes[q]) + "_" + parity);
        }
    }
    internal::parallel_for(cells, threads, [&](std::size_t cell) {
        AreaPair areas{out.map.axis_odd[cell / cols], out.map.axis_even[cell % cols]};
        FactorOptimization best = optimizer(areas, seed + cell);
        out.map.values[cell] = best.result.best_fidelity;
        std::vector<double> params = best.odd_vector;
        params.insert(params.end(), best.even_vector.begin(), best.even_vector.end());
        out.parameters[cell] = std::move(params);
    });
    return out;
}

void write_optimized_map_csv(std::ostream &out, const OptimizedMap &map) {
    out << "a_odd_over_pi,a_even_over_pi,fidelity";
    for (const std::string &name : map.parameter_names) {
        out << ',' << name;
    }
    out << '\n';
    char field[40];
    for (std::size_t i = 0; i < map.map.rows(); ++i) {
        for (std::size_t j = 0; j < map.map.cols(); ++j) {
            std::size_t cell = i * map.map.cols() + j;
            std::snprintf(field, sizeof field, "%.9g,", map.map.axis_odd[i] / kPi);
            out << field;
            std::snprintf(field, sizeof field, "%.9g,", map.map.axis_even[j] / kPi);
            out << field;
            std::snprintf(field, sizeof field, "%.9g", map.map.values[cell]);
            out << field;
            for (double p : map.parameters[cell]) {
                std::snprintf(field, sizeof field, ",%.9g", p);
                out << field;
            }
            out << '\n';
        }
    }
}

}  // namespace rydgate
