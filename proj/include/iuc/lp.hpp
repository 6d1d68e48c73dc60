// Dense bounded-variable primal simplex, usable with doubles or exact
// rationals, plus the relaxations built from inequality rows.
#pragma once

#include <string>
#include <vector>

#include "iuc/graph.hpp"
#include "iuc/inequality.hpp"
#include "iuc/rational.hpp"

namespace iuc {

template <typename Num>
struct LPRow {
    std::vector<std::pair<int, Num>> coeffs; // (variable, coefficient)
    Num rhs{};                               // sum <= rhs
};

// maximize objective . x subject to rows and box bounds; bounds must be
// finite with lower <= upper (lower == upper pins a variable)
template <typename Num>
struct LPProblem {
    int num_vars = 0;
    std::vector<Num> objective;
    std::vector<Num> lower, upper;
    std::vector<LPRow<Num>> rows;
};

enum class LPStatus { Optimal, Infeasible, Unbounded, IterationLimit };

template <typename Num>
struct LPSolution {
    LPStatus status = LPStatus::IterationLimit;
    Num value{};
    std::vector<Num> x;
    int iterations = 0;
};

template <typename Num>
LPSolution<Num> lp_solve(const LPProblem<Num>& p);

// Solve using only a growing active subset of p.rows: repeatedly optimize,
// then add every stored row the optimum violates. 'initial_active' seeds the
// working set (say, from a parent subproblem); the result lists the rows that
// ended up active, and the solution satisfies every row of p.
template <typename Num>
struct RelaxResult {
    LPSolution<Num> sol;
    std::vector<int> active;
    int rounds = 0;
};

template <typename Num>
RelaxResult<Num> solve_with_active_rows(const LPProblem<Num>& p,
                                        std::vector<int> initial_active = {});

template <typename Num>
LPRow<Num> row_from_inequality(const LinearInequality& q);

// all-ones objective over [0,1]^n with one row per inequality
template <typename Num>
LPProblem<Num> relaxation_from_inequalities(int n, const std::vector<LinearInequality>& qs);

// open-triangle rows only; extras are appended verbatim
LPProblem<double> build_base_relaxation(const Graph& g,
                                        const std::vector<LinearInequality>& extra = {});

// optimum of the relaxation with open-triangle and 4-ring rows
double fractional_iuc_number(const Graph& g);

std::string lp_problem_to_text(const LPProblem<double>& p);

} // namespace iuc
