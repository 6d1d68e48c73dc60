// The six inequality families, plus validation, sequential lifting, and the
// closed-form lifting-coefficient vanishing tests.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iuc/graph.hpp"
#include "iuc/structures.hpp"

namespace iuc {

enum class IneqFamily { OT, Hole, AntiHole, Star, DoubleStar, Fan, Wheel, Lifted, Bound };

std::string family_name(IneqFamily f);

// sum of coeff * x_v over terms <= rhs; coefficients are positive integers
// and terms are sorted by vertex
struct LinearInequality {
    std::vector<std::pair<int, long long>> terms;
    long long rhs = 0;
    IneqFamily family = IneqFamily::OT;
    std::optional<StructureWitness> source;

    long long coeff(int v) const {
        for (auto& [u, c] : terms)
            if (u == v) return c;
        return 0;
    }
    Bitset support(int n) const {
        Bitset s(n);
        for (auto& [u, c] : terms) s.set(u);
        return s;
    }
    long long max_coeff() const {
        long long m = 0;
        for (auto& [u, c] : terms) m = std::max(m, c);
        return m;
    }
    template <typename Member>
    long long value_on(Member in) const { // Member: int -> bool
        long long s = 0;
        for (auto& [u, c] : terms)
            if (in(u)) s += c;
        return s;
    }
};

LinearInequality ot_inequality(const OpenTriangle& t);
LinearInequality hole_inequality(const StructureWitness& hole);
LinearInequality antihole_inequality(const StructureWitness& anti);
LinearInequality star_inequality(const StructureWitness& star);
std::pair<LinearInequality, LinearInequality> double_star_inequalities(const StructureWitness& ds);
LinearInequality fan_inequality(const StructureWitness& fan);
LinearInequality wheel_inequality(const StructureWitness& wheel);
LinearInequality bound_inequality(int v); // x_v <= 1

// RHS of the hole inequality on k >= 4 vertices (also the path/fan right-hand
// side with the shifted remainder)
long long hole_rhs(int k);
long long fan_rhs(int path_len);

// True iff every IUC of g satisfies q. Exact; the check may restrict itself to
// the support (IUCs are downward closed), which must stay within 35 vertices.
bool validate_inequality(const Graph& g, const LinearInequality& q);

// Exact sequential-lifting coefficient of x_v: rhs - max{q(x) : x IUC, x_v=1}.
// Pre: v outside the support, q valid for g.
long long lift_coefficient(const Graph& g, const LinearInequality& q, int v);

// Lift every vertex of 'order' (support members skipped) in sequence, adding
// the nonzero coefficients; family becomes Lifted when anything was added.
LinearInequality sequential_lift(const Graph& g, LinearInequality q, const std::vector<int>& order);

// Closed-form guarantees that the lifting coefficient of x_v vanishes for the
// witness's inequality. Returns false when no guarantee is available (the
// oracle is then the only route); never claims a vanish that does not hold.
bool lift_vanishing_guaranteed(const Graph& g, const StructureWitness& w, int v);

std::string inequality_to_text(const LinearInequality& q);
std::string inequality_to_json(const LinearInequality& q);

} // namespace iuc
