#include "iuc/lp.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include "iuc/structures.hpp"

namespace iuc {

namespace {

template <typename Num>
struct NumTraits;

template <>
struct NumTraits<double> {
    static double eps() { return 1e-9; }
    static double feas_eps() { return 1e-7; }
    static double abs(double v) { return v < 0 ? -v : v; }
};

template <>
struct NumTraits<Rational> {
    static Rational eps() { return 0; }
    static Rational feas_eps() { return 0; }
    static Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }
};

// Per-thread reusable buffers: node-by-node tree search solves tens of
// thousands of small LPs, and reallocating the tableau for each one costs
// more than the pivots
template <typename Num>
struct SimplexScratch {
    std::vector<Num> tableau, lo, hi, val, cost, reduced;
    std::vector<char> has_hi, at_hi;
    std::vector<int> basis, pos_in_basis;
    bool busy = false;
};

template <typename Num>
SimplexScratch<Num>& thread_scratch() {
    static thread_local SimplexScratch<Num> s;
    return s;
}

// Bounded-variable primal simplex on a dense tableau. Variables live in
// [lo, hi] (slacks and artificials have no upper bound); nonbasic variables
// sit at a bound and the tableau rows stay reduced against the basis. Entering
// variables are picked by largest reduced cost, falling back to smallest-index
// selection after a long run of degenerate steps so cycling cannot persist.
// When `subset` is given, only those rows of the problem enter the tableau.
template <typename Num>
class Simplex {
public:
    Simplex(const LPProblem<Num>& p, const std::vector<int>* subset)
        : n_(p.num_vars),
          m_(subset ? static_cast<int>(subset->size()) : static_cast<int>(p.rows.size())),
          S_(acquire()),
          T(S_->tableau),
          lo(S_->lo),
          hi(S_->hi),
          val(S_->val),
          cost_(S_->cost),
          has_hi(S_->has_hi),
          at_hi(S_->at_hi),
          basis(S_->basis),
          pos_in_basis(S_->pos_in_basis) {
        if (static_cast<int>(p.objective.size()) != n_ ||
            static_cast<int>(p.lower.size()) != n_ || static_cast<int>(p.upper.size()) != n_)
            throw std::invalid_argument("lp_solve: objective or bound size mismatch");
        auto row_at = [&](int i) -> const LPRow<Num>& {
            return p.rows[subset ? static_cast<size_t>((*subset)[i]) : static_cast<size_t>(i)];
        };
        total_ = n_ + m_;
        // row pitch reserves space for one artificial column per row, so
        // phase one never reallocates the tableau
        stride_ = n_ + 2 * m_;
        T.assign(static_cast<size_t>(m_) * stride_, Num(0));
        lo.assign(total_, Num(0));
        hi.assign(total_, Num(0));
        has_hi.assign(total_, 0);
        for (int j = 0; j < n_; ++j) {
            if (p.lower[j] > p.upper[j])
                throw std::invalid_argument("lp_solve: lower bound above upper bound");
            lo[j] = p.lower[j];
            hi[j] = p.upper[j];
            has_hi[j] = 1;
        }
        for (int i = 0; i < m_; ++i) {
            Num* Ti = row(i);
            for (auto& [v, c] : row_at(i).coeffs) {
                if (v < 0 || v >= n_) throw std::invalid_argument("lp_solve: row variable out of range");
                Ti[v] += c;
            }
            Ti[n_ + i] = Num(1);
        }
        val.assign(total_, Num(0));
        at_hi.assign(total_, 0);
        for (int j = 0; j < n_; ++j) val[j] = lo[j];
        basis.assign(m_, 0);
        pos_in_basis.assign(total_, -1);
        for (int i = 0; i < m_; ++i) {
            const Num* Ti = row(i);
            Num activity(0);
            for (int j = 0; j < n_; ++j)
                if (Ti[j] != 0) activity += Ti[j] * val[j];
            val[n_ + i] = row_at(i).rhs - activity;
            basis[i] = n_ + i;
            pos_in_basis[n_ + i] = i;
        }
        cost_.assign(total_, Num(0));
        for (int j = 0; j < n_; ++j) cost_[j] = p.objective[j];
        iter_limit_ = 10000 + 200 * (m_ + total_);
    }

    ~Simplex() {
        if (!own_) S_->busy = false;
    }

    Simplex(const Simplex&) = delete;
    Simplex& operator=(const Simplex&) = delete;

    LPSolution<Num> run() {
        LPSolution<Num> out;
        LPStatus st = ensure_feasible();
        if (st != LPStatus::Optimal) {
            out.status = st;
            out.iterations = iterations_;
            return out;
        }
        auto& d = S_->reduced;
        d.assign(total_, Num(0));
        for (int j = 0; j < total_; ++j) d[j] = cost_[j];
        reduce_against_basis(d);
        st = iterate(d);
        out.status = st;
        out.iterations = iterations_;
        if (st == LPStatus::Optimal || st == LPStatus::IterationLimit) {
            out.x.assign(val.begin(), val.begin() + n_);
            Num v(0);
            for (int j = 0; j < n_; ++j)
                if (cost_[j] != 0) v += cost_[j] * val[j];
            out.value = v;
        }
        return out;
    }

private:
    int n_, m_, total_;
    int stride_ = 0;
    std::unique_ptr<SimplexScratch<Num>> own_;
    SimplexScratch<Num>* S_;
    std::vector<Num>& T;
    std::vector<Num>&lo, &hi, &val, &cost_;
    std::vector<char>&has_hi, &at_hi;
    std::vector<int>&basis, &pos_in_basis;
    int iterations_ = 0;
    int iter_limit_ = 0;

    SimplexScratch<Num>* acquire() {
        auto& s = thread_scratch<Num>();
        if (!s.busy) {
            s.busy = true;
            return &s;
        }
        own_ = std::make_unique<SimplexScratch<Num>>();
        return own_.get();
    }

    Num* row(int i) { return T.data() + static_cast<size_t>(i) * stride_; }
    const Num* row(int i) const { return T.data() + static_cast<size_t>(i) * stride_; }

    bool fixed(int j) const { return has_hi[j] && !(lo[j] < hi[j]); }

    // dst -= f * src over the live columns; the double path stays branch-free
    // and alias-free so it vectorizes, the rational path skips zeros to avoid
    // mpq traffic
    void axpy(Num* __restrict dst, const Num* __restrict src, const Num& f) const {
        if constexpr (std::is_same_v<Num, double>) {
            for (int j = 0; j < total_; ++j) dst[j] -= f * src[j];
        } else {
            for (int j = 0; j < total_; ++j)
                if (src[j] != 0) dst[j] -= f * src[j];
        }
    }

    void reduce_against_basis(std::vector<Num>& d) {
        for (int i = 0; i < m_; ++i) {
            Num f = d[basis[i]];
            if (f != 0) axpy(d.data(), row(i), f);
        }
        for (int i = 0; i < m_; ++i) d[basis[i]] = Num(0);
    }

    void pivot(int r, int q, std::vector<Num>& d) {
        Num* R = row(r);
        const Num pv = R[q];
        if constexpr (std::is_same_v<Num, double>) {
            const double inv = 1.0 / pv;
            for (int j = 0; j < total_; ++j) R[j] *= inv;
        } else {
            for (int j = 0; j < total_; ++j)
                if (R[j] != 0) R[j] /= pv;
        }
        R[q] = Num(1);
        for (int i = 0; i < m_; ++i) {
            if (i == r) continue;
            Num* Ti = row(i);
            Num f = Ti[q];
            if (f == 0) continue;
            axpy(Ti, R, f);
            Ti[q] = Num(0);
        }
        Num f = d[q];
        if (f != 0) axpy(d.data(), R, f);
        d[q] = Num(0);
        pos_in_basis[basis[r]] = -1;
        basis[r] = q;
        pos_in_basis[q] = r;
    }

    LPStatus iterate(std::vector<Num>& d) {
        const Num eps = NumTraits<Num>::eps();
        long long stall = 0;
        const long long stall_switch = 5LL * (m_ + total_);
        bool bland = false;
        for (;;) {
            if (++iterations_ > iter_limit_) return LPStatus::IterationLimit;
            int q = -1;
            Num best_mag(0);
            for (int j = 0; j < total_; ++j) {
                if (pos_in_basis[j] >= 0 || fixed(j)) continue;
                const Num& dj = d[j];
                bool eligible = at_hi[j] ? (dj < -eps) : (dj > eps);
                if (!eligible) continue;
                if (bland) {
                    q = j;
                    break;
                }
                Num mag = NumTraits<Num>::abs(dj);
                if (q < 0 || mag > best_mag) {
                    best_mag = mag;
                    q = j;
                }
            }
            if (q < 0) return LPStatus::Optimal;
            const bool up = !at_hi[q];

            // ratio test: the entering variable moves away from its bound by
            // delta; hitting its opposite bound first means a plain flip
            int leave_row = -1;
            bool leave_to_hi = false;
            bool capped = has_hi[q] != 0;
            Num best_delta = capped ? Num(hi[q] - lo[q]) : Num(0);
            Num best_g(0);
            for (int i = 0; i < m_; ++i) {
                const Num& g = row(i)[q];
                if (g == 0) continue;
                // basic variable moves at -g per unit when entering rises
                Num rate = up ? Num(-g) : Num(g);
                int k = basis[i];
                Num room(0);
                bool to_hi_here = false;
                if (rate < -eps) {
                    room = val[k] - lo[k];
                } else if (rate > eps && has_hi[k]) {
                    room = hi[k] - val[k];
                    to_hi_here = true;
                } else {
                    continue;
                }
                if (room < 0) room = Num(0);
                Num mag = NumTraits<Num>::abs(rate);
                Num delta_i = room / mag;
                bool better;
                if (!capped && leave_row < 0) {
                    better = true;
                } else {
                    Num diff = best_delta - delta_i;
                    if (diff > eps) {
                        better = true;
                    } else if (diff < -eps) {
                        better = false;
                    } else if (leave_row < 0) {
                        better = false; // tie with a bound flip: keep the flip
                    } else {
                        better = bland ? basis[i] < basis[leave_row] : mag > best_g;
                    }
                }
                if (better) {
                    best_delta = delta_i;
                    leave_row = i;
                    leave_to_hi = to_hi_here;
                    best_g = mag;
                    capped = true;
                }
            }
            if (!capped) return LPStatus::Unbounded;
            Num delta = best_delta;
            if (delta < 0) delta = Num(0);

            if (delta != 0) {
                Num step = up ? delta : Num(-delta);
                val[q] += step;
                for (int i = 0; i < m_; ++i) {
                    const Num& g = row(i)[q];
                    if (g != 0) val[basis[i]] -= step * g;
                }
            }
            if (leave_row < 0) {
                at_hi[q] = !at_hi[q];
                val[q] = at_hi[q] ? hi[q] : lo[q];
            } else {
                int k = basis[leave_row];
                val[k] = leave_to_hi ? hi[k] : lo[k];
                at_hi[k] = leave_to_hi ? 1 : 0;
                pivot(leave_row, q, d);
            }
            if (delta > eps)
                stall = 0;
            else if (++stall > stall_switch)
                bland = true;
        }
    }

    // Start from lower bounds; rows whose slack comes out negative get an
    // artificial variable that phase one drives to zero.
    LPStatus ensure_feasible() {
        const Num feas = NumTraits<Num>::feas_eps();
        std::vector<int> bad;
        for (int i = 0; i < m_; ++i)
            if (val[n_ + i] < -feas) bad.push_back(i);
        if (bad.empty()) return LPStatus::Optimal;

        int first_art = total_;
        total_ += static_cast<int>(bad.size());
        lo.resize(total_, Num(0));
        hi.resize(total_, Num(0));
        has_hi.resize(total_, 0);
        val.resize(total_, Num(0));
        at_hi.resize(total_, 0);
        cost_.resize(total_, Num(0));
        pos_in_basis.resize(total_, -1);

        for (size_t a = 0; a < bad.size(); ++a) {
            int i = bad[a];
            int col = first_art + static_cast<int>(a);
            int slack = n_ + i;
            Num* Ti = row(i);
            // negate the row so the artificial carries coefficient one
            for (int j = 0; j < total_; ++j)
                if (Ti[j] != 0) Ti[j] = -Ti[j];
            Ti[col] = Num(1);
            val[col] = -val[slack];
            val[slack] = Num(0);
            at_hi[slack] = 0;
            pos_in_basis[slack] = -1;
            basis[i] = col;
            pos_in_basis[col] = i;
        }

        std::vector<Num> d(total_, Num(0));
        for (int c = first_art; c < total_; ++c) d[c] = Num(-1);
        reduce_against_basis(d);
        LPStatus st = iterate(d);
        if (st != LPStatus::Optimal) return st;

        Num residue(0);
        for (int c = first_art; c < total_; ++c) residue += val[c];
        if (residue > feas + NumTraits<Num>::eps()) return LPStatus::Infeasible;

        for (int c = first_art; c < total_; ++c) {
            has_hi[c] = 1;
            hi[c] = Num(0);
            val[c] = Num(0);
            int r = pos_in_basis[c];
            if (r < 0) continue;
            // a zero-valued artificial still in the basis: pivot it onto any
            // usable original column, or leave it pinned at zero
            for (int j = 0; j < first_art; ++j) {
                if (pos_in_basis[j] >= 0 || fixed(j)) continue;
                if (NumTraits<Num>::abs(row(r)[j]) > NumTraits<Num>::eps()) {
                    pivot(r, j, d);
                    val[j] = at_hi[j] ? hi[j] : lo[j];
                    break;
                }
            }
        }
        return LPStatus::Optimal;
    }
};

} // namespace

template <typename Num>
LPSolution<Num> lp_solve(const LPProblem<Num>& p) {
    Simplex<Num> s(p, nullptr);
    return s.run();
}

template <typename Num>
RelaxResult<Num> solve_with_active_rows(const LPProblem<Num>& p, std::vector<int> initial_active) {
    const Num feas = NumTraits<Num>::feas_eps();
    RelaxResult<Num> out;
    const int row_count = static_cast<int>(p.rows.size());
    std::vector<char> in_active(row_count, 0);
    std::vector<char> drops(row_count, 0);
    std::vector<int> active;
    active.reserve(initial_active.size());
    for (int i : initial_active) {
        if (i < 0 || i >= row_count || in_active[i]) continue;
        in_active[i] = 1;
        active.push_back(i);
    }
    auto activity = [&](int i) {
        Num act(0);
        for (auto& [v, c] : p.rows[i].coeffs) act += c * out.sol.x[v];
        return act;
    };
    // tableau cost grows with the square of the working set, so violated rows
    // enter in bounded batches and rows gone slack retire between rounds
    const int batch = std::max(64, p.num_vars);
    std::vector<std::pair<Num, int>> pending;
    for (;;) {
        ++out.rounds;
        Simplex<Num> simplex(p, &active);
        out.sol = simplex.run();
        if (out.sol.status != LPStatus::Optimal) break;
        pending.clear();
        for (int i = 0; i < row_count; ++i) {
            if (in_active[i]) continue;
            Num over = activity(i) - p.rows[i].rhs;
            if (over > feas) pending.push_back({over, i});
        }
        if (pending.empty()) break;
        // a row may retire at most twice; after that it stays, which bounds
        // the add/retire ping-pong and guarantees termination
        std::vector<int> kept;
        kept.reserve(active.size());
        for (int i : active) {
            if (drops[i] < 2 && p.rows[i].rhs - activity(i) > feas) {
                ++drops[i];
                in_active[i] = 0;
            } else {
                kept.push_back(i);
            }
        }
        active = std::move(kept);
        if (static_cast<int>(pending.size()) > batch) {
            std::nth_element(pending.begin(), pending.begin() + batch, pending.end(),
                             [](const auto& a, const auto& b) { return a.first > b.first; });
            pending.resize(batch);
        }
        for (auto& [over, i] : pending) {
            in_active[i] = 1;
            active.push_back(i);
        }
    }
    if (out.sol.status == LPStatus::Optimal) {
        // callers reuse the returned set as a warm start; the binding rows are
        // the part worth carrying forward
        std::vector<int> binding;
        for (int i : active)
            if (p.rows[i].rhs - activity(i) <= feas) binding.push_back(i);
        out.active = std::move(binding);
    } else {
        out.active = std::move(active);
    }
    return out;
}

template <typename Num>
LPRow<Num> row_from_inequality(const LinearInequality& q) {
    LPRow<Num> row;
    for (auto& [v, c] : q.terms) row.coeffs.push_back({v, Num(static_cast<int>(c))});
    row.rhs = Num(static_cast<int>(q.rhs));
    return row;
}

template <typename Num>
LPProblem<Num> relaxation_from_inequalities(int n, const std::vector<LinearInequality>& qs) {
    LPProblem<Num> p;
    p.num_vars = n;
    p.objective.assign(n, Num(1));
    p.lower.assign(n, Num(0));
    p.upper.assign(n, Num(1));
    for (auto& q : qs) p.rows.push_back(row_from_inequality<Num>(q));
    return p;
}

LPProblem<double> build_base_relaxation(const Graph& g, const std::vector<LinearInequality>& extra) {
    std::vector<LinearInequality> rows;
    for (auto& t : enumerate_open_triangles(g)) rows.push_back(ot_inequality(t));
    for (auto& q : extra) rows.push_back(q);
    return relaxation_from_inequalities<double>(g.vertex_count(), rows);
}

double fractional_iuc_number(const Graph& g) {
    std::vector<LinearInequality> extra;
    for (auto& h : enumerate_4holes(g)) extra.push_back(hole_inequality(h));
    auto p = build_base_relaxation(g, extra);
    auto res = solve_with_active_rows(p);
    if (res.sol.status != LPStatus::Optimal)
        throw std::runtime_error("fractional_iuc_number: relaxation did not solve");
    return res.sol.value;
}

std::string lp_problem_to_text(const LPProblem<double>& p) {
    std::ostringstream os;
    os << "lp: vars=" << p.num_vars << " rows=" << p.rows.size() << '\n';
    os << "max:";
    for (int j = 0; j < p.num_vars; ++j)
        if (p.objective[j] != 0) os << ' ' << j << ':' << p.objective[j];
    os << '\n';
    os << "bounds:";
    for (int j = 0; j < p.num_vars; ++j)
        os << ' ' << j << ":[" << p.lower[j] << ',' << p.upper[j] << ']';
    os << '\n';
    for (size_t i = 0; i < p.rows.size(); ++i) {
        os << "row " << i << ':';
        for (auto& [v, c] : p.rows[i].coeffs) os << ' ' << v << ':' << c;
        os << " <= " << p.rows[i].rhs << '\n';
    }
    return os.str();
}

template LPSolution<double> lp_solve<double>(const LPProblem<double>&);
template LPSolution<Rational> lp_solve<Rational>(const LPProblem<Rational>&);
template RelaxResult<double> solve_with_active_rows<double>(const LPProblem<double>&, std::vector<int>);
template RelaxResult<Rational> solve_with_active_rows<Rational>(const LPProblem<Rational>&, std::vector<int>);
template LPRow<double> row_from_inequality<double>(const LinearInequality&);
template LPRow<Rational> row_from_inequality<Rational>(const LinearInequality&);
template LPProblem<double> relaxation_from_inequalities<double>(int, const std::vector<LinearInequality>&);
template LPProblem<Rational> relaxation_from_inequalities<Rational>(int, const std::vector<LinearInequality>&);

} // namespace iuc
