#include "framelat/simplex.hpp"

#include <optional>

namespace framelat {

namespace {

// max c^T x  s.t.  A x = b, x >= 0, solved on a dense tableau.
// Bland's rule: entering = lowest-index improving column, leaving = lowest
// basic index among the minimum ratios. Terminates in exact arithmetic.
class Tableau {
public:
    Tableau(const RatMatrix& a, const std::vector<Rational>& b) : m_(a.rows()), n_(a.cols()) {
        t_ = RatMatrix(m_, n_ + 1);
        for (std::size_t i = 0; i < m_; ++i) {
            int flip = sgn(b[i]) < 0 ? -1 : 1;
            for (std::size_t j = 0; j < n_; ++j) t_(i, j) = Rational(flip) * a(i, j);
            t_(i, n_) = Rational(flip) * b[i];
        }
        basis_.assign(m_, std::size_t(-1));
    }

    // Phase 1: drive artificial variables to zero. Returns false if infeasible.
    bool findBasicFeasible() {
        // Artificial columns are indices n_..n_+m_-1, handled implicitly:
        // reduced costs start as the negative column sums of the tableau.
        std::vector<Rational> cost(n_ + 1, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            basis_[i] = n_ + i;  // artificial
            for (std::size_t j = 0; j <= n_; ++j) cost[j] += t_(i, j);
        }
        // Maximize -(sum of artificials); objective value = -(sum of b) + ...
        // cost[j] > 0 means entering column j reduces the artificial sum.
        while (true) {
            std::size_t enter = n_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (sgn(cost[j]) > 0 && !isBasic(j)) {
                    enter = j;
                    break;
                }
            }
            if (enter == n_) break;
            std::size_t leave = chooseLeaving(enter);
            if (leave == m_) break;  // cannot happen in phase 1 (bounded below by 0)
            pivot(leave, enter, &cost);
        }
        if (sgn(cost[n_]) != 0) return false;  // artificial sum stays positive
        // Pivot remaining zero-level artificials out of the basis when possible.
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            std::size_t enter = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (sgn(t_(i, j)) != 0 && !isBasic(j)) {
                    enter = j;
                    break;
                }
            if (enter < n_) pivot(i, enter, nullptr);
            // A fully zero row keeps its artificial at level 0; harmless.
        }
        return true;
    }

    // Phase 2: maximize objective c over the current basic feasible point.
    void maximize(const std::vector<Rational>& objective) {
        std::vector<Rational> cost(n_ + 1, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) cost[j] = objective[j];
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] >= n_) continue;
            Rational cb = objective[basis_[i]];
            if (sgn(cb) == 0) continue;
            for (std::size_t j = 0; j <= n_; ++j) cost[j] -= cb * t_(i, j);
        }
        while (true) {
            std::size_t enter = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (sgn(cost[j]) > 0 && !isBasic(j)) {
                    enter = j;
                    break;
                }
            if (enter == n_) return;
            std::size_t leave = chooseLeaving(enter);
            if (leave == m_) throw InternalError("simplex: unbounded objective despite cap");
            pivot(leave, enter, &cost);
        }
    }

    std::vector<Rational> solution() const {
        std::vector<Rational> x(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = t_(i, n_);
        return x;
    }

private:
    bool isBasic(std::size_t j) const {
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] == j) return true;
        return false;
    }

    std::size_t chooseLeaving(std::size_t enter) const {
        std::size_t best = m_;
        std::optional<Rational> bestRatio;
        for (std::size_t i = 0; i < m_; ++i) {
            if (sgn(t_(i, enter)) <= 0) continue;
            Rational ratio = t_(i, n_) / t_(i, enter);
            if (!bestRatio || ratio < *bestRatio ||
                (ratio == *bestRatio && basis_[i] < basis_[best])) {
                bestRatio = ratio;
                best = i;
            }
        }
        return best;
    }

    void pivot(std::size_t row, std::size_t col, std::vector<Rational>* cost) {
        Rational inv = Rational(1) / t_(row, col);
        for (std::size_t j = 0; j <= n_; ++j) t_(row, j) *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || sgn(t_(i, col)) == 0) continue;
            Rational f = t_(i, col);
            for (std::size_t j = 0; j <= n_; ++j) t_(i, j) -= f * t_(row, j);
        }
        if (cost && sgn((*cost)[col]) != 0) {
            Rational f = (*cost)[col];
            for (std::size_t j = 0; j <= n_; ++j) (*cost)[j] -= f * t_(row, j);
        }
        basis_[row] = col;
    }

    std::size_t m_, n_;
    RatMatrix t_;                     // [A | b] under the current basis
    std::vector<std::size_t> basis_;  // >= n_ marks an artificial variable
};

} // namespace

NonnegClassification lpClassifyNonneg(const RatMatrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw ValidationError("lp_classify_nonneg: dimension mismatch");
    NonnegClassification res;

    Tableau feas(a, b);
    if (!feas.findBasicFeasible()) {
        res.kind = NonnegFeasibility::Infeasible;
        return res;
    }
    std::vector<Rational> boundaryWitness = feas.solution();

    // Strictness via max t s.t. A(s + t 1) = b, s >= 0, t >= 0, t + u = 1.
    // Variables: [s_0..s_{m-1}, t, u].
    const std::size_t m = a.cols();
    RatMatrix ext(a.rows() + 1, m + 2);
    std::vector<Rational> extB(b);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational rowSum(0);
        for (std::size_t j = 0; j < m; ++j) {
            ext(i, j) = a(i, j);
            rowSum += a(i, j);
        }
        ext(i, m) = rowSum;
    }
    for (std::size_t j = 0; j <= m; ++j) ext(a.rows(), j) = j == m ? Rational(1) : Rational(0);
    ext(a.rows(), m + 1) = Rational(1);
    extB.push_back(Rational(1));

    Tableau strict(ext, extB);
    if (!strict.findBasicFeasible()) throw InternalError("strict-phase LP lost feasibility");
    std::vector<Rational> objective(m + 2, Rational(0));
    objective[m] = Rational(1);
    strict.maximize(objective);
    std::vector<Rational> x = strict.solution();
    res.maxMinEntry = x[m];

    if (sgn(res.maxMinEntry) > 0) {
        res.kind = NonnegFeasibility::FeasibleStrict;
        res.witness.assign(m, Rational(0));
        for (std::size_t j = 0; j < m; ++j) res.witness[j] = x[j] + x[m];
    } else {
        res.kind = NonnegFeasibility::FeasibleBoundary;
        res.witness = boundaryWitness;
    }
    return res;
}

} // namespace framelat
