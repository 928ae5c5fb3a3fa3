#include "framelat/lattice.hpp"
#include "framelat/ldl.hpp"

namespace framelat {

namespace {

// Depth-first enumeration state over Gram = L D L^T. Writing y = L^T x,
// Q(x) = sum_i d_i y_i^2 with y_i = x_i + sum_{j>i} L(j,i) x_j, so fixing
// x_{i+1..k-1} bounds x_i by d_i (x_i + c_i)^2 <= bound - partial.
class Enumerator {
public:
    Enumerator(const RatMatrix& gram, std::uint64_t nodeBudget)
        : k_(gram.rows()), budget_(nodeBudget) {
        LdlResult f = ldlDecomposeOrThrow(gram);
        l_ = std::move(f.l);
        d_ = std::move(f.d);
        best_ = gram(0, 0);
        for (std::size_t i = 1; i < k_; ++i) best_ = std::min(best_, gram(i, i));
        x_.assign(k_, Int(0));
    }

    GramEnumeration run() {
        descend(k_, Rational(0));
        GramEnumeration out;
        out.minNormSq = best_;
        out.vectors = std::move(found_);
        return out;
    }

private:
    // level counts down; `level` coordinates x_0..x_{level-1} are still free.
    void descend(std::size_t level, const Rational& partial) {
        if (level == 0) {
            if (sgn(partial) == 0) return;  // the zero vector
            if (partial < best_) {
                best_ = partial;
                found_.clear();
            }
            if (partial == best_) found_.push_back(x_);
            return;
        }
        const std::size_t i = level - 1;
        Rational center(0);  // c_i = sum_{j>i} L(j,i) x_j
        for (std::size_t j = i + 1; j < k_; ++j)
            if (x_[j] != 0) center += l_(j, i) * Rational(x_[j]);

        auto admissible = [&](const Int& t) {
            spendNode();
            Rational y = Rational(t) + center;
            return d_[i] * y * y <= best_ - partial;
        };

        // The admissible t form an interval centered at -c_i, so when it
        // contains any integer it contains floor(-c_i) or ceil(-c_i).
        Int lo = floorOf(-center);
        if (!admissible(lo)) {
            lo += 1;
            if (!admissible(lo)) return;
        } else {
            while (admissible(lo - 1)) lo -= 1;
        }
        for (Int t = lo;; t += 1) {
            if (t != lo && !admissible(t)) break;
            x_[i] = t;
            Rational y = Rational(t) + center;
            descend(i, partial + d_[i] * y * y);
            x_[i] = 0;
        }
    }

    void spendNode() {
        if (budget_ == 0)
            throw BudgetError("shortest-vector enumeration exceeded its node budget; "
                              "inconclusive above the dimension budget");
        --budget_;
    }

    std::size_t k_;
    std::uint64_t budget_;
    RatMatrix l_;
    std::vector<Rational> d_;
    Rational best_;
    std::vector<Int> x_;
    std::vector<std::vector<Int>> found_;
};

} // namespace

GramEnumeration shortestVectorsOfGram(const RatMatrix& gram, std::uint64_t nodeBudget) {
    if (gram.rows() != gram.cols() || gram.rows() == 0)
        throw ValidationError("shortest-vector enumeration needs a square nonempty Gram");
    return Enumerator(gram, nodeBudget).run();
}

} // namespace framelat
