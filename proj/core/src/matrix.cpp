#include "fanocert/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fanocert {

ExactMatrix::ExactMatrix(RegistryPtr reg, std::size_t rows, std::size_t cols)
    : reg_(std::move(reg)), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(reg_)) {}

std::vector<Polynomial> ExactMatrix::apply(const std::vector<Polynomial>& v) const {
    if (v.size() != cols_) throw UsageError("vector length does not match column count");
    std::vector<Polynomial> out(rows_, Polynomial(reg_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(reg_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
        os << "]\n";
    }
    return os.str();
}

bool KernelResult::generic_only() const {
    return std::any_of(pivots.begin(), pivots.end(),
                       [](const Polynomial& p) { return !p.is_constant(); });
}

namespace {

// Prefer constant pivots, then the sparsest candidate, so that genericity
// conditions are only introduced when unavoidable.
std::optional<std::size_t> choose_pivot(const ExactMatrix& a, std::size_t from_row, std::size_t col) {
    std::optional<std::size_t> best;
    for (std::size_t r = from_row; r < a.rows(); ++r) {
        const auto& e = a(r, col);
        if (e.is_zero()) continue;
        if (!best) {
            best = r;
            continue;
        }
        const auto& b = a(*best, col);
        const bool e_const = e.is_constant();
        const bool b_const = b.is_constant();
        if ((e_const && !b_const) || (e_const == b_const && e.num_terms() < b.num_terms())) best = r;
    }
    return best;
}

}  // namespace

KernelResult kernel(const ExactMatrix& m) {
    ExactMatrix a = m;
    const auto& reg = m.registry();
    KernelResult res;
    Polynomial prev(reg, Rational(1));
    std::size_t row = 0;

    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        auto p = choose_pivot(a, row, col);
        if (!p) continue;
        if (*p != row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(*p, c), a(row, c));

        const Polynomial pivot = a(row, col);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row) continue;
            const Polynomial factor = a(r, col);
            for (std::size_t c = 0; c < a.cols(); ++c) {
                if (c == col) continue;
                Polynomial num = pivot * a(r, c) - factor * a(row, c);
                if (num.is_zero()) {
                    a(r, c) = std::move(num);
                    continue;
                }
                auto q = exact_divide(num, prev);
                if (!q) throw std::logic_error("fraction-free elimination: inexact division");
                a(r, c) = std::move(*q);
            }
            // Column col is zero off the pivot row; earlier pivot rows now
            // carry this pivot value on their own pivot positions.
            a(r, col) = Polynomial(reg);
        }
        res.pivots.push_back(pivot);
        res.pivot_columns.push_back(col);
        prev = pivot;
        ++row;
    }
    res.rank = row;

    // After full fraction-free reduction every pivot row reads d * x_pivot +
    // sum(a(i, j) x_j) with the common value d = prev.
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : res.pivot_columns) is_pivot[c] = true;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Polynomial> v(a.cols(), Polynomial(reg));
        v[free] = prev;
        for (std::size_t i = 0; i < res.rank; ++i) v[res.pivot_columns[i]] = -a(i, free);
        res.basis.push_back(std::move(v));
    }
    return res;
}

std::size_t rank(const ExactMatrix& m) { return kernel(m).rank; }

}  // namespace fanocert
