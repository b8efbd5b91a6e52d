#ifndef FANOCERT_MATRIX_HPP
#define FANOCERT_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fanocert/polynomial.hpp"

namespace fanocert {

// Rectangular matrix of polynomial entries. Constants are degree-0
// polynomials; non-constant entries are polynomials in parameters that are
// treated as transcendental.
class ExactMatrix {
public:
    ExactMatrix(RegistryPtr reg, std::size_t rows, std::size_t cols);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] const RegistryPtr& registry() const { return reg_; }

    [[nodiscard]] const Polynomial& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    [[nodiscard]] std::vector<Polynomial> apply(const std::vector<Polynomial>& v) const;
    [[nodiscard]] ExactMatrix transposed() const;

    [[nodiscard]] std::string to_string() const;

private:
    RegistryPtr reg_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Polynomial> data_;
};

struct KernelResult {
    std::size_t rank = 0;
    // Each vector has cols() entries; M * v == 0 exactly.
    std::vector<std::vector<Polynomial>> basis;
    // Pivot values met during elimination. With parameter entries the result
    // is valid wherever all of these are nonzero.
    std::vector<Polynomial> pivots;
    std::vector<std::size_t> pivot_columns;

    // True when some pivot is a non-constant polynomial, i.e. the rank and
    // kernel hold only off the vanishing locus of that pivot.
    [[nodiscard]] bool generic_only() const;
};

// Fraction-free Gauss-Jordan elimination. Every intermediate entry is a
// minor of the input, so all divisions are exact.
[[nodiscard]] KernelResult kernel(const ExactMatrix& m);
[[nodiscard]] std::size_t rank(const ExactMatrix& m);

}  // namespace fanocert

#endif  // FANOCERT_MATRIX_HPP
