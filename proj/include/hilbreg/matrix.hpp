#pragma once
#include <cstddef>
#include <vector>

#include "hilbreg/rational.hpp"

namespace hilbreg {

// Dense rational matrix, row major.
struct QMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> a;

    QMatrix() = default;
    QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

    Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    std::vector<Rat> row(std::size_t i) const {
        return std::vector<Rat>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
    }
};

// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref_inplace(QMatrix& m);

std::size_t rank(QMatrix m);

Rat det(QMatrix m);  // square only

// Rows spanning the right-nullspace {v : m v = 0}.
QMatrix nullspace(const QMatrix& m);

// Incremental row-echelon span; keeps reduced rows with pivot bookkeeping.
class RowSpan {
public:
    explicit RowSpan(std::size_t cols) : cols_(cols) {}

    // Reduces v against the current rows; if a new pivot remains, absorbs it
    // and returns true.
    bool add(std::vector<Rat> v);

    bool contains(const std::vector<Rat>& v) const;

    // v reduced modulo the span (zero vector iff contained).
    std::vector<Rat> residue(std::vector<Rat> v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }

private:
    std::size_t cols_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace hilbreg
