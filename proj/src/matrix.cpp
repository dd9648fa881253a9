#include "hilbreg/matrix.hpp"

#include "hilbreg/errors.hpp"

namespace hilbreg {

std::vector<std::size_t> rref_inplace(QMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && m.at(p, c) == 0) ++p;
        if (p == m.rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = m.at(r, c);
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) /= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(QMatrix m) { return rref_inplace(m).size(); }

Rat det(QMatrix m) {
    if (m.rows != m.cols) throw internal_error("det on non-square matrix");
    Rat sign(1);
    for (std::size_t c = 0; c < m.cols; ++c) {
        std::size_t p = c;
        while (p < m.rows && m.at(p, c) == 0) ++p;
        if (p == m.rows) return Rat(0);
        if (p != c) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(c, j));
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < m.rows; ++i) {
            if (m.at(i, c) == 0) continue;
            Rat f = m.at(i, c) / m.at(c, c);
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    Rat out = sign;
    for (std::size_t c = 0; c < m.cols; ++c) out *= m.at(c, c);
    return out;
}

QMatrix nullspace(const QMatrix& m) {
    QMatrix e = m;
    std::vector<std::size_t> piv = rref_inplace(e);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : piv) is_pivot[c] = true;
    QMatrix out(m.cols - piv.size(), m.cols);
    std::size_t r = 0;
    for (std::size_t fc = 0; fc < m.cols; ++fc) {
        if (is_pivot[fc]) continue;
        out.at(r, fc) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) out.at(r, piv[i]) = -e.at(i, fc);
        ++r;
    }
    return out;
}

bool RowSpan::add(std::vector<Rat> v) {
    v = residue(std::move(v));
    std::size_t p = 0;
    while (p < cols_ && v[p] == 0) ++p;
    if (p == cols_) return false;
    Rat inv = v[p];
    for (std::size_t j = p; j < cols_; ++j) v[j] /= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rat f = rows_[i][p];
        if (f == 0) continue;
        for (std::size_t j = p; j < cols_; ++j) rows_[i][j] -= f * v[j];
    }
    // keep rows ordered by pivot column
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

std::vector<Rat> RowSpan::residue(std::vector<Rat> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rat f = v[pivots_[i]];
        if (f == 0) continue;
        for (std::size_t j = pivots_[i]; j < cols_; ++j) v[j] -= f * rows_[i][j];
    }
    return v;
}

bool RowSpan::contains(const std::vector<Rat>& v) const {
    std::vector<Rat> r = residue(v);
    for (const Rat& x : r)
        if (x != 0) return false;
    return true;
}

}  // namespace hilbreg
