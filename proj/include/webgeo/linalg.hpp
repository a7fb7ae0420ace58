// Dense exact linear algebra over a field (Rational or RatFunc):
// Gaussian elimination, rank, determinant, nullspace, linear solve.
#pragma once

#include <stdexcept>
#include <vector>

namespace webgeo {

template <class F>
struct FieldTraits {
    static bool is_zero(const F& v) { return v.is_zero(); }
};

template <class F>
class Mat {
  public:
    Mat() = default;
    Mat(size_t r, size_t c) : rows_(r), cols_(c), a_(r, std::vector<F>(c, F(0))) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    F& at(size_t r, size_t c) { return a_[r][c]; }
    const F& at(size_t r, size_t c) const { return a_[r][c]; }
    std::vector<F>& row(size_t r) { return a_[r]; }

    // in-place reduced row echelon; returns pivot columns
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t sel = rows_;
            for (size_t i = r; i < rows_; ++i) {
                if (!FieldTraits<F>::is_zero(a_[i][c])) {
                    sel = i;
                    break;
                }
            }
            if (sel == rows_) continue;
            std::swap(a_[r], a_[sel]);
            F inv = F(1) / a_[r][c];
            for (size_t k = c; k < cols_; ++k) a_[r][k] = a_[r][k] * inv;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                if (FieldTraits<F>::is_zero(a_[i][c])) continue;
                F f = a_[i][c];
                for (size_t k = c; k < cols_; ++k) a_[i][k] = a_[i][k] - f * a_[r][k];
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    size_t rank() const {
        Mat m = *this;
        return m.rref().size();
    }

    // basis of the right nullspace
    std::vector<std::vector<F>> nullspace() const {
        Mat m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<F>> basis;
        for (size_t fc = 0; fc < cols_; ++fc) {
            if (is_pivot[fc]) continue;
            std::vector<F> v(cols_, F(0));
            v[fc] = F(1);
            for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = F(0) - m.a_[pi][fc];
            basis.push_back(std::move(v));
        }
        return basis;
    }

    F det() const {
        if (rows_ != cols_) throw std::invalid_argument("Mat::det: not square");
        Mat m = *this;
        F d = F(1);
        bool neg = false;
        for (size_t c = 0; c < cols_; ++c) {
            size_t sel = rows_;
            for (size_t i = c; i < rows_; ++i) {
                if (!FieldTraits<F>::is_zero(m.a_[i][c])) {
                    sel = i;
                    break;
                }
            }
            if (sel == rows_) return F(0);
            if (sel != c) {
                std::swap(m.a_[c], m.a_[sel]);
                neg = !neg;
            }
            d = d * m.a_[c][c];
            F inv = F(1) / m.a_[c][c];
            for (size_t i = c + 1; i < rows_; ++i) {
                if (FieldTraits<F>::is_zero(m.a_[i][c])) continue;
                F f = m.a_[i][c] * inv;
                for (size_t k = c; k < cols_; ++k) m.a_[i][k] = m.a_[i][k] - f * m.a_[c][k];
            }
        }
        return neg ? F(0) - d : d;
    }

    // solves M v = rhs; throws when the system is singular/inconsistent
    std::vector<F> solve(const std::vector<F>& rhs) const {
        if (rhs.size() != rows_) throw std::invalid_argument("Mat::solve: size mismatch");
        Mat m(rows_, cols_ + 1);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j) m.a_[i][j] = a_[i][j];
            m.a_[i][cols_] = rhs[i];
        }
        auto pivots = m.rref();
        std::vector<F> v(cols_, F(0));
        for (size_t pi = 0; pi < pivots.size(); ++pi) {
            if (pivots[pi] == cols_) throw std::domain_error("Mat::solve: inconsistent system");
            v[pivots[pi]] = m.a_[pi][cols_];
        }
        if (pivots.size() < cols_) throw std::domain_error("Mat::solve: underdetermined system");
        return v;
    }

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<F>> a_;
};

} // namespace webgeo
