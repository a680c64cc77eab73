#pragma once

#include "qca/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace qca {

/// Dense integer matrix, row major.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
    IntMat(int rows, int cols, std::vector<std::int64_t> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != static_cast<size_t>(rows) * cols)
            throw validation_error("IntMat: entry count does not match dimensions");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    std::int64_t at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const std::vector<std::int64_t>& entries() const { return a_; }

    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }

    bool is_skew_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; i++)
            for (int j = 0; j <= i; j++)
                if (at(i, j) != -at(j, i)) return false;
        return true;
    }

    friend IntMat operator*(const IntMat& a, const IntMat& b) {
        if (a.cols_ != b.rows_) throw validation_error("IntMat: dimension mismatch in product");
        IntMat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; i++)
            for (int k = 0; k < a.cols_; k++) {
                const std::int64_t v = a.at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < b.cols_; j++) r.at(i, j) += v * b.at(k, j);
            }
        return r;
    }

    IntMat transposed() const {
        IntMat r(cols_, rows_);
        for (int i = 0; i < rows_; i++)
            for (int j = 0; j < cols_; j++) r.at(j, i) = at(i, j);
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        for (int i = 0; i < rows_; i++) {
            for (int j = 0; j < cols_; j++) os << (j ? " " : "") << at(i, j);
            os << "\n";
        }
        return os.str();
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> a_;
};

/// m x n exchange matrix together with the row housing each mutable column.
/// Rows index the whole cluster (frozen rows included); column c drives
/// mutation of the variable living in row mutable_rows[c].
struct ExchangeMatrix {
    IntMat mat;
    std::vector<int> mutable_rows;

    ExchangeMatrix() = default;
    ExchangeMatrix(IntMat m, std::vector<int> mrows) : mat(std::move(m)), mutable_rows(std::move(mrows)) {
        validate();
    }

    int var_count() const { return mat.rows(); }
    int mutable_count() const { return mat.cols(); }
    int row_of_column(int c) const { return mutable_rows[c]; }
    bool is_mutable_row(int r) const {
        return std::find(mutable_rows.begin(), mutable_rows.end(), r) != mutable_rows.end();
    }
    int column_of_row(int r) const {
        for (size_t c = 0; c < mutable_rows.size(); c++)
            if (mutable_rows[c] == r) return static_cast<int>(c);
        return -1;
    }

    void validate() const {
        if (static_cast<int>(mutable_rows.size()) != mat.cols())
            throw validation_error("ExchangeMatrix: mutable_rows size must equal column count");
        std::vector<bool> seen(mat.rows(), false);
        for (int r : mutable_rows) {
            if (r < 0 || r >= mat.rows()) throw validation_error("ExchangeMatrix: mutable row out of range");
            if (seen[r]) throw validation_error("ExchangeMatrix: duplicate mutable row");
            seen[r] = true;
        }
        // Principal part must be skew-symmetric.
        for (int c = 0; c < mat.cols(); c++)
            for (int d = 0; d < mat.cols(); d++)
                if (mat.at(mutable_rows[c], d) != -mat.at(mutable_rows[d], c))
                    throw validation_error("ExchangeMatrix: principal part is not skew-symmetric");
    }

    bool operator==(const ExchangeMatrix& o) const { return mat == o.mat && mutable_rows == o.mutable_rows; }
};

struct QuasiCommutationMatrix {
    IntMat mat;

    QuasiCommutationMatrix() = default;
    explicit QuasiCommutationMatrix(IntMat m) : mat(std::move(m)) {
        if (!mat.is_skew_symmetric())
            throw validation_error("QuasiCommutationMatrix: matrix is not skew-symmetric");
    }

    int size() const { return mat.rows(); }
    std::int64_t at(int i, int j) const { return mat.at(i, j); }
    bool operator==(const QuasiCommutationMatrix& o) const { return mat == o.mat; }
};

/// Matrix mutation in direction k (a mutable column index).  Sign flip on the
/// row and column through k, b_ij + (|b_ik| b_kj + b_ik |b_kj|)/2 elsewhere.
inline ExchangeMatrix mutate_exchange_matrix(const ExchangeMatrix& B, int k) {
    if (k < 0 || k >= B.mutable_count())
        throw validation_error("mutate: direction " + std::to_string(k) + " out of range");
    const int rk = B.row_of_column(k);
    ExchangeMatrix R = B;
    for (int i = 0; i < B.mat.rows(); i++) {
        for (int j = 0; j < B.mat.cols(); j++) {
            if (i == rk || j == k) {
                R.mat.at(i, j) = -B.mat.at(i, j);
            } else {
                const std::int64_t bik = B.mat.at(i, k);
                const std::int64_t bkj = B.mat.at(rk, j);
                const std::int64_t num = std::abs(bik) * bkj + bik * std::abs(bkj);
                if (num % 2 != 0) throw internal_error("mutate: odd numerator in mutation rule");
                R.mat.at(i, j) = B.mat.at(i, j) + num / 2;
            }
        }
    }
    R.validate();
    return R;
}

/// Verifies B^T L = diagonal d_c > 0 at the mutable positions and zero
/// elsewhere; returns (d_0, ..., d_{n-1}).
inline std::vector<std::int64_t> compatibility_diagonal(const ExchangeMatrix& B,
                                                        const QuasiCommutationMatrix& L) {
    if (B.var_count() != L.size())
        throw validation_error("compatibility: B and L dimensions disagree");
    const IntMat prod = B.mat.transposed() * L.mat;
    std::vector<std::int64_t> diag(B.mutable_count(), 0);
    for (int c = 0; c < B.mutable_count(); c++) {
        const int rc = B.row_of_column(c);
        for (int j = 0; j < L.size(); j++) {
            const std::int64_t v = prod.at(c, j);
            if (j == rc) {
                if (v <= 0)
                    throw incompatibility_error("compatibility: (B^T L)[" + std::to_string(c) + "][" +
                                                std::to_string(j) + "] = " + std::to_string(v) +
                                                " is not a positive diagonal entry");
                diag[c] = v;
            } else if (v != 0) {
                throw incompatibility_error("compatibility: (B^T L)[" + std::to_string(c) + "][" +
                                            std::to_string(j) + "] = " + std::to_string(v) +
                                            " is nonzero off the diagonal");
            }
        }
    }
    return diag;
}

inline bool is_compatible(const ExchangeMatrix& B, const QuasiCommutationMatrix& L) {
    try {
        compatibility_diagonal(B, L);
        return true;
    } catch (const incompatibility_error&) {
        return false;
    }
}

namespace detail {

// E has E[i][j] = delta_ij away from column r(k); E[r][r] = -1 and
// E[i][r] = max(0, sign * B[i][k]) in column r(k).
inline IntMat mutation_matrix(const ExchangeMatrix& B, int k, int sign) {
    const int m = B.var_count();
    const int rk = B.row_of_column(k);
    IntMat E(m, m);
    for (int i = 0; i < m; i++) E.at(i, i) = 1;
    E.at(rk, rk) = -1;
    for (int i = 0; i < m; i++) {
        if (i == rk) continue;
        E.at(i, rk) = std::max<std::int64_t>(0, sign * B.mat.at(i, k));
    }
    return E;
}

} // namespace detail

/// Quasi-commutation mutation L' = E^T L E.  Both sign constructions of E
/// must produce the same matrix; compatibility guarantees it.
inline QuasiCommutationMatrix mutate_quasi_commutation(const ExchangeMatrix& B,
                                                       const QuasiCommutationMatrix& L, int k) {
    if (k < 0 || k >= B.mutable_count())
        throw validation_error("mutate: direction " + std::to_string(k) + " out of range");
    compatibility_diagonal(B, L);
    const IntMat Ep = detail::mutation_matrix(B, k, +1);
    const IntMat Em = detail::mutation_matrix(B, k, -1);
    const IntMat Lp = Ep.transposed() * L.mat * Ep;
    const IntMat Lm = Em.transposed() * L.mat * Em;
    if (Lp != Lm) throw internal_error("mutate: the two sign constructions of L' disagree");
    return QuasiCommutationMatrix(Lp);
}

/// Weighted digraph of B: arrow i -> r(c) for positive entries, reversed for
/// negative ones; frozen flags on rows without a column.
struct Quiver {
    struct Arrow {
        int from, to;
        std::int64_t weight;
        bool operator==(const Arrow&) const = default;
    };
    std::vector<Arrow> arrows;
    std::vector<bool> frozen;
};

inline Quiver quiver_of(const ExchangeMatrix& B) {
    Quiver g;
    g.frozen.assign(B.var_count(), true);
    for (int r : B.mutable_rows) g.frozen[r] = false;
    std::map<std::pair<int, int>, std::int64_t> arrows;
    for (int i = 0; i < B.var_count(); i++) {
        for (int c = 0; c < B.mutable_count(); c++) {
            const std::int64_t b = B.mat.at(i, c);
            const int rc = B.row_of_column(c);
            if (b == 0 || i == rc) continue;
            const auto key = b > 0 ? std::make_pair(i, rc) : std::make_pair(rc, i);
            const std::int64_t w = b > 0 ? b : -b;
            auto [it, inserted] = arrows.emplace(key, w);
            if (!inserted && it->second != w)
                throw internal_error("quiver: inconsistent weights between mirrored entries");
        }
    }
    for (const auto& [key, w] : arrows) g.arrows.push_back({key.first, key.second, w});
    return g;
}

} // namespace qca
