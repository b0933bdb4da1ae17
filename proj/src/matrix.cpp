// SPDX-License-Identifier: Apache-2.0
#include "ihopf/matrix.hpp"

namespace ihopf {

Matrix Matrix::identity(const FieldSpec& f, unsigned n) {
    Matrix m(f, n, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (field_ != o.field_) throw FieldMismatchError("matrix product across fields");
    if (cols_ != o.rows_) throw DomainError("matrix product shape mismatch");
    Matrix m(field_, rows_, o.cols_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (unsigned j = 0; j < o.cols_; ++j) {
                const Scalar& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                m.at(i, j) += aik * bkj;
            }
        }
    return m;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw DomainError("matrix-vector shape mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

std::vector<Scalar> Matrix::apply_transposed(const std::vector<Scalar>& v) const {
    if (v.size() != rows_) throw DomainError("matrix-vector shape mismatch");
    std::vector<Scalar> out(cols_, Scalar::zero(field_));
    for (unsigned j = 0; j < cols_; ++j)
        for (unsigned i = 0; i < rows_; ++i)
            if (!at(i, j).is_zero() && !v[i].is_zero()) out[j] += at(i, j) * v[i];
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw DomainError("only square matrices invert");
    const unsigned n = rows_;
    Matrix work = *this;
    Matrix inv = identity(field_, n);
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw DomainError("singular matrix");
        if (pivot != col) {
            for (unsigned j = 0; j < n; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        Scalar d = work.at(col, col).inverse();
        for (unsigned j = 0; j < n; ++j) {
            work.at(col, j) *= d;
            inv.at(col, j) *= d;
        }
        for (unsigned i = 0; i < n; ++i) {
            if (i == col || work.at(i, col).is_zero()) continue;
            Scalar f = work.at(i, col);
            for (unsigned j = 0; j < n; ++j) {
                work.at(i, j) -= f * work.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool Matrix::is_invertible() const {
    if (rows_ != cols_) return false;
    return rank() == rows_;
}

unsigned Matrix::rank() const {
    Matrix work = *this;
    unsigned r = 0;
    for (unsigned col = 0; col < cols_ && r < rows_; ++col) {
        unsigned pivot = r;
        while (pivot < rows_ && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != r)
            for (unsigned j = 0; j < cols_; ++j) std::swap(work.at(pivot, j), work.at(r, j));
        Scalar d = work.at(r, col).inverse();
        for (unsigned j = 0; j < cols_; ++j) work.at(r, j) *= d;
        for (unsigned i = r + 1; i < rows_; ++i) {
            if (work.at(i, col).is_zero()) continue;
            Scalar f = work.at(i, col);
            for (unsigned j = 0; j < cols_; ++j) work.at(i, j) -= f * work.at(r, j);
        }
        ++r;
    }
    return r;
}

unsigned row_rank(const FieldSpec& f, const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return 0;
    Matrix m(f, static_cast<unsigned>(rows.size()), static_cast<unsigned>(rows[0].size()));
    for (unsigned i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw DomainError("ragged row list");
        for (unsigned j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m.rank();
}

TransitionData::TransitionData(Matrix t) : T(std::move(t)), Tinv(T.inverse()) {
    if (T.rows() != T.cols()) throw DomainError("transition matrix must be square");
}

TransitionData TransitionData::identity(const FieldSpec& f, unsigned n) {
    return TransitionData(Matrix::identity(f, n));
}

TransitionData TransitionData::inverted() const {
    TransitionData td(Tinv);
    return td;
}

}  // namespace ihopf
