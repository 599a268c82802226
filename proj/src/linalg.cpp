#include "fdrm/linalg.hpp"

#include <algorithm>
#include <set>

namespace fdrm {
namespace {

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!a->same(*b)) throw std::invalid_argument("field mismatch");
}

void require_same_shape(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field());
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix size mismatch");
}

// In-place Gauss reduction of generic row vectors over a field.
class VectorReducer {
public:
    VectorReducer(FieldPtr field, int len) : field_(std::move(field)), len_(len) {}

    bool insert(std::vector<int> v) {
        for (auto& [pos, w] : rows_) {
            if (v[pos] != 0) eliminate(v, w, v[pos]);
        }
        int lead = -1;
        for (int i = 0; i < len_; ++i)
            if (v[i] != 0) {
                lead = i;
                break;
            }
        if (lead < 0) return false;
        int s = field_->inv(v[lead]);
        for (auto& x : v) x = field_->mul(x, s);
        for (auto& [pos, w] : rows_) {
            (void)pos;
            if (w[lead] != 0) eliminate(w, v, w[lead]);
        }
        rows_.emplace_back(lead, std::move(v));
        std::sort(rows_.begin(), rows_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return true;
    }

    // True when v reduces to zero against the current rows.
    bool reduces_to_zero(std::vector<int> v) const {
        for (const auto& [pos, w] : rows_) {
            if (v[pos] != 0) eliminate(v, w, v[pos]);
        }
        return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
    }

    const std::vector<std::pair<int, std::vector<int>>>& rows() const { return rows_; }

private:
    void eliminate(std::vector<int>& target, const std::vector<int>& src, int coeff) const {
        int c = field_->neg(coeff);
        for (int i = 0; i < len_; ++i)
            if (src[i] != 0) target[i] = field_->add(target[i], field_->mul(c, src[i]));
    }

    FieldPtr field_;
    int len_;
    std::vector<std::pair<int, std::vector<int>>> rows_;
};

}  // namespace

Matrix::Matrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_((size_t)rows * cols, 0) {
    if (!field_) throw std::invalid_argument("null field");
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<int>>& rows) {
    int k = (int)rows.size();
    int m = k > 0 ? (int)rows[0].size() : 0;
    Matrix M(std::move(field), k, m);
    for (int r = 0; r < k; ++r) {
        if ((int)rows[r].size() != m) throw std::invalid_argument("ragged rows");
        for (int c = 0; c < m; ++c) M.set(r, c, rows[r][c]);
    }
    return M;
}

Matrix Matrix::unit(FieldPtr field, int rows, int cols, int i, int j) {
    Matrix M(std::move(field), rows, cols);
    if (i < 1 || i > rows || j < 1 || j > cols) throw std::invalid_argument("cell out of range");
    M.set(i - 1, j - 1, 1);
    return M;
}

Matrix Matrix::identity(FieldPtr field, int n) {
    Matrix M(std::move(field), n, n);
    for (int i = 0; i < n; ++i) M.set(i, i, 1);
    return M;
}

void Matrix::set(int r, int c, int v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::invalid_argument("index out of range");
    if (v < 0 || v >= field_->q()) throw std::invalid_argument("entry out of field range");
    data_[r * cols_ + c] = v;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](int x) { return x == 0; });
}

bool Matrix::operator==(const Matrix& o) const {
    return field_->same(*o.field_) && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_shape(*this, o);
    Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_->add(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_shape(*this, o);
    Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_->sub(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::scaled(int c) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = field_->mul(x, c);
    return r;
}

void Matrix::add_scaled_inplace(const Matrix& o, int c) {
    require_same_shape(*this, o);
    if (c == 0) return;
    for (size_t i = 0; i < data_.size(); ++i)
        if (o.data_[i] != 0) data_[i] = field_->add(data_[i], field_->mul(c, o.data_[i]));
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.data_[j * rows_ + i] = data_[i * cols_ + j];
    return r;
}

Matrix Matrix::anti_transpose() const {
    Matrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r.data_[(cols_ - 1 - j) * rows_ + (rows_ - 1 - i)] = data_[i * cols_ + j];
    return r;
}

void Matrix::paste(const Matrix& o, int row_off, int col_off) {
    require_same_field(field_, o.field());
    if (row_off < 0 || col_off < 0 || row_off + o.rows() > rows_ || col_off + o.cols() > cols_)
        throw std::invalid_argument("paste out of range");
    for (int i = 0; i < o.rows(); ++i)
        for (int j = 0; j < o.cols(); ++j) data_[(row_off + i) * cols_ + (col_off + j)] = o.at(i, j);
}

int Matrix::rank() const {
    std::vector<int> work = data_;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int piv = -1;
        for (int i = r; i < rows_; ++i)
            if (work[i * cols_ + c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(work[r * cols_ + j], work[piv * cols_ + j]);
        int s = field_->inv(work[r * cols_ + c]);
        for (int i = r + 1; i < rows_; ++i) {
            int f = work[i * cols_ + c];
            if (f == 0) continue;
            int g = field_->neg(field_->mul(f, s));
            for (int j = c; j < cols_; ++j)
                work[i * cols_ + j] =
                    field_->add(work[i * cols_ + j], field_->mul(g, work[r * cols_ + j]));
        }
        ++r;
    }
    return r;
}

std::pair<Matrix, std::vector<int>> Matrix::rref() const {
    Matrix R = *this;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int piv = -1;
        for (int i = r; i < rows_; ++i)
            if (R.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < cols_; ++j) {
            int t = R.at(r, j);
            R.set(r, j, R.at(piv, j));
            R.set(piv, j, t);
        }
        int s = field_->inv(R.at(r, c));
        for (int j = 0; j < cols_; ++j) R.set(r, j, field_->mul(R.at(r, j), s));
        for (int i = 0; i < rows_; ++i) {
            if (i == r) continue;
            int f = R.at(i, c);
            if (f == 0) continue;
            int g = field_->neg(f);
            for (int j = 0; j < cols_; ++j)
                R.set(i, j, field_->add(R.at(i, j), field_->mul(g, R.at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return {R, pivots};
}

std::vector<Cell> Matrix::support() const {
    std::vector<Cell> cells;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) cells.emplace_back(i + 1, j + 1);
    return cells;
}

std::vector<std::vector<int>> nullspace(const Matrix& M) {
    auto [R, pivots] = M.rref();
    const auto& f = M.field();
    std::vector<bool> is_pivot(M.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<int>> basis;
    for (int fc = 0; fc < M.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<int> x(M.cols(), 0);
        x[fc] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f->neg(R.at((int)r, fc));
        basis.push_back(std::move(x));
    }
    return basis;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field());
    if (a.cols() != b.cols()) throw std::invalid_argument("column count mismatch");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols());
    r.paste(a, 0, 0);
    r.paste(b, a.rows(), 0);
    return r;
}

MatrixSpace::MatrixSpace(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (!field_) throw std::invalid_argument("null field");
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
}

MatrixSpace MatrixSpace::span(FieldPtr field, int rows, int cols, const std::vector<Matrix>& gens) {
    MatrixSpace S(field, rows, cols);
    VectorReducer red(field, rows * cols);
    for (const auto& g : gens) {
        require_same_field(field, g.field());
        if (g.rows() != rows || g.cols() != cols) throw std::invalid_argument("generator size mismatch");
        red.insert(g.data());
    }
    for (const auto& [pos, vec] : red.rows()) {
        Matrix M(field, rows, cols);
        for (int i = 0; i < rows * cols; ++i)
            if (vec[i] != 0) M.set(i / cols, i % cols, vec[i]);
        S.basis_.push_back(std::move(M));
        S.leading_.push_back(pos);
    }
    return S;
}

Matrix MatrixSpace::element(const std::vector<int>& coeffs) const {
    if ((int)coeffs.size() != dim()) throw std::invalid_argument("coefficient count mismatch");
    Matrix M(field_, rows_, cols_);
    for (int i = 0; i < dim(); ++i) M.add_scaled_inplace(basis_[i], coeffs[i]);
    return M;
}

bool MatrixSpace::contains(const Matrix& M) const {
    require_same_field(field_, M.field());
    if (M.rows() != rows_ || M.cols() != cols_) return false;
    VectorReducer red(field_, rows_ * cols_);
    for (const auto& b : basis_) red.insert(b.data());
    return red.reduces_to_zero(M.data());
}

SpanOdometer::SpanOdometer(const MatrixSpace& S, long long start_index)
    : space_(&S), digits_(S.dim(), 0), value_(S.field(), S.rows(), S.cols()), index_(start_index) {
    const long long q = S.field()->q();
    long long t = start_index;
    for (int i = 0; i < S.dim(); ++i) {
        digits_[i] = (int)(t % q);
        t /= q;
    }
    if (t != 0) throw std::invalid_argument("start index beyond the span");
    value_ = S.element(digits_);
}

void SpanOdometer::step() {
    const auto& f = space_->field();
    const int q = (int)f->q();
    ++index_;
    for (int i = 0; i < (int)digits_.size(); ++i) {
        int old = digits_[i];
        int nxt = old + 1 == q ? 0 : old + 1;
        digits_[i] = nxt;
        value_.add_scaled_inplace(space_->basis()[i], f->sub(nxt, old));
        if (nxt != 0) return;
    }
    index_ = 0;  // wrapped past the last element
}

MatrixSpace intersect_with_shape(const MatrixSpace& V, const std::vector<Cell>& allowed) {
    std::set<int> allowed_pos;
    for (const auto& [i, j] : allowed) {
        if (i < 1 || i > V.rows() || j < 1 || j > V.cols())
            throw std::invalid_argument("cell out of range");
        allowed_pos.insert((i - 1) * V.cols() + (j - 1));
    }
    std::vector<int> forbidden;
    for (int pos = 0; pos < V.rows() * V.cols(); ++pos)
        if (!allowed_pos.count(pos)) forbidden.push_back(pos);
    if (V.dim() == 0 || forbidden.empty()) return V;

    Matrix A(V.field(), (int)forbidden.size(), V.dim());
    for (int t = 0; t < (int)forbidden.size(); ++t)
        for (int i = 0; i < V.dim(); ++i) A.set(t, i, V.basis()[i].data()[forbidden[t]]);
    std::vector<Matrix> gens;
    for (const auto& c : nullspace(A)) gens.push_back(V.element(c));
    return MatrixSpace::span(V.field(), V.rows(), V.cols(), gens);
}

MatrixSpace space_sum(const MatrixSpace& A, const MatrixSpace& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw std::invalid_argument("ambient size mismatch");
    std::vector<Matrix> gens = A.basis();
    gens.insert(gens.end(), B.basis().begin(), B.basis().end());
    return MatrixSpace::span(A.field(), A.rows(), A.cols(), gens);
}

int subspace_intersection_dim(const Matrix& X, const Matrix& Y) {
    if (X.rank() != X.rows()) throw std::invalid_argument("rank-deficient generator matrix");
    if (Y.rank() != Y.rows()) throw std::invalid_argument("rank-deficient generator matrix");
    return X.rows() + Y.rows() - vstack(X, Y).rank();
}

}  // namespace fdrm
