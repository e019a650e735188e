#include "weyr/matrix.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weyr {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    ExactMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                const Scalar& b = rhs.at(k, c);
                if (!b.is_zero()) out.at(r, c) += a * b;
            }
        }
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    ExactMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    ExactMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void ExactMatrix::paste(std::size_t r0, std::size_t c0, const ExactMatrix& src) {
    if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_)
        throw std::invalid_argument("paste out of bounds");
    for (std::size_t r = 0; r < src.rows_; ++r)
        for (std::size_t c = 0; c < src.cols_; ++c) at(r0 + r, c0 + c) = src.at(r, c);
}

ExactMatrix ExactMatrix::direct_sum(const std::vector<ExactMatrix>& parts) {
    std::size_t rows = 0, cols = 0;
    for (const auto& p : parts) {
        rows += p.rows();
        cols += p.cols();
    }
    ExactMatrix out(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& p : parts) {
        out.paste(r0, c0, p);
        r0 += p.rows();
        c0 += p.cols();
    }
    return out;
}

bool ExactMatrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << "[ ";
        for (std::size_t c = 0; c < cols_; ++c) os << at(r, c).str() << " ";
        os << "]\n";
    }
    return os.str();
}

Permutation Permutation::identity(std::size_t n) {
    Permutation p;
    p.image.resize(n);
    std::iota(p.image.begin(), p.image.end(), 0);
    return p;
}

bool Permutation::is_valid() const {
    std::vector<bool> seen(image.size(), false);
    for (std::size_t v : image) {
        if (v >= image.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

ExactMatrix Permutation::to_matrix() const {
    ExactMatrix p(image.size(), image.size());
    for (std::size_t i = 0; i < image.size(); ++i) p.at(i, image[i]) = Scalar(1);
    return p;
}

ExactMatrix Permutation::conjugate(const ExactMatrix& m) const {
    return permute_rows_cols(m, *this, *this);
}

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.image.resize(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) inv.image[image[i]] = i;
    return inv;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (other.size() != size()) throw std::invalid_argument("permutation size mismatch");
    Permutation out;
    out.image.resize(size());
    for (std::size_t i = 0; i < size(); ++i) out.image[i] = image[other.image[i]];
    return out;
}

ExactMatrix permute_rows_cols(const ExactMatrix& m, const Permutation& rp,
                              const Permutation& cp) {
    if (rp.size() != m.rows() || cp.size() != m.cols())
        throw std::invalid_argument("permutation/matrix size mismatch");
    ExactMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out.at(rp.image[r], cp.image[c]) = m.at(r, c);
    return out;
}

}  // namespace weyr
