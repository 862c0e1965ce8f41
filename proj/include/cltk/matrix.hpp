#pragma once

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace cltk {

// Dense matrix over the rationals.  All arithmetic is exact.
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Mat scalar(int n, const Rat& v) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = v;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        require_same_shape(o);
        Mat m(r_, c_);
        for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
        return m;
    }

    Mat operator-(const Mat& o) const {
        require_same_shape(o);
        Mat m(r_, c_);
        for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
        return m;
    }

    Mat operator-() const {
        Mat m(r_, c_);
        for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
        return m;
    }

    Mat operator*(const Mat& o) const {
        if (c_ != o.r_) throw internal_error("matrix product shape mismatch");
        Mat m(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const Rat& x = (*this)(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.c_; ++j) {
                    const Rat& y = o(k, j);
                    if (y != 0) m(i, j) += x * y;
                }
            }
        return m;
    }

    Mat operator*(const Rat& s) const {
        Mat m(r_, c_);
        for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * s;
        return m;
    }

    Mat transpose() const {
        Mat m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Rat trace() const {
        Rat t(0);
        for (int i = 0; i < r_ && i < c_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (const Rat& x : a_)
            if (x != 0) return false;
        return true;
    }

    // If this is v * I, return v.
    std::optional<Rat> as_scalar() const {
        if (r_ != c_ || r_ == 0) return std::nullopt;
        const Rat v = (*this)(0, 0);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                if ((*this)(i, j) != (i == j ? v : Rat(0))) return std::nullopt;
        return v;
    }

    static Mat kron(const Mat& A, const Mat& B) {
        Mat m(A.rows() * B.rows(), A.cols() * B.cols());
        for (int i = 0; i < A.rows(); ++i)
            for (int j = 0; j < A.cols(); ++j) {
                const Rat& x = A(i, j);
                if (x == 0) continue;
                for (int k = 0; k < B.rows(); ++k)
                    for (int l = 0; l < B.cols(); ++l) {
                        const Rat& y = B(k, l);
                        if (y != 0) m(i * B.rows() + k, j * B.cols() + l) = x * y;
                    }
            }
        return m;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < r_; ++i) {
            s += i == 0 ? "[" : " ";
            for (int j = 0; j < c_; ++j) {
                if (j) s += " ";
                s += rat_str((*this)(i, j));
            }
            s += i + 1 == r_ ? "]" : "\n";
        }
        return s;
    }

  private:
    void require_same_shape(const Mat& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw internal_error("matrix shape mismatch");
    }

    int r_ = 0, c_ = 0;
    std::vector<Rat> a_;
};

inline Mat operator*(const Rat& s, const Mat& m) { return m * s; }

} // namespace cltk
