#pragma once

/// Small dense linear algebra over the rationals: just enough for sign
/// queries, rank computations and denominator clearing.  Everything here is
/// exact; there is deliberately no norm, no orthogonalization, nothing that
/// would leave the rational field.

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ccopt/rational.hpp"

namespace ccopt {

using IntVector = std::vector<Int>;

class RatVector {
public:
    RatVector() = default;
    explicit RatVector(std::size_t dim) : v_(dim) {}
    RatVector(std::initializer_list<Rational> init) : v_(init) {}
    explicit RatVector(std::vector<Rational> v) : v_(std::move(v)) {}

    std::size_t dim() const { return v_.size(); }
    Rational& operator[](std::size_t i) { return v_[i]; }
    const Rational& operator[](std::size_t i) const { return v_[i]; }

    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }
    auto begin() { return v_.begin(); }
    auto end() { return v_.end(); }

    bool is_zero() const {
        for (const auto& x : v_)
            if (!x.is_zero())
                return false;
        return true;
    }

    RatVector& operator+=(const RatVector& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < v_.size(); ++i)
            v_[i] += o.v_[i];
        return *this;
    }
    RatVector& operator-=(const RatVector& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < v_.size(); ++i)
            v_[i] -= o.v_[i];
        return *this;
    }
    RatVector& operator*=(const Rational& s) {
        for (auto& x : v_)
            x *= s;
        return *this;
    }

    friend RatVector operator+(RatVector a, const RatVector& b) { return a += b; }
    friend RatVector operator-(RatVector a, const RatVector& b) { return a -= b; }
    friend RatVector operator*(const Rational& s, RatVector a) { return a *= s; }
    friend RatVector operator-(const RatVector& a) {
        RatVector r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            r[i] = -a[i];
        return r;
    }

    friend bool operator==(const RatVector& a, const RatVector& b) { return a.v_ == b.v_; }
    friend bool operator!=(const RatVector& a, const RatVector& b) { return a.v_ != b.v_; }
    /// Lexicographic; used for deterministic output ordering.
    friend bool operator<(const RatVector& a, const RatVector& b) {
        std::size_t n = std::min(a.dim(), b.dim());
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] < b[i]) return true;
            if (b[i] < a[i]) return false;
        }
        return a.dim() < b.dim();
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ", ";
            s += v_[i].str();
        }
        return s + ")";
    }

private:
    void require_same_dim(const RatVector& o) const {
        if (v_.size() != o.v_.size())
            throw std::invalid_argument("vector dimension mismatch: " +
                                        std::to_string(v_.size()) + " vs " +
                                        std::to_string(o.v_.size()));
    }

    std::vector<Rational> v_;
};

inline Rational inner_product(const RatVector& a, const RatVector& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("inner_product: dimension mismatch: " +
                                    std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()));
    Rational acc;
    for (std::size_t i = 0; i < a.dim(); ++i)
        acc += a[i] * b[i];
    return acc;
}

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    explicit RatMatrix(const std::vector<std::vector<Rational>>& rows) {
        rows_ = rows.size();
        cols_ = rows.empty() ? 0 : rows[0].size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("matrix rows of unequal length");
            for (const auto& x : r)
                data_.push_back(x);
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatVector row(std::size_t i) const {
        RatVector r(cols_);
        for (std::size_t j = 0; j < cols_; ++j)
            r[j] = at(i, j);
        return r;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// A vector with entries in {-1, +1}; the combinatorial fingerprint of a
/// zonotope vertex. Ordered lexicographically with -1 < +1.
class SignVector {
public:
    SignVector() = default;
    explicit SignVector(std::vector<int> signs) {
        s_.reserve(signs.size());
        for (int x : signs) {
            if (x != 1 && x != -1)
                throw std::invalid_argument("sign vector entries must be +1 or -1");
            s_.push_back(static_cast<std::int8_t>(x));
        }
    }

    std::size_t size() const { return s_.size(); }
    int operator[](std::size_t i) const { return s_[i]; }

    friend bool operator==(const SignVector& a, const SignVector& b) { return a.s_ == b.s_; }
    friend bool operator<(const SignVector& a, const SignVector& b) { return a.s_ < b.s_; }

    SignVector negated() const {
        SignVector r;
        r.s_.reserve(s_.size());
        for (auto x : s_)
            r.s_.push_back(static_cast<std::int8_t>(-x));
        return r;
    }

    std::string str() const {
        std::string out;
        out.reserve(s_.size());
        for (auto x : s_)
            out += x > 0 ? '+' : '-';
        return out;
    }

private:
    std::vector<std::int8_t> s_;
};

/// Assigns each ground element i in {1..n} a vector in Q^d (row i-1).
struct VectorWeighting {
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<RatVector> rows;

    VectorWeighting() = default;
    VectorWeighting(std::size_t n_, std::size_t d_)
        : n(n_), d(d_), rows(n_, RatVector(d_)) {}
    explicit VectorWeighting(std::vector<RatVector> r) : rows(std::move(r)) {
        n = rows.size();
        d = rows.empty() ? 0 : rows[0].dim();
        for (const auto& row : rows)
            if (row.dim() != d)
                throw std::invalid_argument("weighting rows of unequal dimension");
    }

    const RatVector& of(std::size_t element) const {
        if (element < 1 || element > n)
            throw std::out_of_range("weighting queried for element " +
                                    std::to_string(element) + " of " + std::to_string(n));
        return rows[element - 1];
    }

    bool operator==(const VectorWeighting&) const = default;
};

/// Smallest positive scale making b integral: returns (scale * b, scale)
/// where scale is the lcm of the entry denominators.
std::pair<IntVector, Int> clear_denominators(const RatVector& b);

/// Rank over Q by fraction-free Gaussian elimination.
std::size_t rank_rational(const RatMatrix& m);

/// Rank of a set of integer row vectors (all of equal length).
std::size_t rank_int_rows(const std::vector<IntVector>& rows);

/// Divides an integer vector by the gcd of its entries (zero vector is
/// returned unchanged).  Does not touch signs.
void make_primitive(IntVector& v);

/// Integer dot product.
Int dot(const IntVector& a, const IntVector& b);

/// The primitive integer vector pointing the same direction as v.
/// Throws std::invalid_argument for the zero vector.
IntVector primitive_direction(const RatVector& v);

} // namespace ccopt
