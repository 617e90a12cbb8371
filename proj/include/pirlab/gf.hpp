#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pirlab/errors.hpp"
#include "pirlab/rng.hpp"

namespace pirlab::gf {

/// Element code: base-p digits of the polynomial representation packed into an
/// integer. 0 is the additive identity, 1 the multiplicative identity.
using Elem = std::uint32_t;

namespace detail {

inline bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

/// q = p^d for prime p, or nothing if q is not a prime power.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power_split(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        std::uint32_t d = 0;
        std::uint64_t r = q;
        while (r % p == 0) {
            r /= p;
            ++d;
        }
        if (r != 1) return std::nullopt;
        return std::make_pair(static_cast<std::uint32_t>(p), d);
    }
    return std::make_pair(static_cast<std::uint32_t>(q), 1u);  // q itself prime
}

inline std::uint64_t next_prime_power(std::uint64_t n) {
    for (std::uint64_t q = std::max<std::uint64_t>(n, 2);; ++q)
        if (prime_power_split(q)) return q;
}

}  // namespace detail

/// Arithmetic context for GF(p^d), q = p^d <= 2^16. Immutable after
/// construction; safe to share freely across threads.
///
/// Elements are integer codes encoding polynomial coefficients in base p
/// (constant term = least significant digit). Multiplication and inversion go
/// through discrete-log tables built from a fixed primitive element, so all
/// operations are O(1) after construction.
class Field {
  public:
    /// Constructs GF(p^d) with the canonical modulus for (p, d): the built-in
    /// table entry for p in {2,3,5,7}, d <= 8, otherwise the first monic
    /// irreducible polynomial of degree d in ascending coefficient-code order
    /// (the same order the table was generated with). Irreducibility is
    /// re-verified at construction.
    Field(std::uint32_t p, std::uint32_t d) : p_(p), d_(d) {
        if (!detail::is_prime(p)) throw NonPrimeP("field characteristic " + std::to_string(p) + " is not prime");
        if (d < 1) throw UnsupportedOrder("extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < d; ++i) {
            q *= p;
            if (q > 65536) throw UnsupportedOrder("field order exceeds 2^16");
        }
        q_ = static_cast<std::uint32_t>(q);
        modulus_ = canonical_modulus(p, d);
        if (!is_irreducible(modulus_)) throw UnsupportedOrder("modulus is not irreducible");  // unreachable for table entries
        build_tables();
    }

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return d_; }
    std::uint32_t order() const { return q_; }
    /// Modulus polynomial coefficients, constant term first; length d+1, monic.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool same_as(const Field& other) const {
        return p_ == other.p_ && d_ == other.d_ && modulus_ == other.modulus_;
    }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return a ^ b;
        if (add_table_.empty()) return add_slow(a, b);
        return add_table_[a * q_ + b];
    }

    Elem neg(Elem a) const {
        if (p_ == 2) return a;
        if (neg_table_.empty()) return sub_slow(0, a);
        return neg_table_[a];
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    Elem inv(Elem a) const {
        if (a == 0) throw DivisionByZero("inverse of zero");
        return exp_[q_ - 1 - log_[a]];
    }

    Elem div(Elem a, Elem b) const {
        if (b == 0) throw DivisionByZero("division by zero");
        if (a == 0) return 0;
        return exp_[log_[a] + q_ - 1 - log_[b]];
    }

    Elem pow(Elem a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        std::uint64_t le = (log_[a] * (e % (q_ - 1))) % (q_ - 1);
        return exp_[le];
    }

    Elem random_element(Rng& rng) const { return static_cast<Elem>(rng.below(q_)); }

    static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t d) {
        return std::make_shared<const Field>(p, d);
    }

    /// Field of the given order; q must be a prime power <= 2^16.
    static std::shared_ptr<const Field> of_order(std::uint64_t q) {
        auto split = detail::prime_power_split(q);
        if (!split) throw UnsupportedOrder("order " + std::to_string(q) + " is not a prime power");
        return make(split->first, split->second);
    }

  private:
    using Poly = std::vector<std::uint32_t>;  // coefficients mod p, constant first

    static const std::vector<std::uint32_t>* table_entry(std::uint32_t p, std::uint32_t d) {
        // Generated by ascending-code search; entries re-verified at construction.
        static const struct {
            std::uint32_t p, d;
            std::vector<std::uint32_t> coeffs;
        } kTable[] = {
            {2, 1, {0, 1}},
            {2, 2, {1, 1, 1}},
            {2, 3, {1, 1, 0, 1}},
            {2, 4, {1, 1, 0, 0, 1}},
            {2, 5, {1, 0, 1, 0, 0, 1}},
            {2, 6, {1, 1, 0, 0, 0, 0, 1}},
            {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
            {2, 8, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
            {3, 1, {0, 1}},
            {3, 2, {1, 0, 1}},
            {3, 3, {1, 2, 0, 1}},
            {3, 4, {2, 1, 0, 0, 1}},
            {3, 5, {1, 2, 0, 0, 0, 1}},
            {3, 6, {2, 1, 0, 0, 0, 0, 1}},
            {3, 7, {2, 0, 1, 0, 0, 0, 0, 1}},
            {3, 8, {2, 0, 1, 0, 0, 0, 0, 0, 1}},
            {5, 1, {0, 1}},
            {5, 2, {2, 0, 1}},
            {5, 3, {1, 1, 0, 1}},
            {5, 4, {2, 0, 0, 0, 1}},
            {5, 5, {1, 4, 0, 0, 0, 1}},
            {5, 6, {2, 1, 0, 0, 0, 0, 1}},
            {7, 1, {0, 1}},
            {7, 2, {1, 0, 1}},
            {7, 3, {2, 0, 0, 1}},
            {7, 4, {1, 0, 0, 1, 1}},
            {7, 5, {3, 1, 0, 0, 0, 1}},
        };
        for (const auto& e : kTable)
            if (e.p == p && e.d == d) return &e.coeffs;
        return nullptr;
    }

    Poly canonical_modulus(std::uint32_t p, std::uint32_t d) const {
        if (d == 1) return {0, 1};
        if (const auto* entry = table_entry(p, d)) return *entry;
        // Deterministic search: low-order coefficients interpreted as a base-p
        // code, ascending. Matches the order used to generate the table.
        for (std::uint64_t code = 0; code < q_; ++code) {
            Poly cand(d + 1, 0);
            std::uint64_t v = code;
            for (std::uint32_t i = 0; i < d; ++i) {
                cand[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            cand[d] = 1;
            if (is_irreducible(cand)) return cand;
        }
        throw UnsupportedOrder("no irreducible modulus found");  // cannot happen
    }

    static std::size_t poly_degree(const Poly& f) {
        std::size_t deg = 0;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i]) deg = i;
        return deg;
    }

    Poly poly_mod(Poly a, const Poly& b) const {
        const std::size_t db = poly_degree(b);
        std::uint32_t lead_inv = mod_inverse(b[db]);
        while (true) {
            std::size_t da = poly_degree(a);
            if (da < db || (da == 0 && a[0] == 0)) break;
            std::uint32_t factor = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a[da]) * lead_inv) % p_);
            for (std::size_t i = 0; i <= db; ++i) {
                std::uint64_t sub = (static_cast<std::uint64_t>(factor) * b[i]) % p_;
                a[da - db + i] = static_cast<std::uint32_t>((a[da - db + i] + p_ - sub) % p_);
            }
        }
        a.resize(db);
        a.resize(b.size() - 1, 0);
        return a;
    }

    std::uint32_t mod_inverse(std::uint32_t a) const {
        // p_ is prime, a != 0
        std::uint32_t r = 1;
        std::uint32_t base = a % p_, e = p_ - 2;
        while (e) {
            if (e & 1) r = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r) * base) % p_);
            base = static_cast<std::uint32_t>((static_cast<std::uint64_t>(base) * base) % p_);
            e >>= 1;
        }
        return r;
    }

    /// Trial division by every monic polynomial of degree 1..deg/2. The
    /// degree-1 divisors are the root check; higher degrees catch factor pairs.
    bool is_irreducible(const Poly& f) const {
        const std::size_t deg = poly_degree(f);
        if (deg < 1) return false;
        if (deg == 1) return true;
        for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < dd; ++i) count *= p_;
            for (std::uint64_t code = 0; code < count; ++code) {
                Poly div(dd + 1, 0);
                std::uint64_t v = code;
                for (std::size_t i = 0; i < dd; ++i) {
                    div[i] = static_cast<std::uint32_t>(v % p_);
                    v /= p_;
                }
                div[dd] = 1;
                Poly rem = poly_mod(f, div);
                if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t c) { return c == 0; })) return false;
            }
        }
        return true;
    }

    Elem add_slow(Elem a, Elem b) const {
        Elem out = 0, mult = 1;
        for (std::uint32_t i = 0; i < d_; ++i) {
            out += ((a % p_) + (b % p_)) % p_ * mult;
            a /= p_;
            b /= p_;
            mult *= p_;
        }
        return out;
    }

    Elem sub_slow(Elem a, Elem b) const {
        Elem out = 0, mult = 1;
        for (std::uint32_t i = 0; i < d_; ++i) {
            out += ((a % p_) + p_ - (b % p_)) % p_ * mult;
            a /= p_;
            b /= p_;
            mult *= p_;
        }
        return out;
    }

    Elem mul_slow(Elem a, Elem b) const {
        std::vector<std::uint32_t> da(d_, 0), db(d_, 0), prod(2 * d_, 0);
        for (std::uint32_t i = 0; i < d_; ++i) {
            da[i] = a % p_;
            a /= p_;
            db[i] = b % p_;
            b /= p_;
        }
        for (std::uint32_t i = 0; i < d_; ++i)
            for (std::uint32_t j = 0; j < d_; ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
        for (std::size_t i = 2 * d_ - 1; i >= d_; --i) {
            std::uint32_t c = prod[i];
            if (!c) continue;
            prod[i] = 0;
            for (std::uint32_t j = 0; j < d_; ++j) {
                std::uint64_t sub = (static_cast<std::uint64_t>(c) * modulus_[j]) % p_;
                prod[i - d_ + j] = static_cast<std::uint32_t>((prod[i - d_ + j] + p_ - sub) % p_);
            }
        }
        Elem out = 0, mult = 1;
        for (std::uint32_t i = 0; i < d_; ++i) {
            out += prod[i] * mult;
            mult *= p_;
        }
        return out;
    }

    void build_tables() {
        // Primitive element: smallest code g whose order is q-1, verified via
        // the prime factorization of q-1.
        std::vector<std::uint32_t> factors;
        std::uint32_t n = q_ - 1;
        for (std::uint32_t f = 2; f * f <= n; ++f) {
            if (n % f == 0) {
                factors.push_back(f);
                while (n % f == 0) n /= f;
            }
        }
        if (n > 1) factors.push_back(n);

        auto pow_slow = [&](Elem a, std::uint32_t e) {
            Elem r = 1;
            while (e) {
                if (e & 1) r = mul_slow(r, a);
                a = mul_slow(a, a);
                e >>= 1;
            }
            return r;
        };

        Elem g = 0;
        for (Elem cand = 2 % q_ == 0 ? 1 : 2; cand < q_; ++cand) {
            bool primitive = true;
            for (std::uint32_t f : factors)
                if (pow_slow(cand, (q_ - 1) / f) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) {
                g = cand;
                break;
            }
        }
        if (g == 0) g = 1;  // q == 2

        exp_.assign(2 * (q_ - 1), 0);
        log_.assign(q_, 0);
        Elem cur = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = cur;
            exp_[i + q_ - 1] = cur;
            log_[cur] = i;
            cur = mul_slow(cur, g);
        }

        if (p_ != 2 && static_cast<std::uint64_t>(q_) * q_ <= (1u << 20)) {
            add_table_.resize(static_cast<std::size_t>(q_) * q_);
            neg_table_.resize(q_);
            for (Elem a = 0; a < q_; ++a) {
                neg_table_[a] = sub_slow(0, a);
                for (Elem b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_slow(a, b);
            }
        }
    }

    std::uint32_t p_, d_, q_;
    Poly modulus_;
    std::vector<Elem> exp_, log_, add_table_, neg_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Dense row-major matrix over a finite field. Immutable by convention once
/// built (all operations return new values).
class Matrix {
  public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> data)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw DimensionMismatch("matrix data size does not match shape");
        for (Elem v : data_)
            if (v >= field_->order()) throw BadIndex("element code out of range");
    }

    static Matrix identity(FieldPtr field, std::size_t n) {
        Matrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return *field_; }
    FieldPtr field_ptr() const { return field_; }
    const std::vector<Elem>& data() const { return data_; }

    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Elem v) { data_[r * cols_ + c] = v; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_ && field_->same_as(*o.field_);
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](Elem v) { return v == 0; });
    }

    Matrix multiply(const Matrix& rhs) const {
        require_same_field(rhs);
        if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
        const Field& f = *field_;
        Matrix out(field_, rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                Elem a = at(i, k);
                if (!a) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    Elem prod = f.mul(a, rhs.at(k, j));
                    out.set(i, j, f.add(out.at(i, j), prod));
                }
            }
        }
        return out;
    }

    Matrix add(const Matrix& rhs) const {
        require_same_field(rhs);
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum shape mismatch");
        Matrix out(field_, rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], rhs.data_[i]);
        return out;
    }

    Matrix sub(const Matrix& rhs) const {
        require_same_field(rhs);
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix difference shape mismatch");
        Matrix out(field_, rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->sub(data_[i], rhs.data_[i]);
        return out;
    }

    Matrix scale(Elem s) const {
        Matrix out(field_, rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->mul(data_[i], s);
        return out;
    }

    Matrix transpose() const {
        Matrix out(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
        return out;
    }

    Matrix select_rows(const std::vector<std::size_t>& idx) const {
        Matrix out(field_, idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] >= rows_) throw BadIndex("row index out of range");
            for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(idx[i], j));
        }
        return out;
    }

    Matrix select_cols(const std::vector<std::size_t>& idx) const {
        Matrix out(field_, rows_, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (idx[j] >= cols_) throw BadIndex("column index out of range");
            for (std::size_t i = 0; i < rows_; ++i) out.set(i, j, at(i, idx[j]));
        }
        return out;
    }

    /// Vertically stacks matrices with identical column counts.
    static Matrix stack(const std::vector<Matrix>& parts) {
        if (parts.empty()) throw DimensionMismatch("cannot stack zero matrices");
        std::size_t total = 0;
        for (const auto& m : parts) {
            if (m.cols() != parts[0].cols()) throw DimensionMismatch("stack column mismatch");
            parts[0].require_same_field(m);
            total += m.rows();
        }
        Matrix out(parts[0].field_, total, parts[0].cols());
        std::size_t r = 0;
        for (const auto& m : parts) {
            std::copy(m.data_.begin(), m.data_.end(), out.data_.begin() + r * out.cols());
            r += m.rows();
        }
        return out;
    }

    void require_same_field(const Matrix& o) const {
        if (!field_->same_as(*o.field_)) throw DimensionMismatch("matrices over different fields");
    }

  private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> data_;
};

/// Rank over GF(q) by Gaussian elimination with exact arithmetic.
inline std::size_t rank(const Matrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    const Field& f = a.field();
    std::vector<std::vector<Elem>> rows(a.rows(), std::vector<Elem>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a.at(i, j);

    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const Elem inv = f.inv(rows[r][c]);
        for (std::size_t j = c; j < a.cols(); ++j) rows[r][j] = f.mul(rows[r][j], inv);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            const Elem factor = rows[i][c];
            if (!factor) continue;
            for (std::size_t j = c; j < a.cols(); ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
        }
        ++r;
    }
    return r;
}

/// Finds the canonical D with D*A = B, if every row of B lies in the row space
/// of A. Each row is solved by reduced-row-echelon back-substitution on A^T
/// with free coordinates set to zero, so the result is deterministic.
inline std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("solve_left: column count mismatch");
    const Field& f = a.field();
    a.require_same_field(b);
    const std::size_t n = a.rows(), c = a.cols(), k = b.rows();

    // Augmented system A^T | B^T, reduced once for all right-hand sides.
    std::vector<std::vector<Elem>> aug(c, std::vector<Elem>(n + k));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < c; ++j) aug[j][i] = a.at(i, j);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < c; ++j) aug[j][n + i] = b.at(i, j);

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < c; ++col) {
        std::size_t pivot = r;
        while (pivot < c && aug[pivot][col] == 0) ++pivot;
        if (pivot == c) continue;
        std::swap(aug[r], aug[pivot]);
        const Elem inv = f.inv(aug[r][col]);
        for (auto& v : aug[r]) v = f.mul(v, inv);
        for (std::size_t i = 0; i < c; ++i) {
            if (i == r) continue;
            const Elem factor = aug[i][col];
            if (!factor) continue;
            for (std::size_t j = col; j < n + k; ++j) aug[i][j] = f.sub(aug[i][j], f.mul(factor, aug[r][j]));
        }
        pivot_col.push_back(col);
        ++r;
    }
    // Inconsistent when a zeroed-out left side still has a nonzero right side.
    for (std::size_t i = r; i < c; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (aug[i][n + j]) return std::nullopt;

    Matrix d(a.field_ptr(), k, n);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) d.set(j, pivot_col[i], aug[i][n + j]);
    return d;
}

inline Matrix random_matrix(const FieldPtr& field, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, field->random_element(rng));
    return m;
}

/// Uniform invertible n x n matrix by rejection sampling uniform matrices
/// until one has full rank. Deterministic given the rng state.
inline Matrix random_full_rank(std::size_t n, const FieldPtr& field, Rng& rng) {
    if (n < 1) throw BadIndex("random_full_rank: n must be >= 1");
    while (true) {
        Matrix m = random_matrix(field, n, n, rng);
        if (rank(m) == n) return m;
    }
}

inline Matrix random_full_rank(std::size_t n, const FieldPtr& field, std::uint64_t seed) {
    Rng rng(seed);
    return random_full_rank(n, field, rng);
}

/// Matrix text format used repo-wide: first line "q rows cols", then one line
/// per row of space-separated element codes in decimal.
inline std::string to_text(const Matrix& m) {
    std::ostringstream out;
    out << m.field().order() << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

inline Matrix matrix_from_text(const std::string& text) {
    std::istringstream in(text);
    std::uint64_t q;
    std::size_t rows, cols;
    if (!(in >> q >> rows >> cols)) throw ParseError("matrix header: expected 'q rows cols'");
    auto field = Field::of_order(q);
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::uint64_t v;
            if (!(in >> v)) throw ParseError("matrix body truncated");
            if (v >= q) throw ParseError("element code exceeds field order");
            m.set(i, j, static_cast<Elem>(v));
        }
    return m;
}

}  // namespace pirlab::gf
