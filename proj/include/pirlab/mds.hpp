#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pirlab/errors.hpp"
#include "pirlab/gf.hpp"

namespace pirlab::mds {

/// Reed-Solomon generator on the canonical point sequence 0, 1, ..., n-1
/// (element codes in increasing order). Row i is (1, z_i, ..., z_i^{k-1}), so
/// every k x k row submatrix is a Vandermonde on distinct points and therefore
/// invertible: the code is MDS.
struct RsGenerator {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<gf::Elem> points;
    gf::Matrix matrix;  // n x k

    const gf::Field& field() const { return matrix.field(); }
};

inline RsGenerator rs_generator(std::size_t n, std::size_t k, const gf::FieldPtr& field) {
    if (n > field->order())
        throw LengthExceedsField("code length " + std::to_string(n) + " exceeds field order " +
                                 std::to_string(field->order()));
    if (k > n) throw DimensionMismatch("code dimension exceeds length");
    RsGenerator gen;
    gen.n = n;
    gen.k = k;
    gen.matrix = gf::Matrix(field, n, k);
    for (std::size_t i = 0; i < n; ++i) {
        const gf::Elem z = static_cast<gf::Elem>(i);
        gen.points.push_back(z);
        gf::Elem v = 1;
        for (std::size_t j = 0; j < k; ++j) {
            gen.matrix.set(i, j, v);
            v = field->mul(v, z);
        }
    }
    return gen;
}

/// Encodes a k x w message block into its n x w codeword.
inline gf::Matrix encode(const RsGenerator& gen, const gf::Matrix& message) {
    if (message.rows() != gen.k) throw DimensionMismatch("message rows must equal code dimension");
    return gen.matrix.multiply(message);
}

/// Recovers the unique message block from the symbols observed on kept_rows.
/// Solves from the first k kept rows, then verifies the remaining kept rows;
/// a mismatch means the data was corrupted even though no errors were
/// declared, reported as InconsistentSymbols.
inline gf::Matrix erasure_decode(const RsGenerator& gen, const std::vector<std::size_t>& kept_rows,
                                 const gf::Matrix& symbols) {
    if (kept_rows.size() < gen.k) throw TooFewRows("need at least k rows to decode");
    if (symbols.rows() != kept_rows.size()) throw DimensionMismatch("one symbol row per kept row required");

    std::vector<std::size_t> solve_rows(kept_rows.begin(), kept_rows.begin() + gen.k);
    gf::Matrix sub = gen.matrix.select_rows(solve_rows);
    std::vector<std::size_t> first_k(gen.k);
    for (std::size_t i = 0; i < gen.k; ++i) first_k[i] = i;
    gf::Matrix rhs = symbols.select_rows(first_k);

    // sub is invertible (MDS), so D = sub^{-1} exists; message = D * rhs.
    auto inv = gf::solve_left(sub.transpose(), gf::Matrix::identity(sub.field_ptr(), gen.k));
    if (!inv) throw InconsistentSymbols("square Vandermonde submatrix unexpectedly singular");
    gf::Matrix message = inv->multiply(rhs);

    gf::Matrix reencoded = gen.matrix.select_rows(std::vector<std::size_t>(kept_rows.begin(), kept_rows.end()))
                               .multiply(message);
    if (reencoded != symbols)
        throw InconsistentSymbols("kept rows disagree with the decoded message");
    return message;
}

struct ErrorDecodeResult {
    gf::Matrix message;
    std::vector<std::size_t> corrupt_rows;
};

namespace detail {

inline bool consistent_solve(const RsGenerator& gen, const gf::Matrix& symbols,
                             const std::vector<std::size_t>& rows, gf::Matrix* out) {
    gf::Matrix sub = gen.matrix.select_rows(rows);
    gf::Matrix rhs = symbols.select_rows(rows);
    // Solve sub * m = rhs exactly: express each rhs column in sub's column
    // space via the transposed left-solve, then verify.
    auto m = gf::solve_left(sub.transpose(), rhs.transpose());
    if (!m) return false;
    gf::Matrix candidate = m->transpose();
    if (sub.multiply(candidate) != rhs) return false;
    *out = candidate;
    return true;
}

inline void subsets_of_size(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) {
        fn(idx);
        return;
    }
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) break;
            if (i == 0) return;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

/// Bounded-error decoding by corrupt-set hypothesis enumeration: candidate
/// sets E with |E| <= max_errors are tried in increasing size (lexicographic
/// within a size); a hypothesis is admissible when the rows outside E solve
/// consistently. All admissible hypotheses of the smallest admissible size
/// must agree on the message; disagreement would contradict n >= k + 2B and is
/// surfaced as AmbiguousDecoding. Complexity C(n, B), fine at desk scale.
inline ErrorDecodeResult error_decode(const RsGenerator& gen, const gf::Matrix& symbols,
                                      std::size_t max_errors) {
    if (symbols.rows() != gen.n) throw DimensionMismatch("error decoding needs all n symbol rows");
    if (gen.n < gen.k + 2 * max_errors)
        throw TooFewRows("length must be at least k + 2B for B-error decoding");

    std::vector<std::size_t> all(gen.n);
    for (std::size_t i = 0; i < gen.n; ++i) all[i] = i;

    for (std::size_t errs = 0; errs <= max_errors; ++errs) {
        std::optional<ErrorDecodeResult> found;
        detail::subsets_of_size(gen.n, errs, [&](const std::vector<std::size_t>& corrupt) {
            std::vector<std::size_t> keep;
            keep.reserve(gen.n - errs);
            std::set_difference(all.begin(), all.end(), corrupt.begin(), corrupt.end(), std::back_inserter(keep));
            gf::Matrix candidate;
            if (!detail::consistent_solve(gen, symbols, keep, &candidate)) return;
            if (!found) {
                found = ErrorDecodeResult{candidate, corrupt};
            } else if (found->message != candidate) {
                throw AmbiguousDecoding("two corrupt-set hypotheses of equal size decode differently");
            }
        });
        if (found) return *found;
    }
    throw TooManyErrors("no corrupt-set hypothesis within budget is consistent");
}

}  // namespace pirlab::mds
