#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bqflab {

// h(x,y) = b1*x^2 + b2*x*y + b3*y^2 with integer coefficients.  The form is
// degenerate exactly when the discriminant b2^2 - 4*b1*b3 vanishes, i.e. when
// h is a dilated square of a linear form.
struct BinaryQuadraticForm {
    std::int64_t b1 = 0;
    std::int64_t b2 = 0;
    std::int64_t b3 = 0;

    // Parses "b1,b2,b3" (comma-separated signed decimal integers).
    // Throws std::invalid_argument on malformed input.
    static BinaryQuadraticForm parse(std::string_view text);

    std::int64_t discriminant() const;      // b2^2 - 4*b1*b3, overflow-checked
    std::int64_t coefficient_sum() const;   // J = |b1| + |b2| + |b3|
    std::int64_t diagonal_dilation() const; // d with h(n,n) = d*n^2
    bool is_zero() const { return b1 == 0 && b2 == 0 && b3 == 0; }
    bool degenerate() const { return discriminant() == 0; }

    std::string str() const;

    friend bool operator==(const BinaryQuadraticForm&, const BinaryQuadraticForm&) = default;
};

// Exact integer evaluation of h(m,n); throws std::overflow_error rather than
// wrapping.
std::int64_t evaluate(const BinaryQuadraticForm& h, std::int64_t m, std::int64_t n);

// Distinct nonzero values of h over positive integer arguments, truncated to
// |v| <= x.  `complete` is set only under a certified enumeration bound:
// definite forms (discriminant < 0), or b1,b3 nonzero of equal sign with b2 of
// the same sign or zero.  Indefinite forms attain small values at unboundedly
// large arguments, so they require an explicit search box and are reported
// incomplete.
struct ImageResult {
    std::vector<std::int64_t> values; // sorted, distinct, nonzero
    bool complete = false;
    std::int64_t box_side = 0;        // enumeration bound actually used
};

ImageResult image_values(const BinaryQuadraticForm& h, std::int64_t x,
                         std::optional<std::int64_t> box = std::nullopt);

// Exact |{(m,n) in [1,M]^2 : h(m,n) = 0}| by per-m quadratic root extraction,
// O(M) instead of the O(M^2) scan.
std::int64_t zero_set_count(const BinaryQuadraticForm& h, std::int64_t m_bound);

// M = floor(sqrt(N/9J)) with J = |b1|+|b2|+|b3|, which guarantees
// h([1,M]^2) lands inside [-N/9, N/9].
struct ScaleParams {
    std::int64_t n = 0;
    std::int64_t j = 0;
    std::int64_t m = 0;
};

ScaleParams compute_scale(const BinaryQuadraticForm& h, std::int64_t n);

} // namespace bqflab
