#include "bqflab/forms.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "bqflab/util.hpp"

namespace bqflab {

namespace {

void require_nonzero(const BinaryQuadraticForm& h) {
    if (h.is_zero())
        throw std::domain_error("binary quadratic form must have |b1|+|b2|+|b3| >= 1");
}

std::int64_t parse_int_field(std::string_view field) {
    std::size_t lo = field.find_first_not_of(" \t");
    std::size_t hi = field.find_last_not_of(" \t");
    if (lo == std::string_view::npos)
        throw std::invalid_argument("empty coefficient in form triple");
    field = field.substr(lo, hi - lo + 1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw std::invalid_argument("bad coefficient '" + std::string(field) + "' in form triple");
    return value;
}

} // namespace

BinaryQuadraticForm BinaryQuadraticForm::parse(std::string_view text) {
    std::int64_t coeff[3];
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t comma = text.find(',', start);
        const bool last = (i == 2);
        if (!last && comma == std::string_view::npos)
            throw std::invalid_argument("form triple must be \"b1,b2,b3\"");
        if (last && comma != std::string_view::npos)
            throw std::invalid_argument("form triple must have exactly three coefficients");
        std::string_view field = last ? text.substr(start) : text.substr(start, comma - start);
        coeff[i] = parse_int_field(field);
        start = comma + 1;
    }
    return {coeff[0], coeff[1], coeff[2]};
}

std::int64_t BinaryQuadraticForm::discriminant() const {
    return checked_add(checked_mul(b2, b2), -checked_mul(4, checked_mul(b1, b3)));
}

std::int64_t BinaryQuadraticForm::coefficient_sum() const {
    return std::llabs(b1) + std::llabs(b2) + std::llabs(b3);
}

std::int64_t BinaryQuadraticForm::diagonal_dilation() const {
    return checked_add(checked_add(b1, b2), b3);
}

std::string BinaryQuadraticForm::str() const {
    return std::to_string(b1) + "," + std::to_string(b2) + "," + std::to_string(b3);
}

std::int64_t evaluate(const BinaryQuadraticForm& h, std::int64_t m, std::int64_t n) {
    const std::int64_t t1 = checked_mul(h.b1, checked_mul(m, m));
    const std::int64_t t2 = checked_mul(h.b2, checked_mul(m, n));
    const std::int64_t t3 = checked_mul(h.b3, checked_mul(n, n));
    return checked_add(checked_add(t1, t2), t3);
}

namespace {

// Least eigenvalue magnitude of [[b1, b2/2], [b2/2, b3]]; only called when the
// discriminant is negative, so both eigenvalues share a sign and the product
// formula det/lambda_max is stable.
double least_eigenvalue_magnitude(const BinaryQuadraticForm& h) {
    const double b1 = static_cast<double>(h.b1);
    const double b2 = static_cast<double>(h.b2);
    const double b3 = static_cast<double>(h.b3);
    const double det = b1 * b3 - 0.25 * b2 * b2; // = -disc/4 > 0
    const double gap = std::hypot(b1 - b3, b2);
    const double lambda_max = 0.5 * (std::abs(b1 + b3) + gap);
    return det / lambda_max;
}

} // namespace

ImageResult image_values(const BinaryQuadraticForm& h, std::int64_t x,
                         std::optional<std::int64_t> box) {
    require_nonzero(h);
    if (x < 1) throw std::domain_error("image_values: bound x must be >= 1");

    std::int64_t side = 0;
    bool complete = false;
    if (h.discriminant() < 0) {
        // |h(m,n)| >= lambda_min * (m^2 + n^2); shave lambda_min a hair so the
        // floating-point bound stays on the safe side.
        const double lam = least_eigenvalue_magnitude(h) * (1.0 - 1e-12);
        side = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(x) / lam)));
        complete = true;
    } else {
        const bool coherent = h.b1 != 0 && h.b3 != 0 && (h.b1 > 0) == (h.b3 > 0) &&
                              (h.b2 == 0 || (h.b2 > 0) == (h.b1 > 0));
        if (coherent) {
            // |h(m,n)| >= |b1| m^2 + |b3| n^2 on positive arguments.
            const std::int64_t lo = std::min(std::llabs(h.b1), std::llabs(h.b3));
            side = isqrt64((x + lo - 1) / lo);
            if (side * side * lo < x) ++side;
            complete = true;
        } else if (box) {
            side = *box;
            if (side < 1) throw std::domain_error("image_values: box side must be >= 1");
        } else {
            throw std::domain_error(
                "image_values: no completeness certificate for this form; supply a box");
        }
    }

    std::vector<std::int64_t> vals;
    for (std::int64_t m = 1; m <= side; ++m) {
        for (std::int64_t n = 1; n <= side; ++n) {
            const std::int64_t v = evaluate(h, m, n);
            if (v != 0 && std::llabs(v) <= x) vals.push_back(v);
        }
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return {std::move(vals), complete, side};
}

std::int64_t zero_set_count(const BinaryQuadraticForm& h, std::int64_t m_bound) {
    require_nonzero(h);
    if (m_bound < 1) throw std::domain_error("zero_set_count: M must be >= 1");

    if (h.b3 == 0 && h.b2 == 0) return 0; // h = b1 m^2, no zeros with m >= 1

    std::int64_t count = 0;
    if (h.b3 == 0) {
        // h = m (b1 m + b2 n): need b2 n = -b1 m
        for (std::int64_t m = 1; m <= m_bound; ++m) {
            const __int128 rhs = -static_cast<__int128>(h.b1) * m;
            if (rhs % h.b2 != 0) continue;
            const __int128 n = rhs / h.b2;
            if (n >= 1 && n <= m_bound) ++count;
        }
        return count;
    }

    // Quadratic in n with discriminant disc * m^2: integer roots exist only if
    // disc is a perfect square.
    const std::int64_t disc = h.discriminant();
    if (disc < 0) return 0;
    const std::int64_t s = isqrt64(disc);
    if (s * s != disc) return 0;

    for (std::int64_t m = 1; m <= m_bound; ++m) {
        const __int128 denom = 2 * static_cast<__int128>(h.b3);
        for (int sign = 0; sign < (s == 0 ? 1 : 2); ++sign) {
            const __int128 numer =
                static_cast<__int128>(m) * (-h.b2 + (sign == 0 ? s : -s));
            if (numer % denom != 0) continue;
            const __int128 n = numer / denom;
            if (n >= 1 && n <= m_bound) ++count;
        }
    }
    return count;
}

ScaleParams compute_scale(const BinaryQuadraticForm& h, std::int64_t n) {
    require_nonzero(h);
    const std::int64_t j = h.coefficient_sum();
    if (n < 9 * j)
        throw std::domain_error("compute_scale: N must be at least 9J so that M >= 1");
    const std::int64_t m = isqrt64(n / (9 * j));
    return {n, j, m};
}

} // namespace bqflab
