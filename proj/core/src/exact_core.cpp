#include "ebinom/exact_core.hpp"

#include "ebinom/error.hpp"

namespace ebinom {

BigInt BigRow::at(std::int64_t k) const {
    if (k < 0 || k > max_index()) return 0;
    return coeffs[static_cast<std::size_t>(k)];
}

BigRow compute_row(int n, int q) {
    detail::require_positive(n, "n");
    detail::require_positive(q, "q");

    const std::size_t width = static_cast<std::size_t>(q) + 1;
    std::vector<BigInt> row{1};
    row.reserve(static_cast<std::size_t>(n) * q + 1);
    std::vector<BigInt> next;
    for (int step = 0; step < n; ++step) {
        next.assign(row.size() + width - 1, BigInt(0));
        // next[k] = row[k] + row[k-1] + ... + row[k-q]
        BigInt window = 0;
        for (std::size_t k = 0; k < next.size(); ++k) {
            if (k < row.size()) window += row[k];
            if (k >= width) window -= row[k - width];
            next[k] = window;
        }
        row.swap(next);
    }
    return BigRow{n, q, std::move(row)};
}

BigInt coefficient(int n, std::int64_t k, int q) {
    detail::require_positive(n, "n");
    detail::require_positive(q, "q");
    if (k < 0 || k > static_cast<std::int64_t>(n) * q) return 0;
    return compute_row(n, q).at(k);
}

BigInt composition_count(std::int64_t k, int n, int q) {
    detail::require_positive(k, "k");
    detail::require_positive(n, "n");
    detail::require_positive(q, "q");
    if (q == 1) return k == n ? 1 : 0;
    return coefficient(n, k - n, q - 1);
}

Rational scaled_probability(int n, std::int64_t k, int q) {
    BigInt c = coefficient(n, k, q);
    BigInt total = pow(BigInt(q + 1), static_cast<unsigned long>(n));
    return make_rational(c, total);
}

}  // namespace ebinom
