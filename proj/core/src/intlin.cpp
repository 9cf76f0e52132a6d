#include "conj/intlin.hpp"

#include <utility>

namespace gmc::intlin {

namespace {

Int egcd(Int a, Int b, Int& s, Int& t) {
    Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = b;
        b = r;
        Int ns = s0 - q * s1, nt = t0 - q * t1;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    s = s0;
    t = t0;
    return a;
}

}  // namespace

std::optional<Solution> solve(const Matrix& A, const std::vector<Int>& b) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows == 0 ? 0 : A[0].size();
    Matrix H = A;
    // U starts as the identity; H = A U throughout.
    Matrix U(cols, std::vector<Int>(cols, Int(0)));
    for (std::size_t i = 0; i < cols; ++i) U[i][i] = 1;

    auto col_op = [&](std::size_t p, std::size_t j, const Int& s, const Int& t, const Int& x, const Int& y) {
        // col_p <- s col_p + t col_j ; col_j <- x col_p + y col_j
        for (auto* M : {&H, &U}) {
            for (auto& row : *M) {
                Int cp = row[p], cj = row[j];
                row[p] = s * cp + t * cj;
                row[j] = x * cp + y * cj;
            }
        }
    };

    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    std::size_t p = 0;
    for (std::size_t i = 0; i < rows && p < cols; ++i) {
        for (std::size_t j = p + 1; j < cols; ++j) {
            if (H[i][j] == 0) continue;
            Int a = H[i][p], c = H[i][j], s, t;
            Int g = egcd(a, c, s, t);
            col_op(p, j, s, t, -c / g, a / g);
        }
        if (H[i][p] != 0) {
            pivots.emplace_back(i, p);
            ++p;
        }
    }

    std::vector<Int> y(cols, Int(0));
    std::size_t next = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < cols; ++j) acc += H[i][j] * y[j];
        if (next < pivots.size() && pivots[next].first == i) {
            std::size_t c = pivots[next].second;
            Int rem = b[i] - acc;
            if (rem % H[i][c] != 0) return std::nullopt;
            y[c] = rem / H[i][c];
            ++next;
        } else if (acc != b[i]) {
            return std::nullopt;
        }
    }
    Solution out;
    out.particular.assign(cols, Int(0));
    for (std::size_t r = 0; r < cols; ++r)
        for (std::size_t c = 0; c < cols; ++c) out.particular[r] += U[r][c] * y[c];
    for (std::size_t c = pivots.size(); c < cols; ++c) {
        std::vector<Int> k(cols);
        for (std::size_t r = 0; r < cols; ++r) k[r] = U[r][c];
        out.kernel.push_back(std::move(k));
    }
    return out;
}

}  // namespace gmc::intlin
