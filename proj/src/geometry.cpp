#include "luroth/geometry.hpp"

namespace luroth {

HexChart hex_chart(const std::array<Rat, 6>& beta) {
    bool all_equal = true;
    for (size_t i = 1; i < 6; ++i)
        if (beta[i] != beta[0]) all_equal = false;
    if (all_equal) throw std::domain_error("dependent linear relations: beta is a constant vector");

    // RREF of the 2x6 relation matrix [[1,...,1],[beta_0,...,beta_5]] with
    // partial pivoting.
    std::array<std::array<Rat, 6>, 2> r;
    for (size_t i = 0; i < 6; ++i) {
        r[0][i] = 1;
        r[1][i] = beta[i];
    }
    std::array<size_t, 2> pivots{};
    size_t row = 0;
    for (size_t col = 0; col < 6 && row < 2; ++col) {
        size_t piv = row;
        Rat best = abs(r[row][col]);
        for (size_t i = row + 1; i < 2; ++i)
            if (abs(r[i][col]) > best) { best = abs(r[i][col]); piv = i; }
        if (best == 0) continue;
        std::swap(r[row], r[piv]);
        Rat inv = 1 / r[row][col];
        for (size_t j = 0; j < 6; ++j) r[row][j] *= inv;
        for (size_t i = 0; i < 2; ++i) {
            if (i == row || r[i][col] == 0) continue;
            Rat f = r[i][col];
            for (size_t j = 0; j < 6; ++j) r[i][j] -= f * r[row][j];
        }
        pivots[row] = col;
        ++row;
    }
    if (row < 2) throw std::domain_error("dependent linear relations: beta is a constant vector");

    HexChart ch;
    ch.pivot_coords = pivots;
    size_t k = 0;
    for (size_t col = 0; col < 6; ++col) {
        if (col == pivots[0] || col == pivots[1]) continue;
        std::array<Rat, 6> v{};
        v[col] = 1;
        v[pivots[0]] = -r[0][col];
        v[pivots[1]] = -r[1][col];
        // normalize: first nonzero entry = 1
        size_t first = 0;
        while (first < 6 && v[first] == 0) ++first;
        Rat inv = 1 / v[first];
        for (auto& x : v) x *= inv;
        ch.basis[k] = v;
        ch.free_coords[k] = col;
        ++k;
    }
    return ch;
}

Poly<Rat> chart_cubic(const HexChart& ch) {
    std::vector<std::string> vars{"x0", "x1", "x2", "x3"};
    Poly<Rat> cubic(vars);
    for (size_t i = 0; i < 6; ++i) {
        Poly<Rat> form(vars);
        for (size_t j = 0; j < 4; ++j)
            form += Poly<Rat>::variable(vars, j, ch.basis[j][i]);
        cubic += form.pow(3);
    }
    return cubic;
}

}  // namespace luroth
