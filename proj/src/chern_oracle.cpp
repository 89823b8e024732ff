#include "legcount/chern_oracle.hpp"

#include <stdexcept>

namespace legcount {

Rational edge_character(int edge_degree, int label_i, int label_j, int a, int r,
                        const WeightAssignment& w) {
    if (edge_degree < 1 || a < 1 || r < 0)
        throw std::invalid_argument("edge_character: bad parameters");
    const Rational& li = w.lambdas[label_i];
    const Rational& lj = w.lambdas[label_j];
    const int top = a * edge_degree;
    Rational sum(0);
    for (int k = 0; k <= top; ++k)
        sum += pow_rational((top - k) * li + k * lj, r);
    return sum / make_rational(int_pow(edge_degree, r) * factorial(r), 1);
}

Rational tree_character(const ColoredTree& t, int a, int r,
                        const WeightAssignment& w) {
    Rational total(0);
    for (const Edge& e : t.edges)
        total += edge_character(e.degree, t.labels[e.u], t.labels[e.v], a, r, w);
    const auto val = t.valences();
    const Rational rfact = make_rational(factorial(r), 1);
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (val[v] <= 1)
            continue;
        Rational vertex_term =
            int_pow(a, r) * pow_rational(w.lambdas[t.labels[v]], r) / rfact;
        total -= (val[v] - 1) * vertex_term;
    }
    return total;
}

CharacterVector character_vector(const ColoredTree& t, int r,
                                 const WeightAssignment& w) {
    CharacterVector ch;
    ch.reserve(r + 1);
    for (int a = 1; a <= r + 1; ++a)
        ch.push_back(tree_character(t, a, r, w));
    return ch;
}

Rational incidence_from_characters(const CharacterVector& ch, int r) {
    if (static_cast<int>(ch.size()) != r + 1)
        throw std::invalid_argument("incidence_from_characters: need r+1 entries");
    const int n = r + 1;
    // augmented system, exact Gaussian elimination
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int a = 1; a <= n; ++a) {
        for (int k = 1; k <= n; ++k)
            m[a - 1][k - 1] = make_rational(int_pow(a, k), 1);
        m[a - 1][n] = ch[a - 1];
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && m[piv][col] == 0)
            ++piv;
        if (piv == n)
            throw verification_error("power matrix singular");
        std::swap(m[col], m[piv]);
        for (int row = col + 1; row < n; ++row) {
            if (m[row][col] == 0)
                continue;
            Rational f = m[row][col] / m[col][col];
            for (int j = col; j <= n; ++j)
                m[row][j] -= f * m[col][j];
        }
    }
    // only the top unknown is needed
    Rational top = m[n - 1][n] / m[n - 1][n - 1];
    return make_rational(factorial(n), 1) * top;
}

Rational incidence_via_cramer(const ColoredTree& t, int r,
                              const WeightAssignment& w) {
    if (r < 1 || r > w.label_bound() - 1)
        throw std::invalid_argument(
            "incidence_via_cramer: r must satisfy 1 <= r <= label_bound - 1");
    return incidence_from_characters(character_vector(t, r, w), r);
}

Integer faulhaber_sum(int q, unsigned long m) {
    if (q < 0)
        throw std::invalid_argument("faulhaber_sum: q must be >= 0");
    Integer acc(0);
    for (unsigned long k = 1; k <= m; ++k)
        acc += int_pow(Integer(k), q);
    return acc;
}

std::vector<Rational> faulhaber_coefficients(int q) {
    if (q < 0)
        throw std::invalid_argument("faulhaber_coefficients: q must be >= 0");
    const int deg = q + 1;
    // Newton forward differences of S^q at 0..deg
    std::vector<Rational> diff(deg + 1);
    for (int x = 0; x <= deg; ++x)
        diff[x] = make_rational(faulhaber_sum(q, x), 1);
    for (int level = 1; level <= deg; ++level)
        for (int x = deg; x >= level; --x)
            diff[x] -= diff[x - 1];
    // assemble sum_j diff[j]/j! * x(x-1)...(x-j+1)
    std::vector<Rational> coeffs(deg + 1, Rational(0));
    std::vector<Rational> falling{Rational(1)};  // coefficients of the product
    for (int j = 0; j <= deg; ++j) {
        Rational scale = diff[j] / make_rational(factorial(j), 1);
        for (int p = 0; p < static_cast<int>(falling.size()); ++p)
            coeffs[p] += scale * falling[p];
        // multiply by (x - j) for the next round
        falling.insert(falling.begin(), Rational(0));
        for (int p = 0; p + 1 < static_cast<int>(falling.size()); ++p)
            falling[p] -= j * falling[p + 1];
    }
    return coeffs;
}

}  // namespace legcount
