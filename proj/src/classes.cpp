#include "legcount/classes.hpp"

#include <stdexcept>

namespace legcount {

std::vector<Flag> flags_of(const ColoredTree& t, const WeightAssignment& w) {
    std::vector<Flag> flags;
    flags.reserve(2 * t.edges.size());
    for (int ei = 0; ei < static_cast<int>(t.edges.size()); ++ei) {
        const Edge& e = t.edges[ei];
        const Rational& lu = w.lambdas[t.labels[e.u]];
        const Rational& lv = w.lambdas[t.labels[e.v]];
        flags.push_back(Flag{e.u, ei, Rational(lu - lv) / e.degree});
        flags.push_back(Flag{e.v, ei, Rational(lv - lu) / e.degree});
    }
    return flags;
}

Rational obstruction_euler(const ColoredTree& t, const WeightAssignment& w) {
    Rational acc(1);
    for (const Edge& e : t.edges) {
        const Rational& li = w.lambdas[t.labels[e.u]];
        const Rational& lj = w.lambdas[t.labels[e.v]];
        for (int alpha = 1; alpha <= 2 * e.degree - 1; ++alpha) {
            Rational factor = alpha * li + (2 * e.degree - alpha) * lj;
            if (factor == 0)
                throw degenerate_weights_error(
                    "obstruction class: vanishing edge factor");
            factor /= e.degree;
            acc *= factor;
        }
    }
    const auto val = t.valences();
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (val[v] < 2)
            continue;
        const Rational& lv = w.lambdas[t.labels[v]];
        if (lv == 0)
            throw degenerate_weights_error(
                "obstruction class: zero weight at a node of valence >= 2");
        acc *= pow_rational(2 * lv, val[v] - 1);
    }
    return acc;
}

Rational incidence_class(const ColoredTree& t, int r, const WeightAssignment& w) {
    if (r < 1 || r > w.label_bound() - 1)
        throw std::invalid_argument(
            "incidence class: r must satisfy 1 <= r <= label_bound - 1");
    Rational total(0);
    for (const Edge& e : t.edges) {
        const Rational& li = w.lambdas[t.labels[e.u]];
        const Rational& lj = w.lambdas[t.labels[e.v]];
        // sum_{s=0}^{r} li^s lj^{r-s}
        std::vector<Rational> pi(r + 1), pj(r + 1);
        pi[0] = 1;
        pj[0] = 1;
        for (int s = 1; s <= r; ++s) {
            pi[s] = pi[s - 1] * li;
            pj[s] = pj[s - 1] * lj;
        }
        Rational sym(0);
        for (int s = 0; s <= r; ++s)
            sym += pi[s] * pj[r - s];
        total += e.degree * sym;
    }
    return total;
}

Rational normal_bundle_euler(const ColoredTree& t, const WeightAssignment& w) {
    const int bound = w.label_bound();
    const auto val = t.valences();
    const auto flags = flags_of(t, w);

    Rational inv(1);

    // vertex factors V(v)
    std::vector<Rational> sum_inv(t.vertex_count(), Rational(0));
    std::vector<Rational> prod_inv(t.vertex_count(), Rational(1));
    for (const Flag& f : flags) {
        Rational rec = 1 / f.omega;  // omega != 0: adjacent labels distinct
        sum_inv[f.vertex] += rec;
        prod_inv[f.vertex] *= rec;
    }
    for (int v = 0; v < t.vertex_count(); ++v) {
        const int iv = t.labels[v];
        const Rational& lv = w.lambdas[iv];
        Rational base(1);
        for (int k = 0; k <= bound; ++k)
            if (k != iv)
                base *= lv - w.lambdas[k];
        const int psi_exp = val[v] - 3;
        if (psi_exp != 0 && sum_inv[v] == 0)
            throw degenerate_weights_error(
                "normal bundle: vanishing flag-weight sum at a vertex");
        inv *= pow_rational(base, val[v] - 1);
        if (psi_exp != 0)
            inv *= pow_rational(sum_inv[v], psi_exp);
        inv *= prod_inv[v];
    }

    // edge factors E(e)
    for (const Edge& e : t.edges) {
        const Rational& li = w.lambdas[t.labels[e.u]];
        const Rational& lj = w.lambdas[t.labels[e.v]];
        const unsigned long de = static_cast<unsigned long>(e.degree);
        Rational ef = make_rational(factorial(de) * factorial(de),
                                    int_pow(e.degree, 2 * de));
        if (de % 2)
            ef = -ef;
        ef *= pow_rational(li - lj, 2 * e.degree);
        for (int k = 0; k <= bound; ++k) {
            if (k == t.labels[e.u] || k == t.labels[e.v])
                continue;
            for (int a = 0; a <= e.degree; ++a) {
                Rational factor =
                    Rational(a * li + (e.degree - a) * lj) / e.degree -
                    w.lambdas[k];
                if (factor == 0)
                    throw degenerate_weights_error(
                        "normal bundle: vanishing edge factor");
                ef *= factor;
            }
        }
        inv /= ef;
    }

    return 1 / inv;
}

}  // namespace legcount
