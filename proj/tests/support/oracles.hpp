#ifndef KOSZULKIT_TEST_ORACLES_HPP
#define KOSZULKIT_TEST_ORACLES_HPP

// Closed-form counts, a reference rank, and random inputs. The counts and
// bareiss_rank do not touch the library's own elimination code.

#include "koszulkit/linalg.hpp"
#include "koszulkit/module.hpp"

#include <gmpxx.h>

#include <random>
#include <vector>

namespace oracle {

inline long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline long long power(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Surjections [y] -> [x], x! S(y, x). Ordered ones number S(y, x).
inline long long surjections(int y, int x) {
    long long total = 0;
    for (int k = 0; k <= x; ++k) total += (k % 2 ? -1 : 1) * binomial(x, k) * power(x - k, y);
    return total;
}

// Injective linear maps F_q^x -> F_q^y.
inline long long injective_linear(int x, int y, int q) {
    if (x > y) return 0;
    long long r = 1;
    for (int i = 0; i < x; ++i) r *= power(q, y) - power(q, i);
    return r;
}

// Rank by fraction-free (Bareiss) elimination on the cleared integer matrix.
inline std::size_t bareiss_rank(const koszulkit::Matrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    std::vector<std::vector<mpz_class>> a(r, std::vector<mpz_class>(c));
    for (std::size_t i = 0; i < r; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < c; ++j) l = lcm(l, m(i, j).get_den());
        for (std::size_t j = 0; j < c; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < c && rank < r; ++col) {
        std::size_t p = rank;
        while (p < r && a[p][col] == 0) ++p;
        if (p == r) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < r; ++i) {
            for (std::size_t j = col + 1; j < c; ++j) a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

inline koszulkit::Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int spread = 3,
                                       double zero_bias = 0.3) {
    std::uniform_int_distribution<int> val(-spread, spread);
    std::uniform_int_distribution<int> den(1, 3);
    std::bernoulli_distribution zero(zero_bias);
    koszulkit::Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (!zero(rng)) m(i, j) = koszulkit::Rational(val(rng), den(rng));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j).canonicalize();
    return m;
}

// Low rank on purpose: product of two thin random matrices.
inline koszulkit::Matrix random_low_rank(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t k) {
    return random_matrix(rng, rows, k, 3, 0.1) * random_matrix(rng, k, cols, 3, 0.1);
}

// A module over l: a quotient of one or two representables by the
// submodule generated by a few random vectors.
inline koszulkit::GradedModule random_module(std::mt19937& rng, koszulkit::LinCatPtr l) {
    using namespace koszulkit;
    std::uniform_int_distribution<int> obj(l->lo(), l->hi() - 1);
    std::uniform_int_distribution<int> count(1, 2);
    std::vector<GradedModule> parts;
    const int np = count(rng);
    for (int k = 0; k < np; ++k) parts.push_back(representable(l, obj(rng)));
    const GradedModule p = direct_sum(parts);
    std::vector<FiberKey> keys;
    for (const auto& [k, f] : p.fibers()) keys.push_back(k);
    std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
    std::uniform_int_distribution<int> val(-2, 2);
    std::vector<ModuleGenerator> gens;
    const int ng = count(rng);
    for (int k = 0; k < ng; ++k) {
        const FiberKey key = keys[pick(rng)];
        Vector v(p.dim(key.first, key.second));
        for (auto& e : v) e = val(rng);
        gens.push_back({key.first, key.second, v});
    }
    return quotient(p, submodule_generated(p, gens));
}

}  // namespace oracle

#endif
