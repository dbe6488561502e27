#include "koszulkit/group.hpp"

#include <deque>
#include <stdexcept>

namespace koszulkit {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, bool check) : mult_(std::move(table)) {
    const int n = order();
    if (n == 0) throw std::invalid_argument("group table is empty");
    for (const auto& row : mult_) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (mult_[0][a] != a || mult_[a][0] != a) throw std::invalid_argument("element 0 is not the identity");
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mult_[a][b] == 0) inv_[a] = b;
    for (int a = 0; a < n; ++a)
        if (inv_[a] < 0 || mult_[inv_[a]][a] != 0) throw std::invalid_argument("element without two-sided inverse");
    if (check) {
        if (auto w = check_axioms()) throw std::invalid_argument("group table not associative at " + *w);
    }
    build_derived();
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t), false);
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order(); ++a)
        for (int b = a + 1; b < order(); ++b)
            if (mult_[a][b] != mult_[b][a]) return false;
    return true;
}

FiniteGroup FiniteGroup::opposite() const {
    const int n = order();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = mult_[b][a];
    return FiniteGroup(std::move(t), false);
}

std::optional<std::string> FiniteGroup::check_axioms() const {
    const int n = order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = mult_[a][b];
            for (int c = 0; c < n; ++c)
                if (mult_[ab][c] != mult_[a][mult_[b][c]])
                    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
        }
    return std::nullopt;
}

void FiniteGroup::build_derived() {
    const int n = order();
    std::vector<char> in_sub(n, 0);
    in_sub[0] = 1;
    int sub_size = 1;
    for (int g = 1; g < n && sub_size < n; ++g) {
        if (in_sub[g]) continue;
        gens_.push_back(g);
        // closure of the subgroup under right multiplication by generators
        std::deque<int> queue;
        for (int h = 0; h < n; ++h)
            if (in_sub[h]) queue.push_back(h);
        while (!queue.empty()) {
            int h = queue.front();
            queue.pop_front();
            for (int s : gens_) {
                int k = mult_[h][s];
                if (!in_sub[k]) {
                    in_sub[k] = 1;
                    ++sub_size;
                    queue.push_back(k);
                }
            }
        }
    }
    parent_.assign(n, -1);
    parent_gen_.assign(n, -1);
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int h = queue.front();
        queue.pop_front();
        for (int i = 0; i < static_cast<int>(gens_.size()); ++i) {
            int k = mult_[h][gens_[i]];
            if (seen[k]) continue;
            seen[k] = 1;
            parent_[k] = h;
            parent_gen_[k] = i;
            queue.push_back(k);
        }
    }
}

}  // namespace koszulkit
