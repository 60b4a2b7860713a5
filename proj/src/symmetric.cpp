#include "equicob/symmetric.hpp"

namespace equicob {

namespace {

int checked_rank(const std::vector<LatticeVector>& weights) {
    const int n = static_cast<int>(weights.size());
    if (n == 0) throw ArityMismatch("empty weight sequence");
    for (const LatticeVector& w : weights) {
        if (static_cast<int>(w.size()) != n) {
            throw ArityMismatch("expected " + std::to_string(n) + " weights of rank " +
                                std::to_string(n) + ", got a vector of rank " +
                                std::to_string(w.size()));
        }
    }
    return n;
}

}  // namespace

std::vector<Polynomial> elementary_symmetric_all(const std::vector<LatticeVector>& weights) {
    const int n = checked_rank(weights);
    // e[j] after processing k weights holds e_j of those k forms.
    std::vector<Polynomial> e(static_cast<std::size_t>(n) + 1, Polynomial::zero(n));
    e[0] = Polynomial::one(n);
    int used = 0;
    for (const LatticeVector& w : weights) {
        const Polynomial form = Polynomial::linear_form(w);
        ++used;
        for (int j = used; j >= 1; --j) {
            e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * form;
        }
    }
    return {e.begin() + 1, e.end()};
}

Polynomial elementary_symmetric(const std::vector<LatticeVector>& weights, int j) {
    const int n = checked_rank(weights);
    if (j < 1 || j > n)
        throw ArityMismatch("symmetric index " + std::to_string(j) + " outside 1.." + std::to_string(n));
    return elementary_symmetric_all(weights)[static_cast<std::size_t>(j - 1)];
}

Polynomial power_sum_2(const std::vector<LatticeVector>& weights) {
    const int n = checked_rank(weights);
    Polynomial sum = Polynomial::zero(n);
    for (const LatticeVector& w : weights) {
        const Polynomial form = Polynomial::linear_form(w);
        sum += form * form;
    }
    return sum;
}

}  // namespace equicob
