#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "equicob/matrix.hpp"
#include "equicob/polynomial.hpp"
#include "equicob/symmetric.hpp"

using namespace equicob;

namespace {

Polynomial var(int rank, int i) { return Polynomial::variable(rank, i); }

Polynomial random_polynomial(std::mt19937_64& rng, int rank, int max_degree, int max_terms) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::vector<std::pair<Monomial, Int>> built;
    const int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        Monomial m = Monomial::unit(rank);
        int budget = max_degree;
        for (int k = 0; k < rank; ++k) {
            std::uniform_int_distribution<int> exp(0, budget);
            m.exponents[static_cast<std::size_t>(k)] = exp(rng);
            budget -= m.exponents[static_cast<std::size_t>(k)];
        }
        built.emplace_back(std::move(m), Int(coeff(rng)));
    }
    return Polynomial::from_terms(rank, built);
}

IntMatrix random_invertible(std::mt19937_64& rng, int n) {
    // Row operations on the identity keep |det| = 1.
    IntMatrix m = identity_matrix(n);
    std::uniform_int_distribution<int> pickrow(0, n - 1);
    for (int step = 0; step < 3 * n; ++step) {
        const int i = pickrow(rng);
        const int j = pickrow(rng);
        switch (rng() % 3) {
            case 0:
                for (auto& e : m[static_cast<std::size_t>(i)]) e = -e;
                break;
            case 1:
                if (i != j) std::swap(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)]);
                break;
            default:
                if (i != j) {
                    for (int c = 0; c < n; ++c)
                        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] +=
                            m[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
                }
                break;
        }
    }
    return m;
}

}  // namespace

TEST_CASE("arithmetic on the documented examples") {
    const int n = 2;
    const Polynomial x = var(n, 0);
    const Polynomial y = var(n, 1);

    CHECK((x + y) + (x - y) == x * Polynomial::constant(n, 2));
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + y) * Polynomial::zero(n) == Polynomial::zero(n));
    CHECK(Polynomial::zero(n).is_zero());

    CHECK(pow(x + y, 0) == Polynomial::one(n));
    CHECK(pow(x + y, 2) == x * x + x * y * Polynomial::constant(n, 2) + y * y);
    CHECK(pow(x, 3) == x * x * x);

    CHECK_THROWS_AS(x + var(3, 0), RankMismatch);
}

TEST_CASE("canonical text form") {
    const int n = 2;
    const Polynomial x = var(n, 0);
    const Polynomial y = var(n, 1);
    const Polynomial p =
        x * x * y * Polynomial::constant(n, 2) - y * Polynomial::constant(n, 3) + Polynomial::one(n);
    CHECK(p.to_string() == "2*x1^2*x2 - 3*x2 + 1");
    CHECK(Polynomial::zero(n).to_string() == "0");
    CHECK(Polynomial::constant(n, -7).to_string() == "-7");
    CHECK((-x).to_string() == "-x1");
    CHECK((y - x).to_string() == "-x1 + x2");
}

TEST_CASE("substitution examples") {
    const int n = 2;
    const Polynomial x = var(n, 0);
    const Polynomial y = var(n, 1);

    // swap x and y
    const IntMatrix swap{{Int(0), Int(1)}, {Int(1), Int(0)}};
    CHECK(substitute_linear(x * x + y * Polynomial::constant(n, 2), swap) ==
          y * y + x * Polynomial::constant(n, 2));

    CHECK(substitute_linear(x * y - pow(x, 3), identity_matrix(2)) == x * y - pow(x, 3));

    // x -> x + y, y -> y: column 0 is (1,1), column 1 is (0,1)
    const IntMatrix shear{{Int(1), Int(0)}, {Int(1), Int(1)}};
    CHECK(substitute_linear(x * y, shear) == x * y + y * y);

    const IntMatrix singular{{Int(1), Int(1)}, {Int(1), Int(1)}};
    CHECK_THROWS_AS(substitute_linear(x, singular), SingularMatrix);
}

TEST_CASE("substitution composes contravariantly") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const Polynomial p = random_polynomial(rng, n, 4, 5);
        const IntMatrix a = random_invertible(rng, n);
        const IntMatrix b = random_invertible(rng, n);
        CHECK(substitute_linear(substitute_linear(p, a), b) ==
              substitute_linear(p, matrix_multiply(b, a)));
    }
}

TEST_CASE("exact division examples") {
    const int n = 2;
    const Polynomial x = var(n, 0);
    const Polynomial y = var(n, 1);

    auto r = exact_divide(x * x - y * y, x - y);
    REQUIRE(r.status == DivideStatus::exact);
    CHECK(*r.quotient == x + y);

    r = exact_divide(x * x + y, x);
    CHECK(r.status == DivideStatus::not_divisible);
    CHECK(r.detail.find("x2") != std::string::npos);

    r = exact_divide(Polynomial::zero(n), x - y);
    REQUIRE(r.status == DivideStatus::exact);
    CHECK(r.quotient->is_zero());

    r = exact_divide(x, Polynomial::constant(n, 2));
    CHECK(r.status == DivideStatus::exact_nonintegral);

    CHECK_THROWS_AS(exact_divide(x, Polynomial::zero(n)), DivisionByZero);
}

TEST_CASE("division inverts multiplication") {
    std::mt19937_64 rng(11);
    int nontrivial = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const Polynomial a = random_polynomial(rng, n, 3, 4);
        const Polynomial b = random_polynomial(rng, n, 3, 4);
        if (b.is_zero()) continue;
        ++nontrivial;
        const auto r = exact_divide(a * b, b);
        REQUIRE(r.status == DivideStatus::exact);
        CHECK(*r.quotient == a);
    }
    CHECK(nontrivial > 60);
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const Polynomial a = random_polynomial(rng, n, 5, 5);
        const Polynomial b = random_polynomial(rng, n, 5, 5);
        const Polynomial c = random_polynomial(rng, n, 5, 5);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Polynomial::zero(n));
        CHECK(a + (-a) == Polynomial::zero(n));
    }
}

TEST_CASE("elementary symmetric values") {
    const std::vector<LatticeVector> std2{{Int(1), Int(0)}, {Int(0), Int(1)}};
    const Polynomial x = var(2, 0);
    const Polynomial y = var(2, 1);
    CHECK(elementary_symmetric(std2, 1) == x + y);
    CHECK(elementary_symmetric(std2, 2) == x * y);

    // x * (-x + y) = -x^2 + xy
    const std::vector<LatticeVector> skew{{Int(1), Int(0)}, {Int(-1), Int(1)}};
    CHECK(elementary_symmetric(skew, 2) == x * y - x * x);

    CHECK_THROWS_AS(elementary_symmetric({{Int(1), Int(0)}}, 1), ArityMismatch);
    CHECK_THROWS_AS(elementary_symmetric(std2, 3), ArityMismatch);
}

TEST_CASE("symmetric functions ignore weight order") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        std::vector<LatticeVector> weights;
        for (int i = 0; i < n; ++i) {
            LatticeVector w;
            for (int k = 0; k < n; ++k) w.push_back(Int(static_cast<int>(rng() % 7) - 3));
            if (is_zero_vector(w)) w[0] = 1;
            weights.push_back(std::move(w));
        }
        auto shuffled = weights;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(elementary_symmetric_all(weights) == elementary_symmetric_all(shuffled));
    }
}

TEST_CASE("power sums") {
    const Polynomial x = var(2, 0);
    const Polynomial y = var(2, 1);
    CHECK(power_sum_2({{Int(1), Int(0)}, {Int(0), Int(1)}}) == x * x + y * y);
    // x^2 + (x+y)^2 = 2x^2 + 2xy + y^2
    CHECK(power_sum_2({{Int(1), Int(0)}, {Int(1), Int(1)}}) ==
          x * x * Polynomial::constant(2, 2) + x * y * Polynomial::constant(2, 2) + y * y);
}

TEST_CASE("Newton identity p2 = e1^2 - 2 e2") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        std::vector<LatticeVector> weights;
        for (int i = 0; i < n; ++i) {
            LatticeVector w;
            for (int k = 0; k < n; ++k) w.push_back(Int(static_cast<int>(rng() % 9) - 4));
            if (is_zero_vector(w)) w[static_cast<std::size_t>(i)] = 1;
            weights.push_back(std::move(w));
        }
        const auto e = elementary_symmetric_all(weights);
        CHECK(power_sum_2(weights) == e[0] * e[0] - e[1] * Polynomial::constant(n, 2));
    }
}

TEST_CASE("matrix predicates") {
    CHECK(is_signed_permutation({{Int(0), Int(-1)}, {Int(1), Int(0)}}));
    CHECK_FALSE(is_signed_permutation({{Int(1), Int(1)}, {Int(0), Int(1)}}));
    CHECK(is_signed_permutation(identity_matrix(3)));

    CHECK(determinant({{Int(2), Int(1)}, {Int(1), Int(1)}}) == 1);
    CHECK(determinant({{Int(1), Int(0)}, {Int(2), Int(0)}}) == 0);

    const IntMatrix a{{Int(2), Int(1)}, {Int(1), Int(1)}};
    CHECK(matrix_multiply(a, unimodular_inverse(a)) == identity_matrix(2));
    CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{Int(2), Int(0)}, {Int(0), Int(1)}}),
                    SingularMatrix);
}
