#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equicob/bigint.hpp"
#include "equicob/errors.hpp"

namespace equicob {

// A power product in n variables x1..xn; exponents[k] is the exponent of
// x_{k+1}.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : exponents(std::move(exps)) {}
    static Monomial unit(int rank) { return Monomial(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

    int rank() const { return static_cast<int>(exponents.size()); }
    int degree() const {
        int d = 0;
        for (int e : exponents) d += e;
        return d;
    }

    bool operator==(const Monomial& other) const { return exponents == other.exponents; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }
};

// Graded lexicographic order with x1 > x2 > ... > xn, as a greater-than
// comparator so that map iteration starts at the leading term.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = a.degree();
        const int db = b.degree();
        if (da != db) return da > db;
        return a.exponents > b.exponents;
    }
};

// Exact sparse multivariate polynomial over arbitrary-precision integers.
// Canonical form: no zero coefficients are stored and terms sit in a fixed
// graded-lexicographic order, so equality is representation equality.
// Values are immutable in spirit: every operation returns a fresh
// polynomial in canonical form.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Int, GradedLexGreater>;

    // Zero polynomial of the given rank (empty term map).
    explicit Polynomial(int rank);

    static Polynomial zero(int rank) { return Polynomial(rank); }
    static Polynomial constant(int rank, Int value);
    static Polynomial one(int rank) { return constant(rank, 1); }
    // The variable x_{index+1} (0-based index).
    static Polynomial variable(int rank, int index);
    // The degree-1 form c1*x1 + ... + cn*xn.
    static Polynomial linear_form(const LatticeVector& coefficients);
    static Polynomial from_terms(int rank, const std::vector<std::pair<Monomial, Int>>& terms);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Total degree; -1 for the zero polynomial.
    int total_degree() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Int coefficient(const Monomial& m) const;
    // Constant-term value (the coefficient of the unit monomial).
    Int constant_value() const { return coefficient(Monomial::unit(rank_)); }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Int& scalar) const;
    Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
    Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

    bool operator==(const Polynomial& other) const {
        return rank_ == other.rank_ && terms_ == other.terms_;
    }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    // Canonical text form, terms in monomial order, e.g. "2*x1^2*x2 - 3*x2 + 1".
    std::string to_string() const;

private:
    void insert_term(const Monomial& m, const Int& c);
    void check_same_rank(const Polynomial& other) const;

    int rank_;
    TermMap terms_;
};

Polynomial pow(const Polynomial& base, int exponent);

// Ring homomorphism replacing x_k by the degree-1 form given by column k of
// the matrix (matrix[i][k] is the coefficient of x_{i+1} in the image of
// x_{k+1}). Throws SingularMatrix when det = 0.
Polynomial substitute_linear(const Polynomial& p, const std::vector<std::vector<Int>>& matrix);

enum class DivideStatus {
    exact,               // integer-coefficient quotient, carried in `quotient`
    exact_nonintegral,   // quotient exists over the rationals only
    not_divisible,
};

struct DivideResult {
    DivideStatus status;
    std::optional<Polynomial> quotient;
    // Diagnostics: leading remainder term for not_divisible, a sample
    // fractional coefficient for exact_nonintegral.
    std::string detail;
};

// Exact multivariate division num / den by leading-term reduction. Decides
// divisibility correctly for a single divisor; the quotient is unique when
// it exists. Throws DivisionByZero when den = 0.
DivideResult exact_divide(const Polynomial& num, const Polynomial& den);

// Deterministic total order on polynomials of equal canonical form classes;
// used to key partition classes and pick reporting representatives.
bool poly_less(const Polynomial& a, const Polynomial& b);

struct PolynomialLess {
    bool operator()(const Polynomial& a, const Polynomial& b) const { return poly_less(a, b); }
};

}  // namespace equicob
