#include "equicob/polynomial.hpp"

#include <sstream>

#include "equicob/matrix.hpp"

namespace equicob {

namespace {

std::string rank_text(int a, int b) {
    return "rank " + std::to_string(a) + " vs " + std::to_string(b);
}

bool monomial_divides(const Monomial& d, const Monomial& m) {
    for (std::size_t k = 0; k < d.exponents.size(); ++k) {
        if (d.exponents[k] > m.exponents[k]) return false;
    }
    return true;
}

Monomial monomial_quotient(const Monomial& m, const Monomial& d) {
    Monomial q = m;
    for (std::size_t k = 0; k < d.exponents.size(); ++k) q.exponents[k] -= d.exponents[k];
    return q;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    Monomial p = a;
    for (std::size_t k = 0; k < b.exponents.size(); ++k) p.exponents[k] += b.exponents[k];
    return p;
}

void append_term_text(std::ostream& os, const Monomial& m, const Int& magnitude) {
    bool printed = false;
    if (magnitude != 1) {
        os << magnitude;
        printed = true;
    }
    for (std::size_t k = 0; k < m.exponents.size(); ++k) {
        const int e = m.exponents[k];
        if (e == 0) continue;
        if (printed) os << "*";
        os << "x" << (k + 1);
        if (e > 1) os << "^" << e;
        printed = true;
    }
    if (!printed) os << magnitude;  // pure constant +-1
}

std::string single_term_text(const Monomial& m, const Int& coeff) {
    std::ostringstream os;
    if (coeff < 0) os << "-";
    append_term_text(os, m, boost::multiprecision::abs(coeff));
    return os.str();
}

}  // namespace

Polynomial::Polynomial(int rank) : rank_(rank) {
    if (rank < 0) throw RankMismatch("polynomial rank must be non-negative");
}

Polynomial Polynomial::constant(int rank, Int value) {
    Polynomial p(rank);
    if (value != 0) p.terms_.emplace(Monomial::unit(rank), std::move(value));
    return p;
}

Polynomial Polynomial::variable(int rank, int index) {
    if (index < 0 || index >= rank) throw RankMismatch("variable index out of range");
    Polynomial p(rank);
    Monomial m = Monomial::unit(rank);
    m.exponents[static_cast<std::size_t>(index)] = 1;
    p.terms_.emplace(std::move(m), 1);
    return p;
}

Polynomial Polynomial::linear_form(const LatticeVector& coefficients) {
    const int rank = static_cast<int>(coefficients.size());
    Polynomial p(rank);
    for (int k = 0; k < rank; ++k) {
        if (coefficients[static_cast<std::size_t>(k)] == 0) continue;
        Monomial m = Monomial::unit(rank);
        m.exponents[static_cast<std::size_t>(k)] = 1;
        p.terms_.emplace(std::move(m), coefficients[static_cast<std::size_t>(k)]);
    }
    return p;
}

Polynomial Polynomial::from_terms(int rank, const std::vector<std::pair<Monomial, Int>>& terms) {
    Polynomial p(rank);
    for (const auto& [m, c] : terms) {
        if (m.rank() != rank) throw RankMismatch("monomial rank differs from polynomial rank");
        p.insert_term(m, c);
    }
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.degree();  // leading term has maximal degree
}

Int Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void Polynomial::insert_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_same_rank(const Polynomial& other) const {
    if (rank_ != other.rank_) throw RankMismatch("polynomial " + rank_text(rank_, other.rank_));
}

Polynomial Polynomial::operator-() const {
    Polynomial r(rank_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_same_rank(other);
    Polynomial r = *this;
    for (const auto& [m, c] : other.terms_) r.insert_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    check_same_rank(other);
    Polynomial r = *this;
    for (const auto& [m, c] : other.terms_) r.insert_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_same_rank(other);
    Polynomial r(rank_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            r.insert_term(monomial_product(ma, mb), ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Int& scalar) const {
    Polynomial r(rank_);
    if (scalar == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * scalar);
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        append_term_text(os, m, boost::multiprecision::abs(c));
    }
    return os.str();
}

Polynomial pow(const Polynomial& base, int exponent) {
    if (exponent < 0) throw Error("negative polynomial exponent");
    Polynomial result = Polynomial::one(base.rank());
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

Polynomial substitute_linear(const Polynomial& p, const std::vector<std::vector<Int>>& matrix) {
    const int n = p.rank();
    if (static_cast<int>(matrix.size()) != n)
        throw RankMismatch("substitution matrix " + rank_text(static_cast<int>(matrix.size()), n));
    for (const auto& row : matrix) {
        if (static_cast<int>(row.size()) != n)
            throw RankMismatch("substitution matrix is not square");
    }

    if (n > 0 && determinant(matrix) == 0)
        throw SingularMatrix("substitution matrix has determinant 0");

    // Image of each variable, and a cache of its powers up to the largest
    // exponent that actually occurs.
    std::vector<Polynomial> image;
    image.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        LatticeVector column(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            column[static_cast<std::size_t>(i)] = matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        image.push_back(Polynomial::linear_form(column));
    }
    std::vector<int> max_exp(static_cast<std::size_t>(n), 0);
    for (const auto& [m, c] : p.terms()) {
        for (int k = 0; k < n; ++k)
            max_exp[static_cast<std::size_t>(k)] =
                std::max(max_exp[static_cast<std::size_t>(k)], m.exponents[static_cast<std::size_t>(k)]);
    }
    std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        auto& pk = powers[static_cast<std::size_t>(k)];
        pk.push_back(Polynomial::one(n));
        for (int e = 1; e <= max_exp[static_cast<std::size_t>(k)]; ++e)
            pk.push_back(pk.back() * image[static_cast<std::size_t>(k)]);
    }

    Polynomial result(n);
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(n, c);
        for (int k = 0; k < n; ++k) {
            const int e = m.exponents[static_cast<std::size_t>(k)];
            if (e > 0) term *= powers[static_cast<std::size_t>(k)][static_cast<std::size_t>(e)];
        }
        result += term;
    }
    return result;
}

DivideResult exact_divide(const Polynomial& num, const Polynomial& den) {
    if (num.rank() != den.rank())
        throw RankMismatch("division " + rank_text(num.rank(), den.rank()));
    if (den.is_zero()) throw DivisionByZero("division by the zero polynomial");
    if (num.is_zero()) return {DivideStatus::exact, Polynomial::zero(num.rank()), ""};

    using RatMap = std::map<Monomial, Rat, GradedLexGreater>;
    RatMap remainder;
    for (const auto& [m, c] : num.terms()) remainder.emplace(m, Rat(c));

    const Monomial& den_lead = den.terms().begin()->first;
    const Int& den_lc = den.terms().begin()->second;

    RatMap quotient;
    while (!remainder.empty()) {
        const Monomial rem_lead = remainder.begin()->first;
        if (!monomial_divides(den_lead, rem_lead)) {
            const Rat& rc = remainder.begin()->second;
            std::ostringstream os;
            os << "remainder leading term ";
            if (boost::multiprecision::denominator(rc) == 1) {
                os << single_term_text(rem_lead, boost::multiprecision::numerator(rc));
            } else {
                os << "(" << rc << ")*" << single_term_text(rem_lead, Int(1));
            }
            return {DivideStatus::not_divisible, std::nullopt, os.str()};
        }
        const Monomial q_mono = monomial_quotient(rem_lead, den_lead);
        const Rat q_coeff = remainder.begin()->second / Rat(den_lc);
        quotient[q_mono] += q_coeff;
        for (const auto& [dm, dc] : den.terms()) {
            const Monomial target = monomial_product(q_mono, dm);
            auto it = remainder.find(target);
            const Rat delta = q_coeff * Rat(dc);
            if (it == remainder.end()) {
                if (delta != 0) remainder.emplace(target, -delta);
            } else {
                it->second -= delta;
                if (it->second == 0) remainder.erase(it);
            }
        }
    }

    std::vector<std::pair<Monomial, Int>> integral_terms;
    integral_terms.reserve(quotient.size());
    for (const auto& [m, c] : quotient) {
        if (c == 0) continue;
        if (boost::multiprecision::denominator(c) != 1) {
            std::ostringstream os;
            os << "quotient coefficient " << c << " at " << single_term_text(m, Int(1));
            return {DivideStatus::exact_nonintegral, std::nullopt, os.str()};
        }
        integral_terms.emplace_back(m, boost::multiprecision::numerator(c));
    }
    return {DivideStatus::exact, Polynomial::from_terms(num.rank(), integral_terms), ""};
}

bool poly_less(const Polynomial& a, const Polynomial& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    const GradedLexGreater greater;
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return greater(ib->first, ia->first);
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms().end() && ib != b.terms().end();
}

}  // namespace equicob
