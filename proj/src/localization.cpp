#include "equicob/localization.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "equicob/symmetric.hpp"

namespace equicob {

int MultiIndex::weighted_degree() const {
    int d = 0;
    for (std::size_t j = 0; j < entries.size(); ++j) d += static_cast<int>(j + 1) * entries[j];
    return d;
}

std::string MultiIndex::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t j = 0; j < entries.size(); ++j) {
        if (j > 0) os << ",";
        os << entries[j];
    }
    os << ")";
    return os.str();
}

namespace {

void fill_indices(int rank, int cap, std::size_t pos, int used, std::vector<int>& current,
                  std::vector<MultiIndex>& out) {
    if (pos == static_cast<std::size_t>(rank)) {
        out.emplace_back(current);
        return;
    }
    const int weight = static_cast<int>(pos) + 1;
    for (int i = 0; used + weight * i <= cap; ++i) {
        current[pos] = i;
        fill_indices(rank, cap, pos + 1, used + weight * i, current, out);
    }
    current[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> enumerate_multi_indices(int rank, int cap) {
    if (rank < 1) throw ConfigInvalid("rank must be >= 1");
    if (cap < 0) throw ConfigInvalid("degree cap must be >= 0");
    std::vector<MultiIndex> out;
    std::vector<int> current(static_cast<std::size_t>(rank), 0);
    fill_indices(rank, cap, 0, 0, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::string ChernNumberResult::value_text() const {
    return value ? value->to_string() : "NONPOLY";
}

Localizer::Localizer(const Dataset& d) : rank_(d.rank), denominator_(Polynomial::one(d.rank)) {
    require_valid(d);

    std::map<Polynomial, std::size_t, PolynomialLess> factor_index;
    for (const FixedPointDatum& p : d.points) {
        PointData data;
        data.sigma = elementary_symmetric_all(p.weights);
        data.sign = p.sign;
        const Polynomial& top = data.sigma.back();
        auto [it, inserted] = factor_index.emplace(top, denominator_factors_.size());
        if (inserted) denominator_factors_.push_back(top);
        data.factor_index = it->second;
        points_.push_back(std::move(data));
    }

    // cofactor[i] = product of all distinct top values except factor i,
    // assembled from prefix and suffix products.
    const std::size_t f = denominator_factors_.size();
    std::vector<Polynomial> prefix(f + 1, Polynomial::one(rank_));
    for (std::size_t i = 0; i < f; ++i) prefix[i + 1] = prefix[i] * denominator_factors_[i];
    std::vector<Polynomial> suffix(f + 1, Polynomial::one(rank_));
    for (std::size_t i = f; i-- > 0;) suffix[i] = suffix[i + 1] * denominator_factors_[i];
    denominator_ = prefix[f];
    cofactors_.reserve(f);
    for (std::size_t i = 0; i < f; ++i) cofactors_.push_back(prefix[i] * suffix[i + 1]);

    table_ = multiplicity_table(d);
    for (const auto& [key, m] : table_) {
        table_sigma_.emplace_back(m, elementary_symmetric_all(key.sorted_weights));
    }
}

ChernNumberResult Localizer::chern_rational(const MultiIndex& omega) const {
    if (omega.rank() != rank_)
        throw RankMismatch("multi-index " + omega.to_string() + " for rank " + std::to_string(rank_));
    for (int i : omega.entries) {
        if (i < 0) throw ConfigInvalid("multi-index entries must be non-negative");
    }

    Polynomial numerator = Polynomial::zero(rank_);
    for (const PointData& p : points_) {
        Polynomial term = cofactors_[p.factor_index];
        if (p.sign < 0) term = -term;
        for (std::size_t j = 0; j < p.sigma.size(); ++j) {
            const int e = omega.entries[j];
            if (e > 0) term *= pow(p.sigma[j], e);
        }
        numerator += term;
    }

    ChernNumberResult result;
    result.omega = omega;
    if (numerator.is_zero()) {
        result.value = Polynomial::zero(rank_);
        return result;
    }
    DivideResult division = exact_divide(numerator, denominator_);
    switch (division.status) {
        case DivideStatus::exact:
            result.value = std::move(*division.quotient);
            break;
        case DivideStatus::exact_nonintegral:
            result.failure_detail = "sum divides only with fractional coefficients: " + division.detail;
            break;
        case DivideStatus::not_divisible:
            result.failure_detail = "localization sum is not a polynomial: " + division.detail;
            break;
    }
    return result;
}

Polynomial Localizer::chern_multiplicity(const MultiIndex& omega) const {
    if (omega.rank() != rank_)
        throw RankMismatch("multi-index " + omega.to_string() + " for rank " + std::to_string(rank_));
    if (omega.top_entry() < 1)
        throw IndexRequiresDivision("top index of " + omega.to_string() +
                                    " is 0; use the rational route");

    Polynomial sum = Polynomial::zero(rank_);
    for (const auto& [m, sigma] : table_sigma_) {
        Polynomial term = Polynomial::constant(rank_, m);
        for (std::size_t j = 0; j + 1 < sigma.size(); ++j) {
            const int e = omega.entries[j];
            if (e > 0) term *= pow(sigma[j], e);
        }
        term *= pow(sigma.back(), omega.entries.back() - 1);
        sum += term;
    }
    return sum;
}

ChernNumberResult chern_number_rational(const Dataset& d, const MultiIndex& omega) {
    return Localizer(d).chern_rational(omega);
}

Polynomial chern_number_multiplicity(const Dataset& d, const MultiIndex& omega) {
    return Localizer(d).chern_multiplicity(omega);
}

std::string ConsistencyEntry::to_line() const {
    std::ostringstream os;
    os << "omega=" << omega.to_string() << " value=" << value_text << " checks=";
    os << (pass ? "pass" : "fail:" + reason);
    return os.str();
}

namespace {

// Shared check logic for one multi-index; returns pass/fail + reason.
ConsistencyEntry check_one(const Localizer& loc, const MultiIndex& omega) {
    ConsistencyEntry entry;
    entry.omega = omega;
    const ChernNumberResult result = loc.chern_rational(omega);
    entry.value_text = result.value_text();
    if (!result.is_polynomial()) {
        entry.pass = false;
        entry.reason = result.failure_detail;
        return entry;
    }
    if (omega.weighted_degree() < loc.rank() && !result.value->is_zero()) {
        entry.pass = false;
        entry.reason = "degree below rank must vanish";
        return entry;
    }
    if (omega.top_entry() >= 1) {
        const Polynomial other = loc.chern_multiplicity(omega);
        if (other != *result.value) {
            entry.pass = false;
            entry.reason = "multiplicity route disagrees: " + other.to_string();
            return entry;
        }
    }
    entry.pass = true;
    return entry;
}

std::vector<MultiIndex> indices_by_degree(int rank, int cap) {
    std::vector<MultiIndex> order = enumerate_multi_indices(rank, cap);
    std::stable_sort(order.begin(), order.end(), [](const MultiIndex& a, const MultiIndex& b) {
        return a.weighted_degree() < b.weighted_degree();
    });
    return order;
}

}  // namespace

ConsistencyReport consistency_suite(const Dataset& d, int degree_cap) {
    if (degree_cap < d.rank)
        throw ConfigInvalid("degree cap " + std::to_string(degree_cap) + " below rank " +
                            std::to_string(d.rank));
    const Localizer loc(d);
    ConsistencyReport report;
    report.degree_cap = degree_cap;
    for (const MultiIndex& omega : enumerate_multi_indices(d.rank, degree_cap)) {
        ConsistencyEntry entry = check_one(loc, omega);
        if (!entry.pass) ++report.violation_count;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

bool is_consistent(const Localizer& loc, int degree_cap, std::string* why) {
    for (const MultiIndex& omega : indices_by_degree(loc.rank(), degree_cap)) {
        const ConsistencyEntry entry = check_one(loc, omega);
        if (!entry.pass) {
            if (why) *why = entry.to_line();
            return false;
        }
    }
    return true;
}

bool is_consistent(const Dataset& d, int degree_cap, std::string* why) {
    return is_consistent(Localizer(d), degree_cap, why);
}

}  // namespace equicob
