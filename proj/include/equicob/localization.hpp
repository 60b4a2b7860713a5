#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equicob/dataset.hpp"
#include "equicob/polynomial.hpp"

namespace equicob {

// Exponent tuple (i_1,...,i_n) selecting the Chern-class product
// c_1^{i_1} ... c_n^{i_n}.
struct MultiIndex {
    std::vector<int> entries;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e) : entries(std::move(e)) {}

    int rank() const { return static_cast<int>(entries.size()); }
    // Weighted degree: sum of j * i_j (class c_j has cohomological degree 2j).
    int weighted_degree() const;
    int top_entry() const { return entries.empty() ? 0 : entries.back(); }

    bool operator==(const MultiIndex& other) const { return entries == other.entries; }
    bool operator<(const MultiIndex& other) const { return entries < other.entries; }

    std::string to_string() const;  // "(i1,...,in)"
};

// All multi-indices of the given rank with weighted degree <= cap, in
// lexicographic order.
std::vector<MultiIndex> enumerate_multi_indices(int rank, int cap);

// Value of one equivariant Chern characteristic number, or the evidence
// that the localization sum failed to be a polynomial.
struct ChernNumberResult {
    MultiIndex omega;
    std::optional<Polynomial> value;
    std::string failure_detail;

    bool is_polynomial() const { return value.has_value(); }
    bool is_zero() const { return value.has_value() && value->is_zero(); }
    std::string value_text() const;
};

// Precomputed per-dataset localization state shared by repeated
// Chern-number queries. Validates the dataset once; all methods are const
// and safe to call concurrently.
class Localizer {
public:
    explicit Localizer(const Dataset& d);

    int rank() const { return rank_; }
    std::size_t point_count() const { return points_.size(); }
    const MultiplicityTable& table() const { return table_; }

    // Fixed-point sum with every summand placed over the common denominator
    // (the product of the distinct top symmetric values, orientation signs
    // folded into the numerators), then divided exactly once.
    ChernNumberResult chern_rational(const MultiIndex& omega) const;

    // Multiplicity-weighted form; needs no division but requires the top
    // index to be at least 1. Throws IndexRequiresDivision otherwise.
    Polynomial chern_multiplicity(const MultiIndex& omega) const;

private:
    struct PointData {
        std::vector<Polynomial> sigma;
        int sign = 1;
        std::size_t factor_index = 0;  // position of its top value among the distinct ones
    };

    int rank_;
    std::vector<PointData> points_;
    std::vector<Polynomial> denominator_factors_;  // distinct top symmetric values
    std::vector<Polynomial> cofactors_;            // product of the other factors, per factor
    Polynomial denominator_;
    MultiplicityTable table_;
    std::vector<std::pair<Int, std::vector<Polynomial>>> table_sigma_;  // (m, sigma of key)
};

ChernNumberResult chern_number_rational(const Dataset& d, const MultiIndex& omega);
Polynomial chern_number_multiplicity(const Dataset& d, const MultiIndex& omega);

struct ConsistencyEntry {
    MultiIndex omega;
    std::string value_text;  // canonical polynomial or "NONPOLY"
    bool pass = false;
    std::string reason;      // empty when pass

    std::string to_line() const;  // "omega=(..) value=.. checks=pass|fail:reason"
};

struct ConsistencyReport {
    int degree_cap = 0;
    std::vector<ConsistencyEntry> entries;  // sorted by omega
    std::size_t violation_count = 0;
    bool all_pass() const { return violation_count == 0; }
};

// For every omega with weighted degree <= degree_cap checks that (a) the
// rational route yields a polynomial, (b) values below the rank's degree
// vanish, (c) both routes agree whenever the top index is >= 1. Violations
// are reported, not raised: they are evidence of non-realizable data.
ConsistencyReport consistency_suite(const Dataset& d, int degree_cap);

// Short-circuit variant used by the search loop; reports the first
// violation through `why` when given.
bool is_consistent(const Dataset& d, int degree_cap, std::string* why = nullptr);
bool is_consistent(const Localizer& loc, int degree_cap, std::string* why = nullptr);

}  // namespace equicob
