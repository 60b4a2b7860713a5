#include "equicob/cobordism.hpp"

#include <algorithm>

namespace equicob {

std::string route_name(DecisionRoute route) {
    switch (route) {
        case DecisionRoute::multiplicity: return "multiplicity";
        case DecisionRoute::c1c2_vandermonde: return "c1c2_vandermonde";
        case DecisionRoute::exhaustive: return "exhaustive";
    }
    return "unknown";
}

std::string Verdict::to_line() const {
    if (bounds) return "BOUNDS route=" + route_name(route);
    std::string line = "NONBOUNDING witness=";
    if (witness_key) {
        line += witness_key->to_string() + " m=" + witness_multiplicity.str();
    } else if (witness_omega) {
        line += witness_omega->to_string() + "=" + witness_value;
    }
    return line + " route=" + route_name(route);
}

Verdict bounds_via_multiplicities(const Dataset& d) {
    return bounds_via_multiplicities(multiplicity_table(d));
}

Verdict bounds_via_multiplicities(const MultiplicityTable& table) {
    Verdict verdict;
    verdict.route = DecisionRoute::multiplicity;
    verdict.bounds = table.empty();
    if (!table.empty()) {
        verdict.witness_key = table.begin()->first;  // smallest key
        verdict.witness_multiplicity = table.begin()->second;
    }
    return verdict;
}

namespace {

MultiIndex c1c2_index(int rank, int i, int j) {
    std::vector<int> entries(static_cast<std::size_t>(rank), 0);
    entries[0] = i;
    if (rank >= 2) entries[1] = j;
    return MultiIndex(std::move(entries));
}

// Evaluates the whole scan (so a non-polynomial value anywhere in it is
// always surfaced), then reports the least nonzero index as witness.
Verdict scan_indices(const Localizer& loc, const std::vector<MultiIndex>& scan,
                     DecisionRoute route) {
    Verdict verdict;
    verdict.route = route;
    verdict.bounds = true;
    for (const MultiIndex& omega : scan) {
        const ChernNumberResult result = loc.chern_rational(omega);
        if (!result.is_polynomial()) {
            throw NonRealizableData("omega=" + omega.to_string() + ": " + result.failure_detail);
        }
        if (!result.value->is_zero() && verdict.bounds) {
            verdict.bounds = false;
            verdict.witness_omega = omega;
            verdict.witness_value = result.value->to_string();
        }
    }
    return verdict;
}

}  // namespace

Verdict bounds_via_c1_c2(const Dataset& d) {
    const PartitionSummary parts = partition_summary(d);
    const Localizer loc(d);
    const int s = static_cast<int>(parts.sigma1_count());

    std::vector<MultiIndex> scan;
    if (d.rank == 1) {
        // Rank 1 has no second class; powers of the first class alone
        // separate the s distinct values.
        for (int i = 0; i < s; ++i) scan.push_back(c1c2_index(1, i, 0));
    } else {
        const int u = static_cast<int>(parts.sigma2_count());
        for (int i = 0; i < s; ++i) {
            for (int j = 0; j < u; ++j) scan.push_back(c1c2_index(d.rank, i, j));
        }
    }
    // Lexicographically least witness first.
    std::sort(scan.begin(), scan.end());
    return scan_indices(loc, scan, DecisionRoute::c1c2_vandermonde);
}

Verdict bounds_via_exhaustive(const Dataset& d, int degree_cap) {
    const Localizer loc(d);
    if (degree_cap < 0) {
        const PartitionSummary parts = partition_summary(d);
        const int s = static_cast<int>(parts.sigma1_count());
        const int u = static_cast<int>(parts.sigma2_count());
        // Cover the finite-decision rectangle so the scan is complete on
        // consistent data.
        degree_cap = std::max(2 * d.rank, (s - 1) + 2 * (u - 1));
    }
    return scan_indices(loc, enumerate_multi_indices(d.rank, degree_cap),
                        DecisionRoute::exhaustive);
}

SufficiencyOutcome sufficiency_partition_condition(const Dataset& d) {
    const PartitionSummary parts = partition_summary(d);
    const long long n = d.rank;
    const long long s = static_cast<long long>(parts.sigma1_count());
    const long long u = static_cast<long long>(parts.sigma2_count());
    const long long max_a = static_cast<long long>(parts.max_sigma1_class());
    const long long max_b = static_cast<long long>(parts.max_sigma2_class());
    if (s + 2 * max_a - 3 < n || 2 * u + max_b - 3 < n) return SufficiencyOutcome::forced_to_bound;
    return SufficiencyOutcome::inconclusive;
}

int min_fixed_points(int rank) {
    if (rank < 1) throw ConfigInvalid("rank must be >= 1");
    return (rank + 1) / 2 + 1;
}

PartitionInequality partition_inequality(const std::vector<long long>& parts) {
    if (parts.empty()) throw EmptyInput("partition must have at least one part");
    PartitionInequality result;
    long long sum = 0;
    long long max = 0;
    for (long long a : parts) {
        if (a < 1) throw ConfigInvalid("parts must be positive");
        sum += a;
        max = std::max(max, a);
    }
    result.lhs = static_cast<long long>(parts.size()) + 2 * max;
    result.rhs = 2 * sum + 1;
    result.holds = result.lhs <= result.rhs;
    result.equality = result.lhs == result.rhs;
    return result;
}

}  // namespace equicob
