#pragma once

#include <optional>
#include <string>

#include "equicob/dataset.hpp"
#include "equicob/localization.hpp"

namespace equicob {

enum class DecisionRoute {
    multiplicity,
    c1c2_vandermonde,
    exhaustive,
};

std::string route_name(DecisionRoute route);

// Outcome of a null-cobordism decision. A witness is present exactly when
// the data does not bound: either a weight-multiset key with nonzero signed
// multiplicity, or a multi-index whose Chern number is nonzero.
struct Verdict {
    bool bounds = false;
    DecisionRoute route = DecisionRoute::multiplicity;
    std::optional<SigmaClassKey> witness_key;
    Int witness_multiplicity = 0;
    std::optional<MultiIndex> witness_omega;
    std::string witness_value;

    bool has_witness() const { return witness_key.has_value() || witness_omega.has_value(); }
    std::string to_line() const;  // "BOUNDS route=.." | "NONBOUNDING witness=.. route=.."
};

// Bounds iff the multiplicity table is empty; witness = smallest nonzero key.
Verdict bounds_via_multiplicities(const Dataset& d);
Verdict bounds_via_multiplicities(const MultiplicityTable& table);

// Finite scan of the numbers built from the first and second classes:
// i = 0..s-1, j = 0..u-1 where s and u count the distinct sigma_1 and
// sigma_2 values. For rank 1 the scan degenerates to powers of the first
// class alone. Throws NonRealizableData when a required value is not a
// polynomial.
Verdict bounds_via_c1_c2(const Dataset& d);

// Scans every multi-index up to the cap through the rational route. The
// default cap max(2n, (s-1)+2(u-1)) contains the finite-decision rectangle,
// so on consistent data this agrees with the other routes.
Verdict bounds_via_exhaustive(const Dataset& d, int degree_cap = -1);

enum class SufficiencyOutcome {
    forced_to_bound,
    inconclusive,
};

// Partition-size test: with s classes by sigma_1 (largest size maxA) and u
// classes by sigma_2 (largest maxB), the data is forced to bound when
// s + 2*maxA - 3 < n or 2*u + maxB - 3 < n.
SufficiencyOutcome sufficiency_partition_condition(const Dataset& d);

// Proven lower bound ceil(n/2) + 1 on the fixed-point count of non-bounding
// data of rank n.
int min_fixed_points(int rank);

struct PartitionInequality {
    long long lhs = 0;  // r + 2*max(parts)
    long long rhs = 0;  // 2*sum(parts) + 1
    bool holds = false;
    bool equality = false;
};

// For positive parts a_1..a_r: r + 2*max <= 2*sum + 1, with equality exactly
// when r = 1. Throws EmptyInput on an empty sequence.
PartitionInequality partition_inequality(const std::vector<long long>& parts);

}  // namespace equicob
