#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "equicob/bigint.hpp"
#include "equicob/matrix.hpp"
#include "equicob/polynomial.hpp"

namespace equicob {

// The tangent data of one isolated fixed point: n weight vectors whose
// matrix is unimodular, plus the orientation sign comparing the inherited
// orientation with the complex one.
struct FixedPointDatum {
    std::vector<LatticeVector> weights;
    int sign = 1;  // +1 or -1

    bool operator==(const FixedPointDatum& other) const {
        return sign == other.sign && weights == other.weights;
    }
};

// Abstract fixed-point data of a candidate unitary torus manifold.
// Duplicate points are allowed (disjoint unions are legitimate).
struct Dataset {
    int rank = 1;
    std::vector<FixedPointDatum> points;

    bool operator==(const Dataset& other) const {
        return rank == other.rank && points == other.points;
    }
};

struct PointValidation {
    std::size_t index = 0;
    bool weight_count_ok = false;
    bool weights_nonzero = false;
    bool unimodular = false;
    bool sign_ok = false;
    std::string detail;

    bool ok() const { return weight_count_ok && weights_nonzero && unimodular && sign_ok; }
};

struct ValidationReport {
    std::vector<PointValidation> points;
    bool valid = false;

    // First failing point's message, empty when valid.
    std::string first_failure() const;
};

ValidationReport validate_dataset(const Dataset& d);

// Throws InvalidDataset naming the first failing point.
void require_valid(const Dataset& d);

// (e_1(p), ..., e_n(p)) of the point's weight forms.
std::vector<Polynomial> sigma_collection(const FixedPointDatum& p);

// sign * (product of all weight forms).
Polynomial euler_class(const FixedPointDatum& p);

// The weight multiset in canonical (lexicographically sorted) order. Two
// points share a key exactly when their sigma collections agree, since the
// product of (1 + w*t) over the weights factors uniquely.
struct SigmaClassKey {
    std::vector<LatticeVector> sorted_weights;

    static SigmaClassKey of(const FixedPointDatum& p);

    bool operator==(const SigmaClassKey& other) const {
        return sorted_weights == other.sorted_weights;
    }
    bool operator<(const SigmaClassKey& other) const {
        return sorted_weights < other.sorted_weights;
    }

    std::string to_string() const;
};

// Key -> signed multiplicity (orientation-agreeing count minus the rest);
// zero entries omitted.
using MultiplicityTable = std::map<SigmaClassKey, Int>;

MultiplicityTable multiplicity_table(const Dataset& d);

// Grouping of the points by their first and second symmetric values, with
// the cross-incidence index sets used by the finite decision procedure.
struct PartitionSummary {
    // Distinct sigma_1 values in a deterministic order and the point-index
    // classes they cut out.
    std::vector<Polynomial> sigma1_values;
    std::vector<std::vector<std::size_t>> classes_by_sigma1;
    // Same for sigma_2. For rank 1 there is no sigma_2: the partition
    // degenerates to one class per point and sigma2_values stays empty.
    std::vector<Polynomial> sigma2_values;
    std::vector<std::vector<std::size_t>> classes_by_sigma2;
    bool sigma2_degenerate = false;

    // links_from_sigma1[k] = sigma_2 class indices meeting sigma_1 class k.
    std::vector<std::vector<std::size_t>> links_from_sigma1;
    // links_from_sigma2[l] = sigma_1 class indices meeting sigma_2 class l.
    std::vector<std::vector<std::size_t>> links_from_sigma2;

    std::size_t sigma1_count() const { return classes_by_sigma1.size(); }
    std::size_t sigma2_count() const { return classes_by_sigma2.size(); }
    std::size_t max_sigma1_class() const;
    std::size_t max_sigma2_class() const;
};

PartitionSummary partition_summary(const Dataset& d);

// The integer matrix A with weights(p) = weights(q) * A as column
// collections; integral because both weight matrices are unimodular.
IntMatrix change_of_basis(const FixedPointDatum& p, const FixedPointDatum& q);

}  // namespace equicob
