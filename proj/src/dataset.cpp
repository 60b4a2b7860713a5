#include "equicob/dataset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "equicob/symmetric.hpp"

namespace equicob {

std::string ValidationReport::first_failure() const {
    for (const PointValidation& p : points) {
        if (!p.ok()) return "point " + std::to_string(p.index) + ": " + p.detail;
    }
    return "";
}

ValidationReport validate_dataset(const Dataset& d) {
    ValidationReport report;
    report.valid = d.rank >= 1 && !d.points.empty();
    if (d.rank < 1 || d.points.empty()) {
        PointValidation pv;
        pv.detail = d.rank < 1 ? "rank must be >= 1" : "dataset has no points";
        report.points.push_back(pv);
        return report;
    }
    const std::size_t n = static_cast<std::size_t>(d.rank);
    for (std::size_t i = 0; i < d.points.size(); ++i) {
        const FixedPointDatum& p = d.points[i];
        PointValidation pv;
        pv.index = i;
        std::ostringstream detail;

        pv.weight_count_ok = p.weights.size() == n;
        for (const LatticeVector& w : p.weights) {
            if (w.size() != n) pv.weight_count_ok = false;
        }
        if (!pv.weight_count_ok) detail << "expected " << n << " weights of rank " << n << "; ";

        pv.weights_nonzero = true;
        for (const LatticeVector& w : p.weights) {
            if (is_zero_vector(w)) pv.weights_nonzero = false;
        }
        if (!pv.weights_nonzero) detail << "zero weight; ";

        pv.unimodular = false;
        if (pv.weight_count_ok) {
            const Int det = determinant(IntMatrix(p.weights.begin(), p.weights.end()));
            pv.unimodular = det == 1 || det == -1;
            if (!pv.unimodular) detail << "non-unimodular (det = " << det << "); ";
        }

        pv.sign_ok = p.sign == 1 || p.sign == -1;
        if (!pv.sign_ok) detail << "sign must be +1 or -1; ";

        pv.detail = detail.str();
        if (!pv.ok()) report.valid = false;
        report.points.push_back(std::move(pv));
    }
    return report;
}

void require_valid(const Dataset& d) {
    const ValidationReport report = validate_dataset(d);
    if (!report.valid) throw InvalidDataset(report.first_failure());
}

namespace {

void require_valid_point(const FixedPointDatum& p) {
    Dataset probe{static_cast<int>(p.weights.size()), {p}};
    require_valid(probe);
}

}  // namespace

std::vector<Polynomial> sigma_collection(const FixedPointDatum& p) {
    return elementary_symmetric_all(p.weights);
}

Polynomial euler_class(const FixedPointDatum& p) {
    const int n = static_cast<int>(p.weights.size());
    Polynomial product = Polynomial::one(n);
    for (const LatticeVector& w : p.weights) product *= Polynomial::linear_form(w);
    return p.sign < 0 ? -product : product;
}

SigmaClassKey SigmaClassKey::of(const FixedPointDatum& p) {
    SigmaClassKey key;
    key.sorted_weights = p.weights;
    std::sort(key.sorted_weights.begin(), key.sorted_weights.end());
    return key;
}

std::string SigmaClassKey::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < sorted_weights.size(); ++i) {
        if (i > 0) os << ",";
        os << "(";
        for (std::size_t j = 0; j < sorted_weights[i].size(); ++j) {
            if (j > 0) os << ",";
            os << sorted_weights[i][j];
        }
        os << ")";
    }
    os << "}";
    return os.str();
}

MultiplicityTable multiplicity_table(const Dataset& d) {
    require_valid(d);
    MultiplicityTable table;
    for (const FixedPointDatum& p : d.points) {
        // The canonical top value of the key equals the point's product of
        // weights, so the stored sign alone decides the orientation
        // comparison.
        table[SigmaClassKey::of(p)] += p.sign;
    }
    for (auto it = table.begin(); it != table.end();) {
        if (it->second == 0) {
            it = table.erase(it);
        } else {
            ++it;
        }
    }
    return table;
}

PartitionSummary partition_summary(const Dataset& d) {
    require_valid(d);
    PartitionSummary summary;
    const std::size_t count = d.points.size();

    std::map<Polynomial, std::vector<std::size_t>, PolynomialLess> by_sigma1;
    std::map<Polynomial, std::vector<std::size_t>, PolynomialLess> by_sigma2;
    for (std::size_t i = 0; i < count; ++i) {
        const std::vector<Polynomial> sigma = sigma_collection(d.points[i]);
        by_sigma1[sigma[0]].push_back(i);
        if (d.rank >= 2) by_sigma2[sigma[1]].push_back(i);
    }

    std::vector<std::size_t> class_a_of_point(count, 0);
    for (auto& [value, members] : by_sigma1) {
        for (std::size_t i : members) class_a_of_point[i] = summary.classes_by_sigma1.size();
        summary.sigma1_values.push_back(value);
        summary.classes_by_sigma1.push_back(std::move(members));
    }

    std::vector<std::size_t> class_b_of_point(count, 0);
    if (d.rank >= 2) {
        for (auto& [value, members] : by_sigma2) {
            for (std::size_t i : members) class_b_of_point[i] = summary.classes_by_sigma2.size();
            summary.sigma2_values.push_back(value);
            summary.classes_by_sigma2.push_back(std::move(members));
        }
    } else {
        // Rank 1 has no second symmetric value; fall back to the discrete
        // partition so the incidence bookkeeping stays well defined.
        summary.sigma2_degenerate = true;
        for (std::size_t i = 0; i < count; ++i) {
            class_b_of_point[i] = i;
            summary.classes_by_sigma2.push_back({i});
        }
    }

    summary.links_from_sigma1.assign(summary.classes_by_sigma1.size(), {});
    summary.links_from_sigma2.assign(summary.classes_by_sigma2.size(), {});
    std::vector<std::vector<char>> seen(summary.classes_by_sigma1.size(),
                                        std::vector<char>(summary.classes_by_sigma2.size(), 0));
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t k = class_a_of_point[i];
        const std::size_t l = class_b_of_point[i];
        if (!seen[k][l]) {
            seen[k][l] = 1;
            summary.links_from_sigma1[k].push_back(l);
            summary.links_from_sigma2[l].push_back(k);
        }
    }
    for (auto& links : summary.links_from_sigma1) std::sort(links.begin(), links.end());
    for (auto& links : summary.links_from_sigma2) std::sort(links.begin(), links.end());
    return summary;
}

std::size_t PartitionSummary::max_sigma1_class() const {
    std::size_t best = 0;
    for (const auto& members : classes_by_sigma1) best = std::max(best, members.size());
    return best;
}

std::size_t PartitionSummary::max_sigma2_class() const {
    std::size_t best = 0;
    for (const auto& members : classes_by_sigma2) best = std::max(best, members.size());
    return best;
}

IntMatrix change_of_basis(const FixedPointDatum& p, const FixedPointDatum& q) {
    if (p.weights.size() != q.weights.size())
        throw RankMismatch("points of rank " + std::to_string(p.weights.size()) + " vs " +
                           std::to_string(q.weights.size()));
    require_valid_point(p);
    require_valid_point(q);
    const std::size_t n = p.weights.size();
    // Column matrices of the stored weight order.
    IntMatrix wp(n, std::vector<Int>(n, 0));
    IntMatrix wq(n, std::vector<Int>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            wp[i][j] = p.weights[j][i];
            wq[i][j] = q.weights[j][i];
        }
    }
    return matrix_multiply(unimodular_inverse(wq), wp);
}

}  // namespace equicob
