#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "equicob/cobordism.hpp"
#include "equicob/dataset.hpp"

namespace equicob {

enum class SearchMode {
    exhaustive,
    random,
};

struct SearchConfig {
    int rank = 1;
    int point_count = 1;
    int weight_bound = 1;
    bool require_structural_filter = false;
    std::uint64_t seed = 0;
    SearchMode mode = SearchMode::exhaustive;
    // Random-mode candidate budget; must be positive in random mode.
    // Ignored (whole stream) in exhaustive mode when zero.
    std::uint64_t max_candidates = 0;
    int workers = 1;
    // Degree cap for the consistency gate; -1 means 2 * rank.
    int consistency_cap = -1;
    // Optional JSON-lines sink for hits and a resumable progress file.
    std::string hits_path;
    std::string progress_path;
    bool resume = false;
};

void check_config(const SearchConfig& cfg);  // throws ConfigInvalid

struct SearchHit {
    Dataset dataset;
    Verdict verdict;
    std::uint64_t candidate_index = 0;
};

struct SearchOutcome {
    std::uint64_t candidates_examined = 0;
    std::uint64_t pruned_by_canonical_form = 0;
    std::uint64_t pruned_by_structure = 0;
    std::uint64_t consistent_count = 0;
    std::vector<SearchHit> nonbounding_hits;
};

// All unordered bases of n nonzero integer vectors with entries in
// [-bound, bound] and determinant +-1, each emitted once with its weights
// in ascending lexicographic order.
std::vector<std::vector<LatticeVector>> enumerate_unimodular_bases(int rank, int weight_bound);

// Dataset normal form: weights sorted within each point, points sorted.
Dataset normalize_dataset(const Dataset& d);

// Orbit minimum of the normal form under signed coordinate permutations of
// the weight lattice combined with global orientation reversal.
Dataset canonicalize_dataset(const Dataset& d);
bool is_canonical_dataset(const Dataset& d);

// Streams the deduplicated candidate datasets for the config; the visitor
// returns false to stop early. Counters for raw/pruned candidates land in
// `stats` when given (hits/consistency fields are left untouched).
void enumerate_datasets(const SearchConfig& cfg,
                        const std::function<bool(const Dataset&, std::uint64_t)>& visit,
                        SearchOutcome* stats = nullptr);

// Full hunt: consistency gate (degree cap 2n) then the multiplicity verdict
// on every emitted dataset, recording each consistent non-bounding hit.
SearchOutcome hunt_nonbounding_minimal(const SearchConfig& cfg);

struct LemmaReport {
    int rank = 0;
    int trials = 0;
    // Hypothesis "first symmetric values equal and top values equal up to
    // sign" must force equal weight multisets.
    int sigma1_top_checked = 0;
    int sigma1_top_violations = 0;
    // Hypothesis "first and second symmetric values equal" must force equal
    // multisets and a signed-permutation change of basis.
    int sigma12_checked = 0;
    int sigma12_violations = 0;
    // Every integer matrix encountered satisfies A*A^T = I exactly when it
    // is a signed permutation.
    int orthogonality_checked = 0;
    int orthogonality_violations = 0;

    bool ok() const {
        return sigma1_top_violations == 0 && sigma12_violations == 0 &&
               orthogonality_violations == 0;
    }
};

LemmaReport verify_lemmas_randomized(int rank, int trials, std::uint64_t seed);

// Deterministic generator of unimodular weight data; bases are produced by
// random elementary row operations from the identity, regenerating any step
// that would push an entry past the bound.
class RandomUnimodular {
public:
    explicit RandomUnimodular(std::uint64_t seed) : engine_(seed) {}

    std::vector<LatticeVector> basis(int rank, int weight_bound);
    FixedPointDatum point(int rank, int weight_bound);
    Dataset dataset(int rank, int point_count, int weight_bound);
    IntMatrix unimodular_matrix(int rank, int weight_bound);
    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace equicob
