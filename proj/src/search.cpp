#include "equicob/search.hpp"

#include <algorithm>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <thread>

#include "json.hpp"

#include "equicob/json_io.hpp"
#include "equicob/localization.hpp"

namespace equicob {

namespace {

bool point_less(const FixedPointDatum& a, const FixedPointDatum& b) {
    if (a.weights != b.weights) return a.weights < b.weights;
    return a.sign < b.sign;
}

bool dataset_less(const Dataset& a, const Dataset& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return std::lexicographical_compare(a.points.begin(), a.points.end(), b.points.begin(),
                                        b.points.end(), point_less);
}

// One symmetry of the weight lattice: a signed coordinate permutation,
// optionally combined with global orientation reversal.
struct GroupElement {
    std::vector<int> perm;       // image coordinate i reads source coordinate perm[i]
    std::uint32_t sign_mask = 0;
    bool flip = false;
};

std::vector<GroupElement> symmetry_group(int rank) {
    std::vector<GroupElement> group;
    std::vector<int> perm(static_cast<std::size_t>(rank));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (std::uint32_t mask = 0; mask < (1u << rank); ++mask) {
            for (int flip = 0; flip < 2; ++flip) {
                group.push_back({perm, mask, flip == 1});
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return group;
}

bool is_identity_element(const GroupElement& g) {
    if (g.sign_mask != 0 || g.flip) return false;
    for (std::size_t i = 0; i < g.perm.size(); ++i) {
        if (g.perm[i] != static_cast<int>(i)) return false;
    }
    return true;
}

LatticeVector apply_to_vector(const GroupElement& g, const LatticeVector& v) {
    LatticeVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Int& src = v[static_cast<std::size_t>(g.perm[i])];
        out[i] = (g.sign_mask >> i) & 1u ? -src : src;
    }
    return out;
}

FixedPointDatum apply_to_point(const GroupElement& g, const FixedPointDatum& p) {
    FixedPointDatum out;
    out.weights.reserve(p.weights.size());
    for (const LatticeVector& w : p.weights) out.weights.push_back(apply_to_vector(g, w));
    std::sort(out.weights.begin(), out.weights.end());
    out.sign = g.flip ? -p.sign : p.sign;
    return out;
}

void next_lattice_vector(LatticeVector& v, const Int& bound, bool& done) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] < bound) {
            ++v[i];
            for (std::size_t j = i + 1; j < v.size(); ++j) v[j] = -bound;
            return;
        }
    }
    done = true;
}

std::vector<LatticeVector> grid_vectors(int rank, int bound) {
    std::vector<LatticeVector> out;
    LatticeVector v(static_cast<std::size_t>(rank), Int(-bound));
    bool done = false;
    while (!done) {
        if (!is_zero_vector(v)) out.push_back(v);
        next_lattice_vector(v, Int(bound), done);
    }
    return out;
}

}  // namespace

std::vector<std::vector<LatticeVector>> enumerate_unimodular_bases(int rank, int weight_bound) {
    if (rank < 1) throw ConfigInvalid("rank must be >= 1");
    if (weight_bound < 1) throw ConfigInvalid("weight bound must be >= 1");
    const std::vector<LatticeVector> vectors = grid_vectors(rank, weight_bound);
    std::vector<std::vector<LatticeVector>> bases;

    std::vector<std::size_t> pick(static_cast<std::size_t>(rank));
    std::iota(pick.begin(), pick.end(), 0);
    if (vectors.size() < pick.size()) return bases;
    while (true) {
        IntMatrix m;
        m.reserve(pick.size());
        for (std::size_t idx : pick) m.push_back(vectors[idx]);
        const Int det = determinant(m);
        if (det == 1 || det == -1) {
            bases.emplace_back(m.begin(), m.end());
        }
        // next combination in lexicographic order
        std::size_t i = pick.size();
        while (i-- > 0) {
            if (pick[i] + (pick.size() - i) < vectors.size()) break;
            if (i == 0) return bases;
        }
        if (pick[i] + (pick.size() - i) >= vectors.size()) return bases;
        ++pick[i];
        for (std::size_t j = i + 1; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
    }
}

Dataset normalize_dataset(const Dataset& d) {
    Dataset out;
    out.rank = d.rank;
    out.points.reserve(d.points.size());
    for (const FixedPointDatum& p : d.points) {
        FixedPointDatum q = p;
        std::sort(q.weights.begin(), q.weights.end());
        out.points.push_back(std::move(q));
    }
    std::sort(out.points.begin(), out.points.end(), point_less);
    return out;
}

Dataset canonicalize_dataset(const Dataset& d) {
    Dataset best = normalize_dataset(d);
    for (const GroupElement& g : symmetry_group(d.rank)) {
        if (is_identity_element(g)) continue;
        Dataset candidate;
        candidate.rank = d.rank;
        candidate.points.reserve(d.points.size());
        for (const FixedPointDatum& p : d.points) candidate.points.push_back(apply_to_point(g, p));
        std::sort(candidate.points.begin(), candidate.points.end(), point_less);
        if (dataset_less(candidate, best)) best = std::move(candidate);
    }
    return best;
}

bool is_canonical_dataset(const Dataset& d) {
    return d == canonicalize_dataset(d);
}

void check_config(const SearchConfig& cfg) {
    if (cfg.rank < 1) throw ConfigInvalid("rank must be >= 1");
    if (cfg.point_count < 1) throw ConfigInvalid("point count must be >= 1");
    if (cfg.weight_bound < 1) throw ConfigInvalid("weight bound must be >= 1");
    if (cfg.workers < 1) throw ConfigInvalid("workers must be >= 1");
    if (cfg.mode == SearchMode::random && cfg.max_candidates == 0)
        throw ConfigInvalid("random mode needs a positive candidate budget");
    if (cfg.resume && cfg.progress_path.empty())
        throw ConfigInvalid("resume needs a progress file");
    if (cfg.resume && cfg.hits_path.empty())
        throw ConfigInvalid("resume needs a hits file to repopulate earlier hits");
}

namespace {

// Candidate datasets are multisets of entries from the sorted candidate
// point list (every unimodular basis within the bound, with either sign).
// The symmetry group permutes that list, so canonical-form rejection works
// on index tuples through precomputed permutation tables.
class CandidateStream {
public:
    explicit CandidateStream(const SearchConfig& cfg) : cfg_(cfg) {
        for (const auto& basis : enumerate_unimodular_bases(cfg.rank, cfg.weight_bound)) {
            points_.push_back({basis, 1});
            points_.push_back({basis, -1});
        }
        std::sort(points_.begin(), points_.end(), point_less);

        std::map<std::pair<std::vector<LatticeVector>, int>, int> index_of;
        for (std::size_t i = 0; i < points_.size(); ++i) {
            index_of[{points_[i].weights, points_[i].sign}] = static_cast<int>(i);
        }
        for (const GroupElement& g : symmetry_group(cfg.rank)) {
            if (is_identity_element(g)) continue;
            std::vector<int> table(points_.size());
            for (std::size_t i = 0; i < points_.size(); ++i) {
                const FixedPointDatum moved = apply_to_point(g, points_[i]);
                const auto it = index_of.find({moved.weights, moved.sign});
                if (it == index_of.end())
                    throw Error("candidate point set is not closed under the symmetry group");
                table[i] = it->second;
            }
            tables_.push_back(std::move(table));
        }
        odometer_.assign(static_cast<std::size_t>(cfg.point_count), 0);
        exhausted_ = points_.empty();
    }

    std::size_t candidate_point_count() const { return points_.size(); }

    bool next(std::vector<int>& out, std::uint64_t& raw_index) {
        if (exhausted_) return false;
        out = odometer_;
        raw_index = raw_++;
        // advance the non-decreasing index tuple
        const int limit = static_cast<int>(points_.size()) - 1;
        std::size_t i = odometer_.size();
        while (i-- > 0) {
            if (odometer_[i] < limit) {
                const int v = odometer_[i] + 1;
                for (std::size_t j = i; j < odometer_.size(); ++j) odometer_[j] = v;
                return true;
            }
            if (i == 0) exhausted_ = true;
        }
        return true;
    }

    bool is_canonical(const std::vector<int>& tuple) const {
        std::vector<int> mapped(tuple.size());
        for (const std::vector<int>& table : tables_) {
            for (std::size_t i = 0; i < tuple.size(); ++i)
                mapped[i] = table[static_cast<std::size_t>(tuple[i])];
            std::sort(mapped.begin(), mapped.end());
            if (mapped < tuple) return false;
        }
        return true;
    }

    Dataset materialize(const std::vector<int>& tuple) const {
        Dataset d;
        d.rank = cfg_.rank;
        d.points.reserve(tuple.size());
        for (int idx : tuple) d.points.push_back(points_[static_cast<std::size_t>(idx)]);
        return d;
    }

private:
    SearchConfig cfg_;
    std::vector<FixedPointDatum> points_;
    std::vector<std::vector<int>> tables_;
    std::vector<int> odometer_;
    std::uint64_t raw_ = 0;
    bool exhausted_ = false;
};

bool structural_filter_active(const SearchConfig& cfg) {
    return cfg.require_structural_filter && cfg.point_count == min_fixed_points(cfg.rank);
}

// The structural shape a minimal non-bounding dataset must have: all first
// symmetric values equal, all second values distinct.
bool passes_structural_filter(const Dataset& d, const SearchConfig& cfg) {
    const PartitionSummary parts = partition_summary(d);
    return parts.sigma1_count() == 1 &&
           parts.sigma2_count() == static_cast<std::size_t>(cfg.point_count);
}

}  // namespace

void enumerate_datasets(const SearchConfig& cfg,
                        const std::function<bool(const Dataset&, std::uint64_t)>& visit,
                        SearchOutcome* stats) {
    check_config(cfg);
    SearchOutcome local;
    SearchOutcome& s = stats ? *stats : local;
    const bool filtered = structural_filter_active(cfg);

    if (cfg.mode == SearchMode::exhaustive) {
        CandidateStream stream(cfg);
        std::vector<int> tuple;
        std::uint64_t raw = 0;
        while (stream.next(tuple, raw)) {
            ++s.candidates_examined;
            if (!stream.is_canonical(tuple)) {
                ++s.pruned_by_canonical_form;
                continue;
            }
            const Dataset d = stream.materialize(tuple);
            if (filtered && !passes_structural_filter(d, cfg)) {
                ++s.pruned_by_structure;
                continue;
            }
            if (!visit(d, raw)) return;
        }
        return;
    }

    RandomUnimodular gen(cfg.seed);
    for (std::uint64_t t = 0; t < cfg.max_candidates; ++t) {
        const Dataset d = normalize_dataset(gen.dataset(cfg.rank, cfg.point_count, cfg.weight_bound));
        ++s.candidates_examined;
        if (filtered && !passes_structural_filter(d, cfg)) {
            ++s.pruned_by_structure;
            continue;
        }
        if (!visit(d, t)) return;
    }
}

namespace {

constexpr std::uint64_t kCheckpointInterval = 100000;
constexpr std::size_t kBlockSize = 4096;

enum class CandidateFate {
    noncanonical,
    structure_pruned,
    inconsistent,
    bounds,
    hit,
};

struct BlockItem {
    std::vector<int> tuple;    // exhaustive mode
    Dataset dataset;           // random mode (pre-built)
    std::uint64_t raw_index = 0;
};

struct BlockResult {
    CandidateFate fate = CandidateFate::noncanonical;
    Dataset dataset;
    Verdict verdict;
    std::exception_ptr error;
};

void evaluate_dataset(const SearchConfig& cfg, const Dataset& d, int cap, bool filtered,
                      BlockResult& out) {
    if (filtered && !passes_structural_filter(d, cfg)) {
        out.fate = CandidateFate::structure_pruned;
        return;
    }
    const Localizer loc(d);
    if (!is_consistent(loc, cap)) {
        out.fate = CandidateFate::inconsistent;
        return;
    }
    const Verdict verdict = bounds_via_multiplicities(loc.table());
    if (verdict.bounds) {
        out.fate = CandidateFate::bounds;
        return;
    }
    out.fate = CandidateFate::hit;
    out.dataset = d;
    out.verdict = verdict;
}

void evaluate_block(const SearchConfig& cfg, const CandidateStream* stream,
                    const std::vector<BlockItem>& items, int cap, bool filtered,
                    std::vector<BlockResult>& results) {
    const auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < items.size(); i += step) {
            BlockResult& out = results[i];
            try {
                if (stream) {
                    if (!stream->is_canonical(items[i].tuple)) {
                        out.fate = CandidateFate::noncanonical;
                        continue;
                    }
                    evaluate_dataset(cfg, stream->materialize(items[i].tuple), cap, filtered, out);
                } else {
                    evaluate_dataset(cfg, items[i].dataset, cap, filtered, out);
                }
            } catch (...) {
                out.error = std::current_exception();
            }
        }
    };
    if (cfg.workers <= 1 || items.size() < 2) {
        work(0, 1);
        return;
    }
    const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(cfg.workers), items.size());
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (std::size_t w = 0; w < n; ++w) pool.emplace_back(work, w, n);
    for (std::thread& t : pool) t.join();
}

nlohmann::ordered_json progress_to_json(const SearchConfig& cfg, std::uint64_t next_raw,
                                        const SearchOutcome& outcome) {
    nlohmann::ordered_json j;
    j["schema"] = "equicob-progress";
    j["rank"] = cfg.rank;
    j["point_count"] = cfg.point_count;
    j["weight_bound"] = cfg.weight_bound;
    j["structural_filter"] = cfg.require_structural_filter;
    j["mode"] = cfg.mode == SearchMode::exhaustive ? "exhaustive" : "random";
    j["seed"] = cfg.seed;
    j["max_candidates"] = cfg.max_candidates;
    j["next_raw"] = next_raw;
    j["examined"] = outcome.candidates_examined;
    j["pruned_canonical"] = outcome.pruned_by_canonical_form;
    j["pruned_structure"] = outcome.pruned_by_structure;
    j["consistent"] = outcome.consistent_count;
    j["hits"] = outcome.nonbounding_hits.size();
    return j;
}

void write_progress(const SearchConfig& cfg, std::uint64_t next_raw, const SearchOutcome& outcome) {
    if (cfg.progress_path.empty()) return;
    const std::string tmp = cfg.progress_path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw IoError("cannot write progress file " + tmp);
        out << progress_to_json(cfg, next_raw, outcome).dump() << "\n";
    }
    std::filesystem::rename(tmp, cfg.progress_path);
}

std::uint64_t load_progress(const SearchConfig& cfg, SearchOutcome& outcome) {
    std::ifstream in(cfg.progress_path);
    if (!in) throw IoError("cannot read progress file " + cfg.progress_path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("progress file " + cfg.progress_path + ": " + e.what());
    }
    const nlohmann::ordered_json expected =
        progress_to_json(cfg, 0, SearchOutcome{});
    for (const char* field : {"schema", "rank", "point_count", "weight_bound",
                              "structural_filter", "mode", "seed", "max_candidates"}) {
        if (!j.contains(field) || nlohmann::json(j[field]) != nlohmann::json(expected[field]))
            throw ConfigInvalid("progress file does not match the search configuration (" +
                                std::string(field) + ")");
    }
    outcome.candidates_examined = j.at("examined").get<std::uint64_t>();
    outcome.pruned_by_canonical_form = j.at("pruned_canonical").get<std::uint64_t>();
    outcome.pruned_by_structure = j.at("pruned_structure").get<std::uint64_t>();
    outcome.consistent_count = j.at("consistent").get<std::uint64_t>();
    return j.at("next_raw").get<std::uint64_t>();
}

void reload_hits(const SearchConfig& cfg, std::uint64_t below, SearchOutcome& outcome) {
    std::ifstream in(cfg.hits_path);
    if (!in) return;  // no hits recorded yet
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw SchemaError("hits file " + cfg.hits_path + ": " + e.what());
        }
        SearchHit hit;
        hit.candidate_index = j.at("candidate_index").get<std::uint64_t>();
        if (hit.candidate_index >= below) continue;
        hit.dataset = dataset_from_json(j.at("dataset"));
        hit.verdict = bounds_via_multiplicities(hit.dataset);
        outcome.nonbounding_hits.push_back(std::move(hit));
    }
}

void append_hit(const SearchConfig& cfg, const SearchHit& hit) {
    if (cfg.hits_path.empty()) return;
    std::ofstream out(cfg.hits_path, std::ios::app);
    if (!out) throw IoError("cannot append to hits file " + cfg.hits_path);
    nlohmann::ordered_json j;
    j["candidate_index"] = hit.candidate_index;
    j["dataset"] = dataset_to_json(hit.dataset);
    j["verdict"] = verdict_to_json(hit.verdict);
    out << j.dump() << "\n";
}

}  // namespace

SearchOutcome hunt_nonbounding_minimal(const SearchConfig& cfg) {
    check_config(cfg);
    const int cap = cfg.consistency_cap < 0 ? 2 * cfg.rank : cfg.consistency_cap;
    const bool filtered = structural_filter_active(cfg);

    SearchOutcome outcome;
    std::uint64_t skip_below = 0;
    if (cfg.resume && std::filesystem::exists(cfg.progress_path)) {
        skip_below = load_progress(cfg, outcome);
        reload_hits(cfg, skip_below, outcome);
    }

    std::optional<CandidateStream> stream;
    std::optional<RandomUnimodular> gen;
    std::uint64_t total = 0;
    if (cfg.mode == SearchMode::exhaustive) {
        stream.emplace(cfg);
    } else {
        gen.emplace(cfg.seed);
        total = cfg.max_candidates;
    }

    std::uint64_t last_checkpoint = skip_below / kCheckpointInterval;
    std::uint64_t next_raw = skip_below;
    bool more = true;
    std::uint64_t random_done = 0;

    while (more) {
        std::vector<BlockItem> items;
        items.reserve(kBlockSize);
        if (cfg.mode == SearchMode::exhaustive) {
            std::vector<int> tuple;
            std::uint64_t raw = 0;
            while (items.size() < kBlockSize && (more = stream->next(tuple, raw))) {
                if (raw < skip_below) continue;
                BlockItem item;
                item.tuple = tuple;
                item.raw_index = raw;
                items.push_back(std::move(item));
            }
        } else {
            while (items.size() < kBlockSize && random_done < total) {
                Dataset d =
                    normalize_dataset(gen->dataset(cfg.rank, cfg.point_count, cfg.weight_bound));
                const std::uint64_t raw = random_done++;
                if (raw < skip_below) continue;
                BlockItem item;
                item.dataset = std::move(d);
                item.raw_index = raw;
                items.push_back(std::move(item));
            }
            more = random_done < total;
        }
        if (items.empty()) break;

        std::vector<BlockResult> results(items.size());
        evaluate_block(cfg, stream ? &*stream : nullptr, items, cap, filtered, results);

        for (std::size_t i = 0; i < items.size(); ++i) {
            if (results[i].error) std::rethrow_exception(results[i].error);
            ++outcome.candidates_examined;
            next_raw = items[i].raw_index + 1;
            switch (results[i].fate) {
                case CandidateFate::noncanonical:
                    ++outcome.pruned_by_canonical_form;
                    break;
                case CandidateFate::structure_pruned:
                    ++outcome.pruned_by_structure;
                    break;
                case CandidateFate::inconsistent:
                    break;
                case CandidateFate::bounds:
                    ++outcome.consistent_count;
                    break;
                case CandidateFate::hit: {
                    ++outcome.consistent_count;
                    SearchHit hit{std::move(results[i].dataset), results[i].verdict,
                                  items[i].raw_index};
                    append_hit(cfg, hit);
                    outcome.nonbounding_hits.push_back(std::move(hit));
                    break;
                }
            }
            if (next_raw / kCheckpointInterval != last_checkpoint) {
                last_checkpoint = next_raw / kCheckpointInterval;
                write_progress(cfg, next_raw, outcome);
            }
        }
    }

    write_progress(cfg, next_raw, outcome);
    return outcome;
}

std::vector<LatticeVector> RandomUnimodular::basis(int rank, int weight_bound) {
    if (rank < 1) throw ConfigInvalid("rank must be >= 1");
    if (weight_bound < 1) throw ConfigInvalid("weight bound must be >= 1");
    const Int bound = weight_bound;
    std::vector<LatticeVector> rows;
    for (int i = 0; i < rank; ++i) {
        LatticeVector row(static_cast<std::size_t>(rank), 0);
        row[static_cast<std::size_t>(i)] = 1;
        rows.push_back(std::move(row));
    }
    const auto pick = [&](int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); };
    const int ops = 2 * rank + pick(4 * rank + 1);
    for (int t = 0; t < ops; ++t) {
        const int kind = pick(rank > 1 ? 4 : 2);
        const std::size_t i = static_cast<std::size_t>(pick(rank));
        switch (kind) {
            case 0: {  // negate a row
                for (Int& e : rows[i]) e = -e;
                break;
            }
            case 1: {  // rank 1 fallback is negate-only; otherwise swap
                if (rank == 1) {
                    for (Int& e : rows[i]) e = -e;
                } else {
                    std::size_t j = static_cast<std::size_t>(pick(rank));
                    if (j != i) std::swap(rows[i], rows[j]);
                }
                break;
            }
            default: {  // add or subtract another row; regenerate on overflow
                std::size_t j = static_cast<std::size_t>(pick(rank));
                if (j == i) j = (j + 1) % static_cast<std::size_t>(rank);
                const bool subtract = kind == 3;
                LatticeVector updated = rows[i];
                bool within = true;
                for (std::size_t c = 0; c < updated.size(); ++c) {
                    updated[c] += subtract ? -rows[j][c] : rows[j][c];
                    if (updated[c] > bound || updated[c] < -bound) within = false;
                }
                if (within) rows[i] = std::move(updated);
                break;
            }
        }
    }
    std::shuffle(rows.begin(), rows.end(), engine_);
    return rows;
}

FixedPointDatum RandomUnimodular::point(int rank, int weight_bound) {
    FixedPointDatum p;
    p.weights = basis(rank, weight_bound);
    p.sign = engine_() % 2 == 0 ? 1 : -1;
    return p;
}

Dataset RandomUnimodular::dataset(int rank, int point_count, int weight_bound) {
    Dataset d;
    d.rank = rank;
    for (int i = 0; i < point_count; ++i) d.points.push_back(point(rank, weight_bound));
    return d;
}

IntMatrix RandomUnimodular::unimodular_matrix(int rank, int weight_bound) {
    const std::vector<LatticeVector> rows = basis(rank, weight_bound);
    return IntMatrix(rows.begin(), rows.end());
}

LemmaReport verify_lemmas_randomized(int rank, int trials, std::uint64_t seed) {
    if (rank < 1) throw ConfigInvalid("rank must be >= 1");
    if (trials < 1) throw ConfigInvalid("trials must be >= 1");
    LemmaReport report;
    report.rank = rank;
    report.trials = trials;
    RandomUnimodular gen(seed);
    const int bound = 3;

    const auto check_orthogonality = [&](const IntMatrix& a) {
        const bool orthogonal = is_identity(matrix_multiply(a, matrix_transpose(a)));
        ++report.orthogonality_checked;
        if (orthogonal != is_signed_permutation(a)) ++report.orthogonality_violations;
    };

    for (int t = 0; t < trials; ++t) {
        FixedPointDatum q;
        q.weights = gen.basis(rank, bound);
        q.sign = 1;
        FixedPointDatum p;
        switch (t % 3) {
            case 0:  // same multiset, shuffled order
                p.weights = q.weights;
                std::shuffle(p.weights.begin(), p.weights.end(), gen.engine());
                break;
            case 1: {  // negate a random subset and shuffle: same top value up to sign
                p.weights = q.weights;
                for (LatticeVector& w : p.weights) {
                    if (gen.engine()() % 2 == 0) {
                        for (Int& e : w) e = -e;
                    }
                }
                std::shuffle(p.weights.begin(), p.weights.end(), gen.engine());
                break;
            }
            default:  // unrelated basis
                p.weights = gen.basis(rank, bound);
                break;
        }
        p.sign = 1;

        const std::vector<Polynomial> sp = sigma_collection(p);
        const std::vector<Polynomial> sq = sigma_collection(q);
        const bool keys_equal = SigmaClassKey::of(p) == SigmaClassKey::of(q);
        const bool sigma1_equal = sp.front() == sq.front();
        const bool top_matches = sp.back() == sq.back() || sp.back() == -sq.back();

        if (sigma1_equal && top_matches) {
            ++report.sigma1_top_checked;
            if (!keys_equal) ++report.sigma1_top_violations;
        }
        if (rank >= 2 && sigma1_equal && sp[1] == sq[1]) {
            ++report.sigma12_checked;
            const IntMatrix a = change_of_basis(p, q);
            if (!keys_equal || !is_signed_permutation(a) ||
                !is_identity(matrix_multiply(a, matrix_transpose(a))))
                ++report.sigma12_violations;
        }

        check_orthogonality(change_of_basis(p, q));
        check_orthogonality(gen.unimodular_matrix(rank, bound));
    }
    return report;
}

}  // namespace equicob
