#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamlocate/graph.hpp"
#include "hamlocate/oracle.hpp"

namespace hamlocate {

enum class PairPolicy { AllPairs, Sampled };
enum class EnumMode { AllLabeled, Canonical, Catalog };

struct CensusOptions {
    int n = 6;
    PairPolicy pair_policy = PairPolicy::AllPairs;
    int sample_pairs = 10;             // only for PairPolicy::Sampled
    EnumMode mode = EnumMode::AllLabeled;
    int min_degree = -1;               // -1 => smallest integer > n/2, i.e. the theorem bound
    int target_distance = -1;          // -1 => floor(n/2)
    SearchBudget budget;               // per (graph, pair) search
    std::string catalog_path;          // EnumMode::Catalog: graph6 lines
    std::string output_path;           // JSONL sink; empty => none
    bool resume = false;               // skip graph_ids already in output_path
    bool keep_records = false;         // retain every record in the result
    int threads = 0;                   // 0 => HAMLOCATE_THREADS or hardware
    std::uint64_t seed = 0;            // pair sampling
};

struct CensusRecord {
    std::string graph_id; // graph6 of the instance as enumerated
    int n = 0;
    int x = 0;
    int y = 0;
    SearchStatus outcome = SearchStatus::Exhausted;
    std::int64_t nodes = 0;
    double elapsed_ms = 0.0;
};

struct CensusResult {
    std::int64_t graphs = 0;
    std::int64_t pairs = 0;
    std::int64_t found = 0;
    std::int64_t absent = 0;
    std::int64_t exhausted = 0;
    std::vector<CensusRecord> failures; // every record whose outcome != Found
    std::vector<CensusRecord> records;  // all records, if keep_records
};

CensusResult run_census(const CensusOptions& opt);

// Exposed for tests and the CLI.
std::vector<Graph> enumerate_min_degree_labeled(int n, int min_degree);
std::vector<Graph> enumerate_min_degree_canonical(int n, int min_degree);
int worker_count(int requested);
std::string census_record_to_json(const CensusRecord& r);
CensusRecord census_record_from_json(const std::string& line);

} // namespace hamlocate
