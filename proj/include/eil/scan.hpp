#ifndef EIL_SCAN_HPP
#define EIL_SCAN_HPP

#include "eil/bigint.hpp"
#include "eil/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace eil {

// One graph's full invariant tuple. reg fields stay empty when regularity
// was not requested, the graph is over the homology cap, or it has no edge.
// Resource errors land in `error`; they never abort a scan.
struct InvariantRecord {
    std::string graph6;
    int n = 0;
    int m = 0;
    bool connected = false;
    int alpha = 0;
    int beta = 0;
    int v = 0;
    int deg_h = 0;
    BigInt lead_coeff = 0;
    std::optional<int> reg_q;
    std::optional<int> reg_f2;
    std::string error;
};

struct ScanOptions {
    bool reg_q = false;
    bool reg_f2 = false;
    int reg_cap = 13;
    int workers = 1;
    std::size_t chunk_size = 4096;
};

// Throws if the record falsifies a theorem (v > beta, v + deg_h > n,
// deg_h > alpha): such a violation must abort loudly, never pass silently.
void validate_record(const InvariantRecord& rec);

InvariantRecord compute_record(const std::string& code, const ScanOptions& opts);

// Parallel over fixed-size chunks, reassembled by chunk index: output order
// equals input order no matter the worker count.
std::vector<InvariantRecord> scan(const std::vector<std::string>& codes,
                                  const ScanOptions& opts);

std::string record_csv_header();
std::string to_csv(const InvariantRecord& rec);
std::string to_json_line(const InvariantRecord& rec);

enum class RecordFormat { Csv, JsonLines };

struct ScanFileOptions : ScanOptions {
    RecordFormat format = RecordFormat::Csv;
    bool checkpoint = false;
};

// Streaming scan of a .g6 file into an output file. With checkpointing, a
// "<input>.ckpt" sidecar records completed input lines and a digest of the
// output written so far; resuming validates the digest and continues,
// producing byte-identical remaining output. Returns total records written.
std::uint64_t scan_g6_file(const std::string& input_path, const std::string& output_path,
                           const ScanFileOptions& opts);

std::vector<InvariantRecord> find_v_gt_deg(const std::vector<InvariantRecord>& records);

// Realized (v, deg_h) pairs with multiplicities over the connected graphs on
// n vertices.
struct ScatterTable {
    int n = 0;
    std::map<std::pair<int, int>, std::uint64_t> pairs;
    std::set<std::pair<int, int>> pair_set() const;
};

ScatterTable scatter(int n, const std::vector<InvariantRecord>& records);
std::string to_csv(const ScatterTable& table);

// Theorem sweep over a set of graphs. Equality classifications follow the
// paper's convention of graphs whose every component has an edge, so they
// skip graphs with isolated vertices; inequalities are checked on all
// graphs. The 2v + deg_h <= n + 1 check carries conjecture status: it is
// reported, never asserted.
struct TheoremCheck {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
    std::vector<std::string> violations;
    bool conjecture = false;
};

struct TheoremReport {
    std::vector<TheoremCheck> checks;
    bool all_passed() const;
};

TheoremReport verify_theorems(const std::vector<std::string>& codes, const ScanOptions& opts);

// FNV-1a; the digest used for checkpoints and input fingerprints.
std::uint64_t fnv1a(std::uint64_t seed, const char* data, std::size_t size);
constexpr std::uint64_t kFnvSeed = 1469598103934665603ull;

} // namespace eil

#endif
