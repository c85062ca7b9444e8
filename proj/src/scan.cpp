#include "eil/scan.hpp"

#include "eil/complex.hpp"
#include "eil/graph6.hpp"
#include "eil/invariants.hpp"
#include "eil/regularity.hpp"

#include "json.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace eil {

std::uint64_t fnv1a(std::uint64_t seed, const char* data, std::size_t size) {
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < size; ++i) {
        h ^= static_cast<unsigned char>(data[i]);
        h *= 1099511628211ull;
    }
    return h;
}

void validate_record(const InvariantRecord& rec) {
    if (!rec.error.empty()) return;
    std::string reason;
    if (rec.alpha + rec.beta != rec.n) reason = "alpha + beta != n";
    else if (rec.v > rec.beta) reason = "v > beta";
    else if (rec.v + rec.deg_h > rec.n) reason = "v + deg_h > n";
    else if (rec.deg_h > rec.alpha) reason = "deg_h > alpha";
    if (!reason.empty())
        throw std::logic_error("record invariant violated (" + reason + ") for " + rec.graph6);
}

InvariantRecord compute_record(const std::string& code, const ScanOptions& opts) {
    InvariantRecord rec;
    rec.graph6 = code;
    Graph g(1);
    try {
        g = parse_graph6(code);
    } catch (const Graph6Error& e) {
        rec.error = e.what();
        return rec;
    }
    try {
        rec.n = g.vertex_count();
        rec.m = g.edge_count();
        rec.connected = is_connected(g);
        HilbertSeries hs = hilbert_series(g);
        rec.alpha = hs.pole_order;
        rec.beta = rec.n - rec.alpha;
        rec.deg_h = hs.numerator.degree();
        rec.lead_coeff = hs.numerator.leading_coefficient();
        rec.v = v_number(g);
        if (rec.m > 0 && rec.n <= opts.reg_cap) {
            if (opts.reg_q) rec.reg_q = regularity(g, FieldSpec::rationals());
            if (opts.reg_f2) rec.reg_f2 = regularity(g, FieldSpec::prime(2));
        }
    } catch (const ResourceError& e) {
        rec.error = e.what();
        return rec;
    }
    validate_record(rec);
    return rec;
}

std::vector<InvariantRecord> scan(const std::vector<std::string>& codes, const ScanOptions& opts) {
    std::size_t chunk = opts.chunk_size > 0 ? opts.chunk_size : 4096;
    std::size_t chunks = (codes.size() + chunk - 1) / chunk;
    std::vector<std::vector<InvariantRecord>> results(chunks);

    int workers = std::max(1, opts.workers);
    if (workers == 1 || chunks <= 1) {
        std::vector<InvariantRecord> out;
        out.reserve(codes.size());
        for (const auto& code : codes) out.push_back(compute_record(code, opts));
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= chunks) return;
            try {
                std::size_t lo = i * chunk;
                std::size_t hi = std::min(codes.size(), lo + chunk);
                auto& slot = results[i];
                slot.reserve(hi - lo);
                for (std::size_t j = lo; j < hi; ++j)
                    slot.push_back(compute_record(codes[j], opts));
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    std::vector<InvariantRecord> out;
    out.reserve(codes.size());
    for (auto& slot : results)
        for (auto& rec : slot) out.push_back(std::move(rec));
    return out;
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

} // namespace

std::string record_csv_header() {
    return "graph6,n,m,connected,alpha,beta,v,deg_h,lead_coeff,reg_q,reg_f2,error";
}

std::string to_csv(const InvariantRecord& rec) {
    std::ostringstream out;
    out << csv_quote(rec.graph6) << ',' << rec.n << ',' << rec.m << ','
        << (rec.connected ? "true" : "false") << ',' << rec.alpha << ',' << rec.beta << ','
        << rec.v << ',' << rec.deg_h << ',' << to_decimal(rec.lead_coeff) << ',';
    if (rec.reg_q) out << *rec.reg_q;
    out << ',';
    if (rec.reg_f2) out << *rec.reg_f2;
    out << ',' << csv_quote(rec.error);
    return out.str();
}

std::string to_json_line(const InvariantRecord& rec) {
    nlohmann::json j;
    j["graph6"] = rec.graph6;
    j["n"] = rec.n;
    j["m"] = rec.m;
    j["connected"] = rec.connected;
    j["alpha"] = rec.alpha;
    j["beta"] = rec.beta;
    j["v"] = rec.v;
    j["deg_h"] = rec.deg_h;
    // exact decimal string: JSON numbers truncate past 53 bits
    j["lead_coeff"] = to_decimal(rec.lead_coeff);
    j["reg_q"] = rec.reg_q ? nlohmann::json(*rec.reg_q) : nlohmann::json(nullptr);
    j["reg_f2"] = rec.reg_f2 ? nlohmann::json(*rec.reg_f2) : nlohmann::json(nullptr);
    j["error"] = rec.error;
    return j.dump();
}

namespace {

struct Checkpoint {
    std::uint64_t lines = 0;
    std::uint64_t digest = kFnvSeed;
};

std::optional<Checkpoint> read_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    Checkpoint ck;
    std::string digest_hex;
    if (!(in >> ck.lines >> digest_hex)) return std::nullopt;
    ck.digest = std::stoull(digest_hex, nullptr, 16);
    return ck;
}

void write_checkpoint(const std::string& path, const Checkpoint& ck) {
    std::ofstream out(path, std::ios::trunc);
    out << ck.lines << "\n" << std::hex << ck.digest << "\n";
}

std::uint64_t digest_of_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::uint64_t h = kFnvSeed;
    char buffer[1 << 14];
    while (in.read(buffer, sizeof buffer) || in.gcount() > 0)
        h = fnv1a(h, buffer, static_cast<std::size_t>(in.gcount()));
    return h;
}

} // namespace

std::uint64_t scan_g6_file(const std::string& input_path, const std::string& output_path,
                           const ScanFileOptions& opts) {
    std::ifstream in(input_path);
    if (!in) throw std::invalid_argument("cannot open input file: " + input_path);

    std::string ckpt_path = input_path + ".ckpt";
    Checkpoint ck;
    bool resuming = false;
    if (opts.checkpoint) {
        if (auto existing = read_checkpoint(ckpt_path)) {
            if (digest_of_file(output_path) != existing->digest)
                throw std::runtime_error("checkpoint digest does not match existing output");
            ck = *existing;
            resuming = true;
        }
    }

    std::ofstream out(output_path, resuming ? std::ios::app : std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot open output file: " + output_path);

    auto emit = [&](const std::string& line) {
        std::string with_newline = line + "\n";
        out << with_newline;
        ck.digest = fnv1a(ck.digest, with_newline.data(), with_newline.size());
    };

    Graph6Reader reader(in);
    std::uint64_t consumed = 0;
    if (!resuming && opts.format == RecordFormat::Csv) emit(record_csv_header());
    while (consumed < ck.lines) {
        if (!reader.next_line()) throw std::runtime_error("checkpoint beyond end of input");
        ++consumed;
    }

    std::uint64_t total = ck.lines;
    std::size_t round = opts.chunk_size * static_cast<std::size_t>(std::max(1, opts.workers));
    while (true) {
        std::vector<std::string> codes;
        codes.reserve(round);
        while (codes.size() < round) {
            auto line = reader.next_line();
            if (!line) break;
            codes.push_back(std::move(*line));
        }
        if (codes.empty()) break;
        for (const auto& rec : scan(codes, opts))
            emit(opts.format == RecordFormat::Csv ? to_csv(rec) : to_json_line(rec));
        total += codes.size();
        if (opts.checkpoint) {
            out.flush();
            ck.lines = total;
            write_checkpoint(ckpt_path, ck);
        }
    }
    return total;
}

std::vector<InvariantRecord> find_v_gt_deg(const std::vector<InvariantRecord>& records) {
    std::vector<InvariantRecord> out;
    for (const auto& rec : records)
        if (rec.error.empty() && rec.v > rec.deg_h) out.push_back(rec);
    return out;
}

std::set<std::pair<int, int>> ScatterTable::pair_set() const {
    std::set<std::pair<int, int>> s;
    for (const auto& [pair, count] : pairs) s.insert(pair);
    return s;
}

ScatterTable scatter(int n, const std::vector<InvariantRecord>& records) {
    ScatterTable table;
    table.n = n;
    for (const auto& rec : records) {
        if (!rec.error.empty())
            throw std::invalid_argument("scatter over a record with an error: " + rec.graph6);
        if (rec.n != n || !rec.connected)
            throw std::invalid_argument("scatter source must be the connected graphs on n vertices");
        ++table.pairs[{rec.v, rec.deg_h}];
    }
    return table;
}

std::string to_csv(const ScatterTable& table) {
    std::ostringstream out;
    out << "n,v,deg_h,count\n";
    for (const auto& [pair, count] : table.pairs)
        out << table.n << ',' << pair.first << ',' << pair.second << ',' << count << "\n";
    return out.str();
}

bool TheoremReport::all_passed() const {
    for (const auto& check : checks)
        if (!check.conjecture && !check.violations.empty()) return false;
    return true;
}

TheoremReport verify_theorems(const std::vector<std::string>& codes, const ScanOptions& opts) {
    TheoremCheck ineq41{"thm41: v <= beta"};
    TheoremCheck eq41{"thm41: v = beta iff disjoint union of stars"};
    TheoremCheck ineq42{"thm42: v + deg_h <= n"};
    TheoremCheck eq42{"thm42: v + deg_h = n iff disjoint union of stars"};
    TheoremCheck conj{"appendixA: 2v + deg_h <= n + 1 (connected)", 0, 0, {}, true};

    for (const auto& rec : scan(codes, opts)) {
        if (!rec.error.empty()) continue;
        Graph g = parse_graph6(rec.graph6);

        ++ineq41.checked;
        if (rec.v > rec.beta) ineq41.violations.push_back(rec.graph6);
        ++ineq42.checked;
        if (rec.v + rec.deg_h > rec.n) ineq42.violations.push_back(rec.graph6);
        // the Appendix A population is the connected graphs; v and deg_h are
        // additive across components, so disconnected graphs overshoot
        if (rec.connected) {
            ++conj.checked;
            if (2 * rec.v + rec.deg_h > rec.n + 1) conj.violations.push_back(rec.graph6);
        } else {
            ++conj.skipped;
        }

        bool isolated_free = true;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 0) { isolated_free = false; break; }
        if (!isolated_free) {
            ++eq41.skipped;
            ++eq42.skipped;
            continue;
        }
        bool stars = is_disjoint_union_of_stars(g);
        ++eq41.checked;
        if ((rec.v == rec.beta) != stars) eq41.violations.push_back(rec.graph6);
        ++eq42.checked;
        if ((rec.v + rec.deg_h == rec.n) != stars) eq42.violations.push_back(rec.graph6);
    }

    TheoremReport report;
    report.checks = {ineq41, eq41, ineq42, eq42, conj};
    return report;
}

} // namespace eil
