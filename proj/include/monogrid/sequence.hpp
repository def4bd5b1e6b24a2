#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "monogrid/domination.hpp"
#include "monogrid/mis.hpp"

namespace monogrid {

inline constexpr const char* solver_version = "monogrid-1.0";

template <typename T>
struct Field {
    T value{};
    bool exact = false;
    double elapsed_ms = 0;
    friend bool operator==(const Field&, const Field&) = default;
};

/// Known values for one (n, d). Inexact fields hold the best bound a
/// budget-limited run reached and never feed a verdict.
struct SequenceRecord {
    std::size_t n = 0;
    std::size_t d = 0;
    std::optional<Field<std::size_t>> alpha;
    std::optional<Field<BigCount>> count;
    std::optional<Field<std::size_t>> gamma;
    std::optional<Field<std::size_t>> idom;
    std::string solver_version = monogrid::solver_version;

    bool alpha_known() const { return alpha && alpha->exact; }
    bool count_known() const { return count && count->exact; }
    double elapsed_ms_total() const;
    friend bool operator==(const SequenceRecord&, const SequenceRecord&) = default;
};

/// Which fields to compute and the budget for each.
struct RecordBudget {
    bool alpha = true;
    bool count = true;
    bool gamma = false;
    bool idom = false;
    Budget mis;
    DominationOptions domination;
};

/// Append-only JSON-lines cache, one line per (n, d, field) value. A later
/// line replaces an earlier one only if the later is exact and the earlier
/// is not. Unparsable lines or two exact lines that disagree make the cache
/// corrupt: it is then never written to again.
class SequenceCache {
public:
    explicit SequenceCache(std::filesystem::path path);

    const std::filesystem::path& path() const noexcept { return path_; }
    std::optional<SequenceRecord> lookup(std::size_t n, std::size_t d) const;
    /// Appends every field of `r` that improves on the cached state.
    void store(const SequenceRecord& r);
    std::vector<SequenceRecord> records() const;

private:
    struct Entry {
        std::string value;
        bool exact = false;
        double elapsed_ms = 0;
        std::string solver_version;
    };
    using Key = std::tuple<std::size_t, std::size_t, std::string>;

    void load();
    bool absorb(const Key& key, const Entry& e, std::size_t line_no);
    void append(const Key& key, const Entry& e);

    std::filesystem::path path_;
    std::map<Key, Entry> entries_;
    mutable std::mutex mutex_;
};

/// Computes the requested fields for G_n(d), reusing exact cached values
/// and storing new or upgraded ones.
SequenceRecord compute_record(std::size_t n, std::size_t d, const RecordBudget& budget, SequenceCache* cache = nullptr);

struct VerdictEntry {
    std::size_t d = 0;
    VerdictStatus status = VerdictStatus::inconclusive;
    std::string detail;
    /// Machine-checkable evidence for a violation (witness sets, counts).
    nlohmann::json certificate;
};

struct ConjectureVerdict {
    std::string id;
    std::size_t n = 0;
    std::size_t d_min = 0;
    std::size_t d_max = 0;
    std::vector<VerdictEntry> entries;
    VerdictStatus overall() const;
};

/// a_3(d) against the 3-periodic pattern 1, 27, 27 from d = 9, with the
/// d = 0 (mod 3) entries also matched to the explicit construction.
ConjectureVerdict check_howroyd(std::size_t d_max, const RecordBudget& budget = {}, SequenceCache* cache = nullptr);

/// a_n(d) = 1 for d = 0 (mod n), d_min <= d <= d_max.
ConjectureVerdict check_unique_mod_n(std::size_t n, std::size_t d_max, std::size_t d_min = 0,
                                     const RecordBudget& budget = {}, SequenceCache* cache = nullptr);

/// a_n(d) = a_n(d + n) for d_min <= d and d + n <= d_max.
ConjectureVerdict check_periodicity(std::size_t n, std::size_t d_max, std::size_t d_min = 0,
                                    const RecordBudget& budget = {}, SequenceCache* cache = nullptr);

/// i_n(d) = gamma_n(d) for d_min <= d <= d_max.
ConjectureVerdict check_i_equals_gamma(std::size_t n, std::size_t d_max, std::size_t d_min = 0,
                                       const DominationOptions& options = {});

struct SmallDegreeReport {
    struct Row {
        std::size_t n = 0;
        std::optional<BigCount> a0, a1, a2;
        bool squares_witness = false;
        bool holds = false;
    };
    std::vector<Row> rows;
    bool holds() const;
};

/// a_n(0) = 1, a_n(1) = n, a_n(2) = 1 with the squares as the d = 2 set.
SmallDegreeReport check_small_d_proposition(std::size_t n_max, const Budget& budget = {});

enum class ExportFormat { csv, jsonl, bfile };

/// Deterministic, sorted by (n, d). b-files need records of a single n and
/// a field name (alpha, count, gamma, idom); missing or inexact values end
/// the b-file (it lists a contiguous exact prefix).
std::string export_records(std::vector<SequenceRecord> records, ExportFormat format, const std::string& field = "count");

nlohmann::json to_json(const SequenceRecord& r);
SequenceRecord record_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ConjectureVerdict& v);

} // namespace monogrid
