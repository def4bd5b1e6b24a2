#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "monogrid/errors.hpp"
#include "monogrid/sequence.hpp"

using namespace monogrid;
namespace fs = std::filesystem;

namespace {

/// Fresh file path under the system temp directory, removed on exit.
struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& name)
        : path(fs::temp_directory_path() / ("monogrid_test_" + std::to_string(::getpid()) + "_" + name))
    {
        fs::remove(path);
    }
    ~TempFile() { fs::remove(path); }
    std::string read() const
    {
        std::ifstream in(path);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }
};

RecordBudget counts_only()
{
    return RecordBudget{};
}

} // namespace

TEST_CASE("records")
{
    const auto r36 = compute_record(3, 6, counts_only());
    REQUIRE(r36.alpha_known());
    REQUIRE(r36.count_known());
    CHECK(r36.alpha->value == 10);
    CHECK(r36.count->value == 2);
    CHECK_FALSE(r36.gamma.has_value());

    CHECK(compute_record(4, 5, counts_only()).count->value == 944);
    for (std::size_t d = 0; d <= 8; ++d) {
        const auto r = compute_record(1, d, counts_only());
        CHECK(r.alpha->value == 1);
        CHECK(r.count->value == 1);
    }

    RecordBudget dom;
    dom.gamma = dom.idom = true;
    const auto r34 = compute_record(3, 4, dom);
    CHECK(r34.gamma->value == 3);
    CHECK(r34.idom->value == 3);
    CHECK(r34.gamma->exact);
}

TEST_CASE("present counts come with alpha, inexact fields are flagged")
{
    RecordBudget tight;
    tight.mis.node_limit = 30;
    const auto r = compute_record(4, 7, tight);
    CHECK_FALSE(r.count_known());
    REQUIRE(r.alpha.has_value());
    CHECK_FALSE(r.count.has_value());
    if (r.count)
        CHECK(r.alpha.has_value());
}

TEST_CASE("cache round trip")
{
    TempFile f("roundtrip.jsonl");
    std::vector<SequenceRecord> computed;
    {
        SequenceCache cache(f.path);
        RecordBudget b;
        b.gamma = true;
        for (std::size_t d = 0; d <= 6; ++d)
            computed.push_back(compute_record(3, d, b, &cache));
    }
    SequenceCache again(f.path);
    const auto loaded = again.records();
    REQUIRE(loaded.size() == computed.size());
    for (std::size_t i = 0; i < loaded.size(); ++i)
        CHECK(loaded[i] == computed[i]);

    // cached exact values are reused, so nothing new is appended
    const auto before = f.read();
    const auto reused = compute_record(3, 6, counts_only(), &again);
    CHECK(reused == computed[6]);
    CHECK(f.read() == before);

    // json form round-trips as well
    for (const auto& r : computed)
        CHECK(record_from_json(to_json(r)) == r);
}

TEST_CASE("exact entries replace inexact ones, never the reverse")
{
    TempFile f("upgrade.jsonl");
    SequenceCache cache(f.path);
    SequenceRecord rough;
    rough.n = 4;
    rough.d = 7;
    rough.alpha = Field<std::size_t>{29, false, 1.0};
    cache.store(rough);
    CHECK(cache.lookup(4, 7)->alpha->value == 29);

    SequenceRecord exact = rough;
    exact.alpha = Field<std::size_t>{30, true, 2.0};
    cache.store(exact);
    CHECK(cache.lookup(4, 7)->alpha->value == 30);

    cache.store(rough);
    CHECK(cache.lookup(4, 7)->alpha->value == 30);
    CHECK(cache.lookup(4, 7)->alpha->exact);

    SequenceCache reread(f.path);
    CHECK(reread.lookup(4, 7)->alpha->value == 30);

    SequenceRecord conflict = exact;
    conflict.alpha->value = 31;
    CHECK_THROWS_AS(cache.store(conflict), cache_error);
}

TEST_CASE("corrupt caches are refused and left untouched")
{
    TempFile f("corrupt.jsonl");
    {
        std::ofstream out(f.path);
        out << R"({"n":3,"d":2,"field":"alpha","value":"3","exact":true,"elapsed_ms":0.1,"solver_version":"x"})" << '\n';
        out << "{not json\n";
    }
    const auto before = f.read();
    CHECK_THROWS_AS(SequenceCache{f.path}, cache_error);
    CHECK(f.read() == before);

    TempFile g("conflict.jsonl");
    {
        std::ofstream out(g.path);
        out << R"({"n":3,"d":2,"field":"alpha","value":"3","exact":true,"elapsed_ms":0.1,"solver_version":"x"})" << '\n';
        out << R"({"n":3,"d":2,"field":"alpha","value":"4","exact":true,"elapsed_ms":0.1,"solver_version":"x"})" << '\n';
    }
    CHECK_THROWS_AS(SequenceCache{g.path}, cache_error);

    TempFile h("badvalue.jsonl");
    {
        std::ofstream out(h.path);
        out << R"({"n":3,"d":2,"field":"alpha","value":"-3","exact":true,"elapsed_ms":0.1,"solver_version":"x"})" << '\n';
    }
    CHECK_THROWS_AS(SequenceCache{h.path}, cache_error);
}

TEST_CASE("recomputation is reproducible")
{
    const auto a = compute_record(4, 6, counts_only());
    const auto b = compute_record(4, 6, counts_only());
    CHECK(a.alpha->value == b.alpha->value);
    CHECK(a.count->value == b.count->value);
}

TEST_CASE("periodic pattern on triangular grids")
{
    const auto v = check_howroyd(12);
    REQUIRE(v.entries.size() == 4);
    for (const auto& e : v.entries)
        CHECK(e.status == VerdictStatus::consistent);
    CHECK(v.overall() == VerdictStatus::consistent);
    CHECK(check_howroyd(8).overall() == VerdictStatus::inconclusive);

    // an exhausted budget is inconclusive, never evidence
    RecordBudget tight;
    tight.mis.node_limit = 5;
    const auto starved = check_howroyd(10, tight);
    for (const auto& e : starved.entries)
        CHECK(e.status == VerdictStatus::inconclusive);
}

TEST_CASE("uniqueness at multiples of n")
{
    const auto v4 = check_unique_mod_n(4, 6);
    REQUIRE(v4.entries.size() == 2);
    CHECK(v4.overall() == VerdictStatus::consistent);
    const auto v2 = check_unique_mod_n(2, 10);
    CHECK(v2.entries.size() == 6);
    CHECK(v2.overall() == VerdictStatus::consistent);
    CHECK(check_unique_mod_n(3, 12, 3).entries.size() == 4);

    // at d = 6 the triangle has two optima; the certificate lists both
    const auto v3 = check_unique_mod_n(3, 6, 6);
    REQUIRE(v3.entries.size() == 1);
    CHECK(v3.entries[0].status == VerdictStatus::violated);
    CHECK(v3.entries[0].certificate["sets"].size() == 2);
    CHECK(v3.entries[0].certificate["sets"][0] != v3.entries[0].certificate["sets"][1]);
}

TEST_CASE("periodicity on paths is violated")
{
    // G_2(d) is a path on d + 1 vertices: a_2(2k) = 1 and a_2(2k+1) = k + 2
    const auto v = check_periodicity(2, 10);
    REQUIRE(v.entries.size() == 9);
    for (const auto& e : v.entries) {
        if (e.d % 2 == 0) {
            CHECK(e.status == VerdictStatus::consistent);
        } else {
            CHECK(e.status == VerdictStatus::violated);
            CHECK(e.certificate["a_d"] == std::to_string(e.d / 2 + 2));
            CHECK(e.certificate["a_d_plus_n"] == std::to_string(e.d / 2 + 3));
        }
    }
    CHECK(v.overall() == VerdictStatus::violated);
    CHECK(check_periodicity(1, 8).overall() == VerdictStatus::consistent);
    CHECK(check_periodicity(3, 12, 9).overall() == VerdictStatus::consistent);
}

TEST_CASE("i = gamma verdicts")
{
    const auto v = check_i_equals_gamma(3, 10);
    CHECK(v.entries.size() == 11);
    CHECK(v.overall() == VerdictStatus::consistent);
    CHECK(check_i_equals_gamma(4, 4).overall() == VerdictStatus::consistent);
}

TEST_CASE("small degree counts")
{
    const auto r = check_small_d_proposition(6);
    CHECK(r.holds());
    REQUIRE(r.rows.size() == 6);
    CHECK(r.rows[4].a1 == BigCount(5));
    CHECK(r.rows[4].squares_witness);
    CHECK(r.rows[0].a0 == BigCount(1));
    CHECK(r.rows[0].a1 == BigCount(1));
    CHECK(r.rows[0].a2 == BigCount(1));
    CHECK(r.rows[5].a1 == BigCount(6));
}

TEST_CASE("export formats")
{
    std::vector<SequenceRecord> a4;
    for (std::size_t d = 7; d-- > 0;)
        a4.push_back(compute_record(4, d, counts_only()));
    CHECK(export_records(a4, ExportFormat::bfile) == "0 1\n1 4\n2 1\n3 80\n4 1\n5 944\n6 1\n");
    CHECK(export_records(a4, ExportFormat::bfile, "alpha") == "0 1\n1 1\n2 4\n3 5\n4 11\n5 14\n6 24\n");

    const std::string header =
        "n,d,alpha,count,gamma,idom,alpha_exact,count_exact,gamma_exact,idom_exact,elapsed_ms_total,solver_version\n";
    CHECK(export_records({}, ExportFormat::csv) == header);
    CHECK(export_records({}, ExportFormat::jsonl).empty());

    const auto csv = export_records(a4, ExportFormat::csv);
    CHECK(csv.rfind(header, 0) == 0);
    CHECK(csv.find("\n4,0,1,1,,,true,true,,,") != std::string::npos);
    CHECK(csv.find("\n4,5,14,944,,,true,true,,,") != std::string::npos);

    std::vector<SequenceRecord> a3;
    for (std::size_t d = 0; d <= 11; ++d)
        a3.push_back(compute_record(3, d, counts_only()));
    const auto jsonl = export_records(a3, ExportFormat::jsonl);
    std::istringstream lines(jsonl);
    std::size_t count = 0;
    for (std::string line; std::getline(lines, line); ++count) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j["d"] == count);
        CHECK(j["count"]["exact"] == true);
        CHECK(record_from_json(j) == a3[count]);
    }
    CHECK(count == 12);

    auto mixed = a4;
    mixed.push_back(a3[0]);
    CHECK_THROWS_AS(export_records(mixed, ExportFormat::bfile), usage_error);
    CHECK_THROWS_AS(export_records(a4, ExportFormat::bfile, "size"), usage_error);

    // a gap or an inexact value ends the b-file
    auto gap = a4;
    gap.erase(gap.begin() + 2);
    CHECK(export_records(gap, ExportFormat::bfile) == "0 1\n1 4\n2 1\n3 80\n");
    auto rough = a4;
    for (auto& r : rough)
        if (r.d == 3)
            r.count->exact = false;
    CHECK(export_records(rough, ExportFormat::bfile) == "0 1\n1 4\n2 1\n");
}

TEST_CASE("verdict json")
{
    const auto j = to_json(check_unique_mod_n(3, 6, 6));
    CHECK(j["overall"] == "violated");
    CHECK(j["entries"][0].contains("certificate"));
}
