#include "monogrid/sequence.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "monogrid/closed_forms.hpp"
#include "monogrid/errors.hpp"

namespace monogrid {

namespace {

const char* const field_names[] = {"alpha", "count", "gamma", "idom"};

double to_ms(std::chrono::nanoseconds ns)
{
    return std::chrono::duration<double, std::milli>(ns).count();
}

bool is_decimal(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::size_t parse_size(const std::string& s)
{
    if (!is_decimal(s))
        throw format_error("not a non-negative integer: '" + s + "'");
    return static_cast<std::size_t>(std::stoull(s));
}

BigCount parse_big(const std::string& s)
{
    if (!is_decimal(s))
        throw format_error("not a non-negative integer: '" + s + "'");
    return BigCount(s);
}

template <typename T>
std::string value_string(const T& v)
{
    if constexpr (std::is_same_v<T, BigCount>)
        return to_decimal(v);
    else
        return std::to_string(v);
}

template <typename T>
nlohmann::json field_json(const std::optional<Field<T>>& f)
{
    if (!f)
        return nullptr;
    nlohmann::json j;
    if constexpr (std::is_same_v<T, BigCount>)
        j["value"] = to_decimal(f->value);
    else
        j["value"] = f->value;
    j["exact"] = f->exact;
    j["elapsed_ms"] = f->elapsed_ms;
    return j;
}

template <typename T>
std::optional<Field<T>> field_from_json(const nlohmann::json& j)
{
    if (j.is_null())
        return std::nullopt;
    Field<T> f;
    if constexpr (std::is_same_v<T, BigCount>)
        f.value = parse_big(j.at("value").get<std::string>());
    else
        f.value = j.at("value").get<T>();
    f.exact = j.at("exact").get<bool>();
    f.elapsed_ms = j.at("elapsed_ms").get<double>();
    return f;
}

/// Keeps the better of two values for the same field: exact beats inexact,
/// otherwise the existing one stays.
template <typename T>
void merge(std::optional<Field<T>>& into, const std::optional<Field<T>>& from)
{
    if (from && (!into || (from->exact && !into->exact)))
        into = from;
}

} // namespace

double SequenceRecord::elapsed_ms_total() const
{
    double t = 0;
    if (alpha)
        t += alpha->elapsed_ms;
    if (count)
        t += count->elapsed_ms;
    if (gamma)
        t += gamma->elapsed_ms;
    if (idom)
        t += idom->elapsed_ms;
    return t;
}

SequenceCache::SequenceCache(std::filesystem::path path) : path_(std::move(path))
{
    load();
}

void SequenceCache::load()
{
    std::ifstream in(path_);
    if (!in)
        return;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        const std::string where = path_.string() + ":" + std::to_string(line_no);
        Key key;
        Entry e;
        try {
            const auto j = nlohmann::json::parse(line);
            key = {j.at("n").get<std::size_t>(), j.at("d").get<std::size_t>(), j.at("field").get<std::string>()};
            e.value = j.at("value").get<std::string>();
            e.exact = j.at("exact").get<bool>();
            e.elapsed_ms = j.at("elapsed_ms").get<double>();
            e.solver_version = j.at("solver_version").get<std::string>();
        } catch (const nlohmann::json::exception& ex) {
            throw cache_error("corrupt cache line " + where + ": " + ex.what());
        }
        const auto& field = std::get<2>(key);
        if (std::find(std::begin(field_names), std::end(field_names), field) == std::end(field_names))
            throw cache_error("corrupt cache line " + where + ": unknown field '" + field + "'");
        if (!is_decimal(e.value))
            throw cache_error("corrupt cache line " + where + ": bad value '" + e.value + "'");
        absorb(key, e, line_no);
    }
}

bool SequenceCache::absorb(const Key& key, const Entry& e, std::size_t line_no)
{
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, e);
        return true;
    }
    Entry& old = it->second;
    if (old.exact && e.exact) {
        if (old.value != e.value) {
            const auto& [n, d, field] = key;
            std::string msg = "conflicting exact " + field + " for n=" + std::to_string(n) + " d=" +
                              std::to_string(d) + ": " + old.value + " vs " + e.value;
            if (line_no > 0)
                msg += " (" + path_.string() + ":" + std::to_string(line_no) + ")";
            throw cache_error(msg);
        }
        return false;
    }
    if (e.exact && !old.exact) {
        old = e;
        return true;
    }
    return false;
}

void SequenceCache::append(const Key& key, const Entry& e)
{
    const auto& [n, d, field] = key;
    nlohmann::json j;
    j["n"] = n;
    j["d"] = d;
    j["field"] = field;
    j["value"] = e.value;
    j["exact"] = e.exact;
    j["elapsed_ms"] = e.elapsed_ms;
    j["solver_version"] = e.solver_version;
    if (path_.has_parent_path())
        std::filesystem::create_directories(path_.parent_path());
    std::ofstream out(path_, std::ios::app);
    if (!out)
        throw cache_error("cannot append to cache " + path_.string());
    out << j.dump() << '\n';
    out.flush();
    if (!out)
        throw cache_error("write to cache " + path_.string() + " failed");
}

std::optional<SequenceRecord> SequenceCache::lookup(std::size_t n, std::size_t d) const
{
    for (const auto& r : records())
        if (r.n == n && r.d == d)
            return r;
    return std::nullopt;
}

void SequenceCache::store(const SequenceRecord& r)
{
    std::lock_guard lock(mutex_);
    auto put = [&](const char* field, const auto& f) {
        if (!f)
            return;
        const Key key{r.n, r.d, field};
        const Entry e{value_string(f->value), f->exact, f->elapsed_ms, r.solver_version};
        if (absorb(key, e, 0))
            append(key, e);
    };
    put("alpha", r.alpha);
    put("count", r.count);
    put("gamma", r.gamma);
    put("idom", r.idom);
}

std::vector<SequenceRecord> SequenceCache::records() const
{
    std::lock_guard lock(mutex_);
    std::map<std::pair<std::size_t, std::size_t>, SequenceRecord> by_nd;
    for (const auto& [key, e] : entries_) {
        const auto& [n, d, field] = key;
        auto& r = by_nd[{n, d}];
        r.n = n;
        r.d = d;
        r.solver_version = e.solver_version;
        if (field == "count") {
            r.count = Field<BigCount>{parse_big(e.value), e.exact, e.elapsed_ms};
        } else {
            Field<std::size_t> f{parse_size(e.value), e.exact, e.elapsed_ms};
            if (field == "alpha")
                r.alpha = f;
            else if (field == "gamma")
                r.gamma = f;
            else
                r.idom = f;
        }
    }
    std::vector<SequenceRecord> out;
    for (auto& [k, r] : by_nd)
        out.push_back(std::move(r));
    return out;
}

SequenceRecord compute_record(std::size_t n, std::size_t d, const RecordBudget& budget, SequenceCache* cache)
{
    SequenceRecord rec;
    rec.n = n;
    rec.d = d;
    if (cache) {
        if (auto hit = cache->lookup(n, d)) {
            rec.alpha = hit->alpha;
            rec.count = hit->count;
            rec.gamma = hit->gamma;
            rec.idom = hit->idom;
        }
    }
    const bool need_count = budget.count && !rec.count_known();
    const bool need_alpha = budget.alpha && !rec.alpha_known() && !need_count;
    const bool need_gamma = budget.gamma && !(rec.gamma && rec.gamma->exact);
    const bool need_idom = budget.idom && !(rec.idom && rec.idom->exact);
    if (!(need_count || need_alpha || need_gamma || need_idom))
        return rec;

    const Graph g = build_graph(n, d);
    if (need_count || need_alpha) {
        const auto rep = need_count ? count_maximum_independent_sets(g, budget.mis) : max_independent_set(g, budget.mis);
        const double ms = to_ms(rep.elapsed);
        // one run settles both numbers; its time is booked on count
        const Field<std::size_t> a{rep.objective, rep.objective_exact, need_count ? 0.0 : ms};
        if (!rec.alpha_known())
            rec.alpha = a;
        if (rep.count)
            rec.count = Field<BigCount>{*rep.count, true, ms};
    }
    const bool too_large = g.size() > budget.domination.vertex_limit && !budget.domination.allow_large;
    if (need_gamma && !too_large) {
        const auto rep = min_dominating_set(g, budget.domination);
        const auto& obj = *rep.gamma;
        merge(rec.gamma, std::optional<Field<std::size_t>>(Field<std::size_t>{obj.value, obj.exact, to_ms(obj.elapsed)}));
    }
    if (need_idom && !too_large) {
        const auto rep = min_independent_dominating_set(g, budget.domination);
        const auto& obj = *rep.idom;
        merge(rec.idom, std::optional<Field<std::size_t>>(Field<std::size_t>{obj.value, obj.exact, to_ms(obj.elapsed)}));
    }
    if (cache)
        cache->store(rec);
    return rec;
}

VerdictStatus ConjectureVerdict::overall() const
{
    if (entries.empty())
        return VerdictStatus::inconclusive;
    bool all = true;
    for (const auto& e : entries) {
        if (e.status == VerdictStatus::violated)
            return VerdictStatus::violated;
        all = all && e.status == VerdictStatus::consistent;
    }
    return all ? VerdictStatus::consistent : VerdictStatus::inconclusive;
}

namespace {

RecordBudget counting(const RecordBudget& b)
{
    RecordBudget out = b;
    out.alpha = true;
    out.count = true;
    out.gamma = false;
    out.idom = false;
    return out;
}

/// Up to `cap` distinct maximum independent sets, as evidence.
nlohmann::json sets_certificate(const Graph& g, std::size_t cap, const Budget& budget)
{
    const auto rep = enumerate_maximum_independent_sets(g, cap, budget);
    nlohmann::json j;
    j["graph"] = g.tag();
    j["alpha"] = rep.objective;
    j["count"] = rep.count ? nlohmann::json(to_decimal(*rep.count)) : nlohmann::json(nullptr);
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& s : rep.witnesses)
        sets.push_back(vertex_set_json(g, s));
    j["sets"] = std::move(sets);
    return j;
}

VerdictEntry inconclusive_entry(const SequenceRecord& r)
{
    VerdictEntry e;
    e.d = r.d;
    e.status = VerdictStatus::inconclusive;
    e.detail = "count not settled within budget";
    return e;
}

} // namespace

ConjectureVerdict check_howroyd(std::size_t d_max, const RecordBudget& budget, SequenceCache* cache)
{
    ConjectureVerdict v{"howroyd", 3, 9, d_max, {}};
    const RecordBudget b = counting(budget);
    for (std::size_t d = 9; d <= d_max; ++d) {
        const auto rec = compute_record(3, d, b, cache);
        if (!rec.count_known()) {
            v.entries.push_back(inconclusive_entry(rec));
            continue;
        }
        const BigCount expected = d % 3 == 0 ? 1 : 27;
        VerdictEntry e;
        e.d = d;
        const BigCount& got = rec.count->value;
        if (got != expected) {
            const Graph g = build_graph(3, d);
            e.status = VerdictStatus::violated;
            e.detail = "a_3(" + std::to_string(d) + ") = " + to_decimal(got) + ", expected " + to_decimal(expected);
            e.certificate = sets_certificate(g, std::min<BigCount>(got, expected + 1).convert_to<std::size_t>(),
                                             budget.mis);
        } else if (d % 3 == 0) {
            // the single optimum must be the explicit construction
            const Graph g = build_graph(3, d);
            const auto rep = max_independent_set(g, budget.mis);
            if (!rep.exact) {
                e.status = VerdictStatus::inconclusive;
                e.detail = "witness not settled within budget";
            } else {
                bool matches = false;
                std::string why;
                try {
                    matches = construct_unique_mis_3(g) == rep.witnesses.front();
                } catch (const error& ex) {
                    why = ex.what();
                }
                e.status = matches ? VerdictStatus::consistent : VerdictStatus::violated;
                if (!matches) {
                    e.detail = "unique optimum differs from the construction" + (why.empty() ? "" : ": " + why);
                    e.certificate["graph"] = g.tag();
                    e.certificate["solver_set"] = vertex_set_json(g, rep.witnesses.front());
                    nlohmann::json cons = nlohmann::json::array();
                    for (const auto& m : unique_mis_3_monomials(d))
                        cons.push_back(m.exponents());
                    e.certificate["construction"] = std::move(cons);
                }
            }
        } else {
            e.status = VerdictStatus::consistent;
        }
        if (e.status == VerdictStatus::consistent)
            e.detail = "a_3(" + std::to_string(d) + ") = " + to_decimal(got);
        v.entries.push_back(std::move(e));
    }
    return v;
}

ConjectureVerdict check_unique_mod_n(std::size_t n, std::size_t d_max, std::size_t d_min, const RecordBudget& budget,
                                     SequenceCache* cache)
{
    if (n == 0)
        throw domain_error("n must be at least 1");
    ConjectureVerdict v{"unique-mod-n", n, d_min, d_max, {}};
    const RecordBudget b = counting(budget);
    for (std::size_t d = d_min; d <= d_max; ++d) {
        if (d % n != 0)
            continue;
        const auto rec = compute_record(n, d, b, cache);
        if (!rec.count_known()) {
            v.entries.push_back(inconclusive_entry(rec));
            continue;
        }
        VerdictEntry e;
        e.d = d;
        const BigCount& got = rec.count->value;
        e.detail = "a_" + std::to_string(n) + "(" + std::to_string(d) + ") = " + to_decimal(got);
        if (got == 1) {
            e.status = VerdictStatus::consistent;
        } else {
            e.status = VerdictStatus::violated;
            e.certificate = sets_certificate(build_graph(n, d), 2, budget.mis);
        }
        v.entries.push_back(std::move(e));
    }
    return v;
}

ConjectureVerdict check_periodicity(std::size_t n, std::size_t d_max, std::size_t d_min, const RecordBudget& budget,
                                    SequenceCache* cache)
{
    if (n == 0)
        throw domain_error("n must be at least 1");
    ConjectureVerdict v{"periodicity", n, d_min, d_max, {}};
    const RecordBudget b = counting(budget);
    std::map<std::size_t, SequenceRecord> recs;
    auto get = [&](std::size_t d) -> const SequenceRecord& {
        auto it = recs.find(d);
        if (it == recs.end())
            it = recs.emplace(d, compute_record(n, d, b, cache)).first;
        return it->second;
    };
    for (std::size_t d = d_min; d + n <= d_max; ++d) {
        const auto& lo = get(d);
        const auto& hi = get(d + n);
        VerdictEntry e;
        e.d = d;
        if (!lo.count_known() || !hi.count_known()) {
            e.status = VerdictStatus::inconclusive;
            e.detail = "count not settled within budget";
            v.entries.push_back(std::move(e));
            continue;
        }
        const std::string a = to_decimal(lo.count->value);
        const std::string c = to_decimal(hi.count->value);
        e.detail = "a(" + std::to_string(d) + ") = " + a + ", a(" + std::to_string(d + n) + ") = " + c;
        if (lo.count->value == hi.count->value) {
            e.status = VerdictStatus::consistent;
        } else {
            e.status = VerdictStatus::violated;
            e.certificate["n"] = n;
            e.certificate["d"] = d;
            e.certificate["a_d"] = a;
            e.certificate["a_d_plus_n"] = c;
        }
        v.entries.push_back(std::move(e));
    }
    return v;
}

ConjectureVerdict check_i_equals_gamma(std::size_t n, std::size_t d_max, std::size_t d_min,
                                       const DominationOptions& options)
{
    ConjectureVerdict v{"i-equals-gamma", n, d_min, d_max, {}};
    for (std::size_t d = d_min; d <= d_max; ++d) {
        const auto rep = check_igamma_conjecture(n, d, options);
        VerdictEntry e;
        e.d = d;
        e.status = rep.status;
        e.detail = rep.detail;
        if (rep.report.gamma && rep.report.idom && rep.status == VerdictStatus::consistent)
            e.detail = "gamma = i = " + std::to_string(rep.report.gamma->value);
        if (rep.status == VerdictStatus::violated)
            e.certificate = to_json(build_graph(n, d), rep.report);
        v.entries.push_back(std::move(e));
    }
    return v;
}

bool SmallDegreeReport::holds() const
{
    return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.holds; });
}

SmallDegreeReport check_small_d_proposition(std::size_t n_max, const Budget& budget)
{
    SmallDegreeReport out;
    for (std::size_t n = 1; n <= n_max; ++n) {
        SmallDegreeReport::Row row;
        row.n = n;
        std::optional<BigCount>* slots[] = {&row.a0, &row.a1, &row.a2};
        for (std::size_t d = 0; d <= 2; ++d) {
            const Graph g = build_graph(n, d);
            const auto rep = count_maximum_independent_sets(g, budget);
            if (rep.count)
                *slots[d] = *rep.count;
            if (d == 2 && rep.exact) {
                std::vector<ExponentVector> squares;
                for (std::size_t i = 0; i < n; ++i) {
                    std::vector<std::uint32_t> e(n, 0);
                    e[i] = 2;
                    squares.emplace_back(std::move(e));
                }
                row.squares_witness = VertexSet::of_monomials(g, squares) == rep.witnesses.front();
            }
        }
        row.holds = row.a0 == BigCount(1) && row.a1 == BigCount(n) && row.a2 == BigCount(1) && row.squares_witness;
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::string export_records(std::vector<SequenceRecord> records, ExportFormat format, const std::string& field)
{
    std::sort(records.begin(), records.end(),
              [](const SequenceRecord& a, const SequenceRecord& b) { return std::tie(a.n, a.d) < std::tie(b.n, b.d); });
    std::ostringstream out;
    switch (format) {
    case ExportFormat::jsonl:
        for (const auto& r : records)
            out << to_json(r).dump() << '\n';
        break;
    case ExportFormat::csv: {
        out << "n,d,alpha,count,gamma,idom,alpha_exact,count_exact,gamma_exact,idom_exact,elapsed_ms_total,"
               "solver_version\n";
        auto val = [](const auto& f) { return f ? value_string(f->value) : std::string(); };
        auto ex = [](const auto& f) { return f ? std::string(f->exact ? "true" : "false") : std::string(); };
        for (const auto& r : records) {
            char ms[32];
            std::snprintf(ms, sizeof ms, "%.3f", r.elapsed_ms_total());
            out << r.n << ',' << r.d << ',' << val(r.alpha) << ',' << val(r.count) << ',' << val(r.gamma) << ','
                << val(r.idom) << ',' << ex(r.alpha) << ',' << ex(r.count) << ',' << ex(r.gamma) << ',' << ex(r.idom)
                << ',' << ms << ',' << r.solver_version << '\n';
        }
        break;
    }
    case ExportFormat::bfile: {
        if (std::find(std::begin(field_names), std::end(field_names), field) == std::end(field_names))
            throw usage_error("unknown field '" + field + "' (expected alpha, count, gamma or idom)");
        if (records.empty())
            break;
        const std::size_t n = records.front().n;
        for (const auto& r : records)
            if (r.n != n)
                throw usage_error("a b-file holds one sequence; records mix n = " + std::to_string(n) + " and n = " +
                                  std::to_string(r.n));
        std::size_t next = records.front().d;
        for (const auto& r : records) {
            std::optional<std::string> value;
            auto take = [&](const auto& f) {
                if (f && f->exact)
                    value = value_string(f->value);
            };
            if (field == "alpha")
                take(r.alpha);
            else if (field == "count")
                take(r.count);
            else if (field == "gamma")
                take(r.gamma);
            else
                take(r.idom);
            if (r.d != next || !value)
                break;
            out << r.d << ' ' << *value << '\n';
            ++next;
        }
        break;
    }
    }
    return out.str();
}

nlohmann::json to_json(const SequenceRecord& r)
{
    nlohmann::json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["alpha"] = field_json(r.alpha);
    j["count"] = field_json(r.count);
    j["gamma"] = field_json(r.gamma);
    j["idom"] = field_json(r.idom);
    j["solver_version"] = r.solver_version;
    return j;
}

SequenceRecord record_from_json(const nlohmann::json& j)
{
    try {
        SequenceRecord r;
        r.n = j.at("n").get<std::size_t>();
        r.d = j.at("d").get<std::size_t>();
        r.alpha = field_from_json<std::size_t>(j.at("alpha"));
        r.count = field_from_json<BigCount>(j.at("count"));
        r.gamma = field_from_json<std::size_t>(j.at("gamma"));
        r.idom = field_from_json<std::size_t>(j.at("idom"));
        r.solver_version = j.at("solver_version").get<std::string>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw format_error(std::string("bad sequence record: ") + e.what());
    }
}

nlohmann::json to_json(const ConjectureVerdict& v)
{
    nlohmann::json j;
    j["id"] = v.id;
    j["n"] = v.n;
    j["d_min"] = v.d_min;
    j["d_max"] = v.d_max;
    j["overall"] = to_string(v.overall());
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : v.entries) {
        nlohmann::json x;
        x["d"] = e.d;
        x["status"] = to_string(e.status);
        x["detail"] = e.detail;
        if (!e.certificate.is_null())
            x["certificate"] = e.certificate;
        entries.push_back(std::move(x));
    }
    j["entries"] = std::move(entries);
    return j;
}

} // namespace monogrid
