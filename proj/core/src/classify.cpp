#include "treepoly/classify.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "treepoly/free_trees.hpp"

namespace treepoly {

namespace {

struct Record {
    CanonicalCode code;
    Digest digest{};
    std::string payload;
};

// Single-producer, multi-consumer queue of tree chunks with a bounded backlog.
class ChunkQueue {
public:
    explicit ChunkQueue(std::size_t capacity) : capacity_(capacity) {}

    void push(std::vector<Tree> chunk)
    {
        std::unique_lock lock(mutex_);
        not_full_.wait(lock, [&] { return chunks_.size() < capacity_; });
        chunks_.push_back(std::move(chunk));
        not_empty_.notify_one();
    }

    void close()
    {
        std::lock_guard lock(mutex_);
        closed_ = true;
        not_empty_.notify_all();
    }

    std::optional<std::vector<Tree>> pop()
    {
        std::unique_lock lock(mutex_);
        not_empty_.wait(lock, [&] { return !chunks_.empty() || closed_; });
        if (chunks_.empty())
            return std::nullopt;
        auto chunk = std::move(chunks_.front());
        chunks_.pop_front();
        not_full_.notify_one();
        return chunk;
    }

private:
    std::mutex mutex_;
    std::condition_variable not_empty_, not_full_;
    std::deque<std::vector<Tree>> chunks_;
    std::size_t capacity_;
    bool closed_ = false;
};

int cap_for(bool allow_large) { return allow_large ? kLargeMaxN : kDefaultMaxN; }

void check_n(int n, bool allow_large)
{
    const int cap = cap_for(allow_large);
    if (n < 1 || n > cap)
        throw DomainError("n must be in 1.." + std::to_string(cap) + (allow_large ? "" : " (use --allow-large for up to 19)"));
}

std::vector<Record> fingerprint_all(const ClassifyOptions& o)
{
    const int jobs = std::max(1, o.jobs);
    const std::size_t chunk_size = std::max<std::size_t>(1, o.chunk_size);
    ChunkQueue queue(static_cast<std::size_t>(jobs) * 2);
    std::vector<std::vector<Record>> partial(static_cast<std::size_t>(jobs));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    {
        std::vector<std::jthread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                auto& out = partial[static_cast<std::size_t>(w)];
                try {
                    while (auto chunk = queue.pop())
                        for (const Tree& t : *chunk) {
                            Fingerprint f = fingerprint(t, o.tag, o.full_comparison);
                            out.push_back({canonical_code(t), f.digest, std::move(f.payload)});
                        }
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                    while (queue.pop()) {
                    }
                }
            });
        FreeTreeGenerator gen(o.n);
        std::vector<Tree> chunk;
        while (auto t = gen.next()) {
            chunk.push_back(std::move(*t));
            if (chunk.size() == chunk_size) {
                queue.push(std::move(chunk));
                chunk.clear();
            }
        }
        if (!chunk.empty())
            queue.push(std::move(chunk));
        queue.close();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    std::vector<Record> all;
    for (auto& p : partial)
        std::move(p.begin(), p.end(), std::back_inserter(all));
    return all;
}

// Groups records with equal invariants; every group is sorted by code.
std::vector<std::vector<CanonicalCode>> group(std::vector<Record> records, InvariantTag tag, bool full)
{
    std::vector<std::vector<CanonicalCode>> classes;
    if (full) {
        std::sort(records.begin(), records.end(), [](const Record& a, const Record& b) {
            return std::tie(a.payload, a.code) < std::tie(b.payload, b.code);
        });
        for (std::size_t i = 0; i < records.size();) {
            std::size_t j = i;
            classes.emplace_back();
            while (j < records.size() && records[j].payload == records[i].payload)
                classes.back().push_back(records[j++].code);
            i = j;
        }
        return classes;
    }
    std::sort(records.begin(), records.end(), [](const Record& a, const Record& b) {
        return std::tie(a.digest, a.code) < std::tie(b.digest, b.code);
    });
    for (std::size_t i = 0; i < records.size();) {
        std::size_t j = i;
        while (j < records.size() && records[j].digest == records[i].digest)
            ++j;
        if (j - i == 1) {
            classes.push_back({records[i].code});
        } else {
            // Equal digests: confirm by comparing the full serializations.
            std::map<std::string, std::vector<CanonicalCode>> by_payload;
            for (std::size_t k = i; k < j; ++k)
                by_payload[invariant_payload(tree_from_code(records[k].code), tag)].push_back(records[k].code);
            for (auto& [payload, codes] : by_payload)
                classes.push_back(std::move(codes));
        }
        i = j;
    }
    return classes;
}

std::filesystem::path cache_file(const std::string& dir, int n, InvariantTag tag)
{
    std::string name(to_string(tag));
    std::replace(name.begin(), name.end(), '+', '_');
    return std::filesystem::path(dir) /
           ("classify-n" + std::to_string(n) + "-" + name + "-v" + std::to_string(kCacheVersion) + ".json");
}

std::string resolve_cache_dir(const ClassifyOptions& o)
{
    if (!o.use_cache)
        return {};
    if (!o.cache_dir.empty())
        return o.cache_dir;
    const char* env = std::getenv(kCacheEnvVar);
    return env ? env : "";
}

} // namespace

std::uint64_t ClassReport::count_of_size(std::size_t size) const
{
    auto it = histogram.find(size);
    return it == histogram.end() ? 0 : it->second;
}

std::uint64_t ClassReport::trees_in_classes() const
{
    std::uint64_t s = 0;
    for (auto [size, count] : histogram)
        s += size * count;
    return s;
}

std::string ClassReport::to_json(bool include_timing) const
{
    nlohmann::ordered_json j;
    j["n"] = n;
    j["invariant"] = std::string(to_string(tag));
    j["num_trees"] = num_trees;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& cls : classes) {
        nlohmann::ordered_json c;
        c["size"] = cls.size();
        auto members = nlohmann::ordered_json::array();
        for (const auto& m : cls) {
            auto edges = nlohmann::ordered_json::array();
            for (auto [u, v] : m.tree.edges())
                edges.push_back({u, v});
            members.push_back({{"code", m.code.hex()}, {"edges", edges}});
        }
        c["members"] = members;
        arr.push_back(c);
    }
    j["classes"] = arr;
    nlohmann::ordered_json h = nlohmann::ordered_json::object();
    for (auto [size, count] : histogram)
        h[std::to_string(size)] = count;
    j["histogram"] = h;
    if (include_timing)
        j["elapsed_ms"] = elapsed_ms;
    return j.dump(2);
}

ClassReport ClassReport::from_json(const std::string& text)
{
    const auto j = nlohmann::json::parse(text);
    ClassReport r;
    r.n = j.at("n").get<int>();
    const auto tag = parse_invariant_tag(j.at("invariant").get<std::string>());
    if (!tag)
        throw DomainError("unknown invariant in report");
    r.tag = *tag;
    r.num_trees = j.at("num_trees").get<std::uint64_t>();
    for (const auto& c : j.at("classes")) {
        std::vector<ClassMember> cls;
        for (const auto& m : c.at("members")) {
            CanonicalCode code = CanonicalCode::from_hex(m.at("code").get<std::string>());
            Tree t = tree_from_code(code);
            cls.push_back({std::move(code), std::move(t)});
        }
        r.classes.push_back(std::move(cls));
    }
    for (const auto& [size, count] : j.at("histogram").items())
        r.histogram[std::stoul(size)] = count.get<std::uint64_t>();
    r.elapsed_ms = j.value("elapsed_ms", 0.0);
    return r;
}

ClassReport classify(const ClassifyOptions& options)
{
    check_n(options.n, options.allow_large);
    const auto start = std::chrono::steady_clock::now();
    const std::string cache_dir = resolve_cache_dir(options);
    if (!cache_dir.empty()) {
        const auto path = cache_file(cache_dir, options.n, options.tag);
        std::ifstream in(path);
        if (in) {
            std::stringstream ss;
            ss << in.rdbuf();
            try {
                ClassReport cached = ClassReport::from_json(ss.str());
                if (cached.n == options.n && cached.tag == options.tag &&
                    cached.num_trees == count_free_trees(options.n) && cached.trees_in_classes() == cached.num_trees) {
                    cached.from_cache = true;
                    cached.elapsed_ms =
                        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                    return cached;
                }
            } catch (const std::exception&) {
                // Unreadable cache entries are recomputed and overwritten.
            }
        }
    }

    auto classes = group(fingerprint_all(options), options.tag, options.full_comparison);
    ClassReport r;
    r.n = options.n;
    r.tag = options.tag;
    for (auto& cls : classes) {
        r.num_trees += cls.size();
        ++r.histogram[cls.size()];
        if (cls.size() < 2)
            continue;
        std::sort(cls.begin(), cls.end());
        std::vector<ClassMember> members;
        for (auto& code : cls) {
            Tree t = tree_from_code(code);
            members.push_back({std::move(code), std::move(t)});
        }
        r.classes.push_back(std::move(members));
    }
    std::sort(r.classes.begin(), r.classes.end(),
              [](const auto& a, const auto& b) { return a.front().code < b.front().code; });
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (!cache_dir.empty()) {
        std::filesystem::create_directories(cache_dir);
        std::ofstream out(cache_file(cache_dir, options.n, options.tag));
        out << r.to_json(false) << "\n";
    }
    return r;
}

std::vector<int> class_ids(int n, InvariantTag tag)
{
    std::map<std::string, int> ids;
    std::vector<int> out;
    for_each_free_tree(n, [&](const Tree& t) {
        auto [it, inserted] = ids.try_emplace(invariant_payload(t, tag), static_cast<int>(ids.size()));
        out.push_back(it->second);
    });
    return out;
}

const RefinementResult& RefinementReport::get(InvariantTag finer, InvariantTag coarser) const
{
    for (const auto& r : results)
        if (r.finer == finer && r.coarser == coarser)
            return r;
    throw DomainError("no refinement result for that pair");
}

bool RefinementReport::same_partition(InvariantTag a, InvariantTag b) const
{
    return get(a, b).refines && get(b, a).refines;
}

std::string RefinementReport::to_json() const
{
    nlohmann::ordered_json j;
    j["n"] = n;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (auto [tag, c] : class_counts)
        counts[std::string(to_string(tag))] = c;
    j["class_counts"] = counts;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json e;
        e["finer"] = std::string(to_string(r.finer));
        e["coarser"] = std::string(to_string(r.coarser));
        e["refines"] = r.refines;
        if (r.counterexample)
            e["counterexample"] = {r.counterexample->first.to_edge_list(), r.counterexample->second.to_edge_list()};
        arr.push_back(e);
    }
    j["results"] = arr;
    return j.dump(2);
}

RefinementReport compare_invariants(int n, bool allow_large)
{
    check_n(n, allow_large);
    const std::vector<InvariantTag> tags{InvariantTag::gdp, InvariantTag::hdp, InvariantTag::stp, InvariantTag::soup};
    const std::vector<Tree> trees = free_trees(n);
    std::map<InvariantTag, std::vector<int>> ids;
    RefinementReport report;
    report.n = n;
    for (auto tag : tags) {
        std::map<std::string, int> seen;
        auto& v = ids[tag];
        for (const Tree& t : trees)
            v.push_back(seen.try_emplace(invariant_payload(t, tag), static_cast<int>(seen.size())).first->second);
        report.class_counts[tag] = seen.size();
    }
    for (auto finer : tags)
        for (auto coarser : tags) {
            if (finer == coarser)
                continue;
            RefinementResult r{finer, coarser, true, std::nullopt};
            std::map<int, std::size_t> first;
            const auto& f = ids[finer];
            const auto& c = ids[coarser];
            for (std::size_t i = 0; i < trees.size() && r.refines; ++i) {
                auto [it, inserted] = first.try_emplace(f[i], i);
                if (!inserted && c[it->second] != c[i]) {
                    r.refines = false;
                    r.counterexample = std::pair(trees[it->second], trees[i]);
                }
            }
            report.results.push_back(std::move(r));
        }
    return report;
}

} // namespace treepoly
