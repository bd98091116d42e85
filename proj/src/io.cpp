#include "wdmst/io.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace wdmst::io {

namespace {

using json = nlohmann::json;

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (i < line.size()) {
        while (i < line.size() && blank(line[i])) ++i;
        const std::size_t start = i;
        while (i < line.size() && !blank(line[i])) ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        const std::string_view line = text.substr(0, nl);
        fn(++line_no, line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
}

[[noreturn]] void syntax_error(std::size_t line_no, const std::string& what) {
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": " + what);
}

template <typename T>
T parse_integer(std::string_view field, std::size_t line_no, const char* what) {
    T value{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        syntax_error(line_no, std::string("invalid ") + what + " '" + std::string(field) + "'");
    return value;
}

double parse_real(std::string_view field, std::size_t line_no, const char* what) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        syntax_error(line_no, std::string("invalid ") + what + " '" + std::string(field) + "'");
    return value;
}

json number_or_inf(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    return value;
}

double read_number_or_inf(const json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return kInfinity;
        if (s == "-inf") return -kInfinity;
        throw Error(ErrorCode::SyntaxError, "plan: unexpected string value '" + s + "'");
    }
    return j.get<double>();
}

json frozen_to_json(const FrozenValues& values) {
    json out = json::object();
    for (const auto& [id, value] : values) out[std::to_string(id)] = value;
    return out;
}

FrozenValues frozen_from_json(const json& j) {
    FrozenValues out;
    for (const auto& [key, value] : j.items()) {
        EdgeId id{};
        auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), id);
        if (ec != std::errc{} || ptr != key.data() + key.size())
            throw Error(ErrorCode::SyntaxError, "plan: invalid edge id key '" + key + "'");
        out.emplace(id, value.get<double>());
    }
    return out;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    auto [ptr, ec] = std::to_chars(buf, buf + 16, v, 16);
    std::string s(buf, ptr);
    return std::string(16 - s.size(), '0') + s;
}

}  // namespace

WeaklyDynamicGraph parse_graph(std::string_view text) {
    bool have_header = false;
    std::size_t n = 0;
    std::size_t declared_edges = 0;
    std::size_t header_line = 0;
    std::vector<EdgeSpec> specs;

    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        const auto f = split_fields(line);
        if (f.empty() || f[0] == "c") return;
        if (f[0] == "p") {
            if (have_header) syntax_error(line_no, "duplicate header");
            if (f.size() != 4 || f[1] != "wdg") syntax_error(line_no, "header must be 'p wdg <n> <num_edges>'");
            n = parse_integer<std::size_t>(f[2], line_no, "vertex count");
            declared_edges = parse_integer<std::size_t>(f[3], line_no, "edge count");
            if (n == 0) syntax_error(line_no, "vertex count must be at least 1");
            have_header = true;
            header_line = line_no;
            return;
        }
        if (f[0] != "e" && f[0] != "u") syntax_error(line_no, "unknown line type '" + std::string(f[0]) + "'");
        if (!have_header) syntax_error(line_no, "edge line before header");
        if (f.size() != 4) syntax_error(line_no, "edge line must be '<e|u> <u> <v> <weight>'");
        EdgeSpec s;
        s.u = parse_integer<VertexId>(f[1], line_no, "vertex");
        s.v = parse_integer<VertexId>(f[2], line_no, "vertex");
        s.weight = parse_real(f[3], line_no, "weight");
        s.kind = f[0] == "u" ? EdgeKind::Unstable : EdgeKind::Stable;
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (s.u >= n || s.v >= n) throw Error(ErrorCode::VertexOutOfRange, where + "vertex id out of range");
        if (s.u == s.v) throw Error(ErrorCode::SelfLoop, where + "self-loop at vertex " + std::to_string(s.u));
        if (!std::isfinite(s.weight)) throw Error(ErrorCode::NonFiniteWeight, where + "weight is not finite");
        specs.push_back(s);
    });

    if (!have_header) throw Error(ErrorCode::SyntaxError, "missing 'p wdg' header");
    if (specs.size() != declared_edges)
        syntax_error(header_line, "header declares " + std::to_string(declared_edges) + " edges, found " +
                                      std::to_string(specs.size()));
    return WeaklyDynamicGraph::build(n, specs);
}

std::string format_number(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string format_graph(const WeaklyDynamicGraph& g) {
    std::string out = "p wdg " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : g.edges()) {
        out += e.unstable() ? "u " : "e ";
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + format_number(e.weight) + "\n";
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error(ErrorCode::Io, "write to " + path.string() + " failed");
}

WeaklyDynamicGraph load_graph(const std::filesystem::path& path) { return parse_graph(read_file(path)); }

Fingerprint fingerprint(const WeaklyDynamicGraph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t word) {
        for (int i = 0; i < 8; ++i) {
            h ^= (word >> (8 * i)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    };
    mix(g.vertex_count());
    mix(g.edge_count());
    for (const Edge& e : g.edges()) {
        mix(e.u);
        mix(e.v);
        mix(e.unstable() ? 1 : 0);
        mix(std::bit_cast<std::uint64_t>(e.weight == 0.0 ? 0.0 : e.weight));
    }
    return {g.vertex_count(), g.edge_count(), h};
}

std::string write_plan(const PlanSet& plans, const WeaklyDynamicGraph& g) {
    const Fingerprint fp = fingerprint(g);
    json doc;
    doc["format"] = "wdmst-plan";
    doc["version"] = 1;
    doc["graph"] = {{"n", fp.vertex_count}, {"edges", fp.edge_count}, {"hash", hex64(fp.content_hash)}};
    doc["snapshot"] = frozen_to_json(plans.snapshot());
    json list = json::array();
    for (const EdgePlan& p : plans.plans()) {
        json jp;
        jp["edge"] = p.edge;
        jp["d_s"] = number_or_inf(p.d_s);
        jp["s_v"] = p.s_v;
        jp["cv"] = number_or_inf(p.cv);
        if (p.mst_s) jp["mst_s"] = p.mst_s->edge_ids();
        jp["mst_v"] = p.mst_v->edge_ids();
        jp["frozen_others"] = frozen_to_json(p.frozen_others);
        list.push_back(std::move(jp));
    }
    doc["plans"] = std::move(list);
    return doc.dump(2) + "\n";
}

PlanSet read_plan(std::string_view json_text, const WeaklyDynamicGraph& g) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::SyntaxError, std::string("plan: ") + e.what());
    }
    try {
        if (doc.value("format", "") != "wdmst-plan") throw Error(ErrorCode::SyntaxError, "plan: not a wdmst plan");
        const Fingerprint fp = fingerprint(g);
        const json& jg = doc.at("graph");
        if (jg.at("n").get<std::size_t>() != fp.vertex_count || jg.at("edges").get<std::size_t>() != fp.edge_count ||
            jg.at("hash").get<std::string>() != hex64(fp.content_hash))
            throw Error(ErrorCode::FingerprintMismatch, "plan was computed for a different graph");

        FrozenValues snapshot = frozen_from_json(doc.at("snapshot"));
        std::vector<EdgePlan> plans;
        for (const json& jp : doc.at("plans")) {
            EdgePlan p;
            p.edge = jp.at("edge").get<EdgeId>();
            if (!g.is_unstable(p.edge))
                throw Error(ErrorCode::SyntaxError, "plan: edge " + std::to_string(p.edge) + " is not unstable");
            p.d_s = read_number_or_inf(jp.at("d_s"));
            p.s_v = jp.at("s_v").get<double>();
            p.cv = read_number_or_inf(jp.at("cv"));
            if (jp.contains("mst_s"))
                p.mst_s = std::make_shared<const SpanningTree>(
                    SpanningTree::from_edges(g, jp.at("mst_s").get<std::vector<EdgeId>>()));
            p.mst_v = std::make_shared<const SpanningTree>(
                SpanningTree::from_edges(g, jp.at("mst_v").get<std::vector<EdgeId>>()));
            p.frozen_others = frozen_from_json(jp.at("frozen_others"));
            if (!p.mst_v->contains(p.edge) || (p.mst_s && p.mst_s->contains(p.edge)) ||
                (!p.mst_s && p.cv != kInfinity))
                throw Error(ErrorCode::SyntaxError, "plan: inconsistent trees for edge " + std::to_string(p.edge));
            plans.push_back(std::move(p));
        }
        if (plans.size() != g.unstable_ids().size() || snapshot.size() != g.unstable_ids().size())
            throw Error(ErrorCode::SyntaxError, "plan: expected one plan per unstable edge");
        return PlanSet(std::move(plans), std::move(snapshot));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::SyntaxError, std::string("plan: ") + e.what());
    }
}

std::vector<Event> parse_events(std::string_view text) {
    std::vector<Event> events;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        const auto f = split_fields(line);
        if (f.empty() || f[0] == "c") return;
        if (f.size() != 3) syntax_error(line_no, "event must be '<seq> <edge_id> <new_x>'");
        Event ev;
        ev.seq = parse_integer<std::uint64_t>(f[0], line_no, "sequence number");
        ev.edge = parse_integer<EdgeId>(f[1], line_no, "edge id");
        ev.new_x = parse_real(f[2], line_no, "value");
        ev.line = line_no;
        if (!std::isfinite(ev.new_x)) syntax_error(line_no, "value is not finite");
        if (!events.empty() && ev.seq <= events.back().seq) syntax_error(line_no, "sequence numbers must increase");
        events.push_back(ev);
    });
    return events;
}

std::string generate_graph(const GeneratorOptions& o) {
    if (o.vertices < 2) throw Error(ErrorCode::InvalidArgument, "generator needs at least 2 vertices");
    const std::size_t total = o.vertices - 1 + o.extra_edges;
    if (o.unstable > total)
        throw Error(ErrorCode::InvalidArgument, "cannot mark " + std::to_string(o.unstable) + " of " +
                                                    std::to_string(total) + " edges unstable");

    std::mt19937_64 rng(o.seed);
    auto uniform = [&rng](std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
    };

    struct Row {
        std::uint64_t u, v, w;
    };
    std::vector<Row> rows;
    rows.reserve(total);

    std::vector<std::uint64_t> order(o.vertices);
    for (std::size_t i = 0; i < o.vertices; ++i) order[i] = i;
    for (std::size_t i = o.vertices - 1; i > 0; --i) std::swap(order[i], order[uniform(0, i)]);
    for (std::size_t i = 1; i < o.vertices; ++i) rows.push_back({order[i], order[uniform(0, i - 1)], 0});
    for (std::size_t k = 0; k < o.extra_edges; ++k) {
        const auto u = uniform(0, o.vertices - 1);
        auto v = uniform(0, o.vertices - 2);
        if (v >= u) ++v;
        rows.push_back({u, v, 0});
    }
    for (auto& r : rows) r.w = uniform(1, 1'000'000);

    std::vector<bool> unstable(total, false);
    std::vector<std::size_t> pool(total);
    for (std::size_t i = 0; i < total; ++i) pool[i] = i;
    for (std::size_t k = 0; k < o.unstable; ++k) {
        std::swap(pool[k], pool[uniform(k, total - 1)]);
        unstable[pool[k]] = true;
    }

    std::string out;
    out.reserve(total * 24 + 128);
    out += "c generated n=" + std::to_string(o.vertices) + " extra=" + std::to_string(o.extra_edges) +
           " unstable=" + std::to_string(o.unstable) + " seed=" + std::to_string(o.seed) + "\n";
    out += "p wdg " + std::to_string(o.vertices) + " " + std::to_string(total) + "\n";
    for (std::size_t i = 0; i < total; ++i) {
        out += unstable[i] ? "u " : "e ";
        out += std::to_string(rows[i].u) + " " + std::to_string(rows[i].v) + " " + std::to_string(rows[i].w) + "\n";
    }
    return out;
}

}  // namespace wdmst::io
