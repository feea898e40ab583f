/*
 * Copyright 2026 The avoidgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "avoidgame/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace avoidgame {

namespace {

using json = nlohmann::json;

struct Line {
    int number;
    std::string text;
};

/// Non-empty, non-comment lines with surrounding whitespace removed.
std::vector<Line> content_lines(std::string_view text)
{
    std::vector<Line> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        auto last = raw.find_last_not_of(" \t\r");
        std::string s = raw.substr(first, last - first + 1);
        if (s[0] == 'c' && (s.size() == 1 || s[1] == ' ' || s[1] == '\t'))
            continue;
        out.push_back({number, std::move(s)});
    }
    return out;
}

[[noreturn]] void fail(const Line& l, const std::string& what)
{
    throw Error(ErrorCode::ParseError, "line " + std::to_string(l.number) + ": " + what);
}

/// Parses the remaining whitespace-separated integers of a line.
std::vector<long long> integers(const Line& l, std::istringstream& in)
{
    std::vector<long long> out;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            fail(l, "expected an integer, got '" + tok + "'");
        }
        if (used != tok.size())
            fail(l, "expected an integer, got '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

struct Header {
    long long n;
    long long m;
};

Header read_header(const Line& l, const std::string& kind)
{
    std::istringstream in(l.text);
    std::string p, k;
    in >> p >> k;
    if (p != "p" || k != kind)
        fail(l, "expected 'p " + kind + " <n> <m>'");
    auto nums = integers(l, in);
    if (nums.size() != 2 || nums[0] < 0 || nums[1] < 0)
        fail(l, "expected 'p " + kind + " <n> <m>'");
    if (nums[0] > 1'000'000)
        fail(l, "vertex count too large");
    return {nums[0], nums[1]};
}

} // namespace

Hypergraph parse_hypergraph(std::string_view text, std::vector<std::string>* warnings)
{
    auto lines = content_lines(text);
    if (lines.empty())
        throw Error(ErrorCode::ParseError, "missing 'p hg' header");
    const Header h = read_header(lines.front(), "hg");
    const int n = static_cast<int>(h.n);
    std::vector<std::vector<Vertex>> edges;
    std::vector<std::pair<Vertex, std::string>> labels;
    std::set<std::vector<Vertex>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        std::istringstream in(l.text);
        std::string tag;
        in >> tag;
        if (tag == "e") {
            auto nums = integers(l, in);
            if (nums.empty())
                fail(l, "empty hyperedge");
            std::vector<Vertex> e;
            for (long long v : nums) {
                if (v < 1 || v > n)
                    fail(l, "vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
                e.push_back(static_cast<Vertex>(v));
            }
            std::vector<Vertex> sorted = e;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() && warnings)
                warnings->push_back("line " + std::to_string(l.number) + ": repeated vertex inside an edge");
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            if (!seen.insert(sorted).second && warnings)
                warnings->push_back("line " + std::to_string(l.number) + ": duplicate edge");
            edges.push_back(std::move(e));
        } else if (tag == "n") {
            long long id = 0;
            if (!(in >> id) || id < 1 || id > n)
                fail(l, "expected 'n <id> <label>' with id in range");
            std::string label;
            std::getline(in, label);
            auto first = label.find_first_not_of(" \t");
            if (first == std::string::npos)
                fail(l, "missing label text");
            labels.emplace_back(static_cast<Vertex>(id), label.substr(first));
        } else {
            fail(l, "unexpected line '" + l.text + "'");
        }
    }
    if (static_cast<long long>(edges.size()) != h.m)
        throw Error(ErrorCode::ParseError, "header announces " + std::to_string(h.m) + " edges, found " +
                                               std::to_string(edges.size()));
    Hypergraph out(n, std::move(edges));
    for (auto& [v, label] : labels)
        out.set_label(v, std::move(label));
    return out;
}

std::string write_hypergraph(const Hypergraph& h)
{
    std::ostringstream out;
    out << "p hg " << h.num_vertices() << ' ' << h.num_edges() << '\n';
    for (const Edge& e : h.edges()) {
        out << 'e';
        for (Vertex v : e)
            out << ' ' << v;
        out << '\n';
    }
    for (Vertex v = 1; v <= h.num_vertices(); ++v)
        if (auto l = h.label(v))
            out << "n " << v << ' ' << *l << '\n';
    return out.str();
}

Graph parse_graph(std::string_view text)
{
    auto lines = content_lines(text);
    if (lines.empty())
        throw Error(ErrorCode::ParseError, "missing 'p edge' header");
    const Header h = read_header(lines.front(), "edge");
    const int n = static_cast<int>(h.n);
    Graph g(n);
    long long count = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        std::istringstream in(l.text);
        std::string tag;
        in >> tag;
        if (tag != "e")
            fail(l, "unexpected line '" + l.text + "'");
        auto nums = integers(l, in);
        if (nums.size() != 2)
            fail(l, "expected 'e <u> <v>'");
        for (long long v : nums)
            if (v < 1 || v > n)
                fail(l, "vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
        if (nums[0] == nums[1])
            fail(l, "self-loop");
        g.add_edge(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
        ++count;
    }
    if (count != h.m)
        throw Error(ErrorCode::ParseError, "header announces " + std::to_string(h.m) + " edges, found " +
                                               std::to_string(count));
    return g;
}

std::string write_graph(const Graph& g)
{
    auto edges = g.edges();
    std::ostringstream out;
    out << "p edge " << g.num_vertices() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << "e " << u << ' ' << v << '\n';
    return out.str();
}

std::string metadata_to_json(const ReductionMetadata& meta)
{
    json vertices = json::array();
    for (const auto& [id, label] : meta.vertices) {
        json v = {{"id", id}, {"kind", vertex_kind_name(label.kind)}, {"index", label.index}};
        if (label.sub != 0)
            v["sub"] = label.sub;
        vertices.push_back(std::move(v));
    }
    json edges = json::array();
    for (std::size_t i = 0; i < meta.edge_tags.size(); ++i) {
        json e = {{"index", i}, {"tag", meta.edge_tags[i].text()}};
        if (meta.edge_tags[i].truncated)
            e["truncated"] = true;
        edges.push_back(std::move(e));
    }
    json doc = {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
    return doc.dump(2) + "\n";
}

namespace {

VertexKind kind_from_name(const std::string& name)
{
    for (VertexKind k : {VertexKind::X, VertexKind::XBar, VertexKind::U, VertexKind::Aux, VertexKind::V0,
                         VertexKind::PairVertex})
        if (name == vertex_kind_name(k))
            return k;
    throw Error(ErrorCode::ParseError, "unknown vertex kind '" + name + "'");
}

EdgeTag tag_from_text(const std::string& text, bool truncated)
{
    static const std::pair<const char*, EdgeTagKind> prefixes[] = {
        {"C+", EdgeTagKind::CPlus}, {"C-", EdgeTagKind::CMinus}, {"A", EdgeTagKind::A},
        {"B", EdgeTagKind::B},      {"D", EdgeTagKind::D},
    };
    for (auto [prefix, kind] : prefixes) {
        std::string_view p(prefix);
        if (text.rfind(p, 0) == 0 && text.size() > p.size()) {
            try {
                std::size_t used = 0;
                int index = std::stoi(text.substr(p.size()), &used);
                if (used == text.size() - p.size())
                    return {kind, index, truncated};
            } catch (const std::exception&) {
            }
        }
    }
    throw Error(ErrorCode::ParseError, "unknown edge tag '" + text + "'");
}

} // namespace

ReductionMetadata metadata_from_json(std::string_view text)
{
    ReductionMetadata meta;
    try {
        json doc = json::parse(text);
        for (const auto& v : doc.at("vertices")) {
            VertexLabel l{kind_from_name(v.at("kind").get<std::string>()), v.at("index").get<int>(),
                          v.value("sub", 0)};
            meta.vertices.emplace_back(v.at("id").get<Vertex>(), l);
        }
        if (doc.contains("edges"))
            for (const auto& e : doc.at("edges"))
                meta.edge_tags.push_back(tag_from_text(e.at("tag").get<std::string>(), e.value("truncated", false)));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("label metadata: ") + e.what());
    }
    return meta;
}

std::vector<Vertex> parse_position(std::string_view text)
{
    std::vector<Vertex> moves;
    for (const Line& l : content_lines(text)) {
        std::istringstream in(l.text);
        std::string tag;
        in >> tag;
        if (tag != "m")
            fail(l, "expected 'm v1 v2 ...'");
        for (long long v : integers(l, in)) {
            if (v < 1)
                fail(l, "vertex ids are positive");
            moves.push_back(static_cast<Vertex>(v));
        }
    }
    return moves;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_text_file(const std::string& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    out << text;
    if (!out)
        throw Error(ErrorCode::InvalidArgument, "failed writing '" + path + "'");
}

} // namespace avoidgame
