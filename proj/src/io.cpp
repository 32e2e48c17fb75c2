#include "lrc/io.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string_view>
#include <unordered_map>

#include "lrc/error.hpp"

namespace lrc {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        const std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

template <typename Int>
std::optional<Int> to_int(std::string_view token) {
    Int value{};
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

std::string at_line(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

ExternalId parse_id(std::string_view token, std::size_t line_no) {
    const auto id = to_int<ExternalId>(token);
    if (!id) {
        fail(ErrorKind::format,
             at_line(line_no) + "expected a non-negative integer id, got '" + std::string(token) + "'");
    }
    return *id;
}

// --- GML -------------------------------------------------------------------

struct GmlToken {
    enum class Kind { open, close, word, string, end } kind;
    std::string text;
    std::size_t line;
};

class GmlLexer {
public:
    explicit GmlLexer(std::istream& in) : text_(std::istreambuf_iterator<char>(in), {}) {}

    GmlToken next() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (is_space(c)) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
        if (pos_ >= text_.size()) return {GmlToken::Kind::end, {}, line_};
        const char c = text_[pos_];
        if (c == '[') {
            ++pos_;
            return {GmlToken::Kind::open, "[", line_};
        }
        if (c == ']') {
            ++pos_;
            return {GmlToken::Kind::close, "]", line_};
        }
        if (c == '"') {
            const std::size_t start_line = line_;
            const std::size_t start = ++pos_;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\n') ++line_;
                ++pos_;
            }
            if (pos_ >= text_.size()) fail(ErrorKind::format, at_line(start_line) + "unterminated string");
            std::string s = text_.substr(start, pos_ - start);
            ++pos_;
            return {GmlToken::Kind::string, std::move(s), start_line};
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !is_space(text_[pos_]) && text_[pos_] != '[' && text_[pos_] != ']') ++pos_;
        return {GmlToken::Kind::word, text_.substr(start, pos_ - start), line_};
    }

private:
    std::string text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

struct GmlValue;
using GmlList = std::vector<std::pair<std::string, std::unique_ptr<GmlValue>>>;

struct GmlValue {
    std::string scalar;
    bool is_list = false;
    GmlList list;
    std::size_t line = 0;
};

GmlList parse_gml_list(GmlLexer& lexer, bool nested) {
    GmlList list;
    for (;;) {
        GmlToken key = lexer.next();
        if (key.kind == GmlToken::Kind::end) {
            if (nested) fail(ErrorKind::format, "unbalanced brackets: missing ']'");
            return list;
        }
        if (key.kind == GmlToken::Kind::close) {
            if (!nested) fail(ErrorKind::format, at_line(key.line) + "unbalanced brackets: unexpected ']'");
            return list;
        }
        if (key.kind != GmlToken::Kind::word) fail(ErrorKind::format, at_line(key.line) + "expected a key");
        GmlToken value = lexer.next();
        auto node = std::make_unique<GmlValue>();
        node->line = key.line;
        switch (value.kind) {
            case GmlToken::Kind::open:
                node->is_list = true;
                node->list = parse_gml_list(lexer, true);
                break;
            case GmlToken::Kind::word:
            case GmlToken::Kind::string:
                node->scalar = std::move(value.text);
                break;
            case GmlToken::Kind::close:
                fail(ErrorKind::format, at_line(value.line) + "key '" + key.text + "' has no value");
            case GmlToken::Kind::end:
                fail(ErrorKind::format, "unexpected end of input after key '" + key.text + "'");
        }
        list.emplace_back(std::move(key.text), std::move(node));
    }
}

const GmlValue* find_key(const GmlList& list, std::string_view key) {
    for (const auto& [k, v] : list) {
        if (k == key) return v.get();
    }
    return nullptr;
}

std::int64_t gml_int(const GmlValue& v, std::string_view key) {
    if (v.is_list) fail(ErrorKind::format, at_line(v.line) + "'" + std::string(key) + "' must be an integer");
    const auto x = to_int<std::int64_t>(v.scalar);
    if (!x) {
        fail(ErrorKind::format,
             at_line(v.line) + "'" + std::string(key) + "' must be an integer, got '" + v.scalar + "'");
    }
    return *x;
}

}  // namespace

BuildResult parse_edge_list(std::istream& in) {
    std::vector<std::pair<ExternalId, ExternalId>> pairs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 2) {
            fail(ErrorKind::format,
                 at_line(line_no) + std::to_string(tokens.size()) + " tokens, expected 2");
        }
        pairs.emplace_back(parse_id(tokens[0], line_no), parse_id(tokens[1], line_no));
    }
    if (in.bad()) fail(ErrorKind::io, "read error");
    return build_graph(pairs);
}

GmlGraph parse_gml_subset(std::istream& in) {
    GmlLexer lexer(in);
    const GmlList top = parse_gml_list(lexer, false);
    const GmlValue* graph = find_key(top, "graph");
    if (graph == nullptr || !graph->is_list) fail(ErrorKind::format, "no 'graph [ ... ]' block");

    std::vector<ExternalId> ids;
    std::vector<std::int64_t> labels;
    std::unordered_map<ExternalId, NodeId> index;
    std::vector<Edge> edges;

    for (const auto& [key, value] : graph->list) {
        if (key != "node") continue;
        if (!value->is_list) fail(ErrorKind::format, at_line(value->line) + "'node' must be a block");
        const GmlValue* id = find_key(value->list, "id");
        if (id == nullptr) fail(ErrorKind::format, at_line(value->line) + "node without id");
        const std::int64_t raw = gml_int(*id, "id");
        if (raw < 0) fail(ErrorKind::format, at_line(id->line) + "node id must be non-negative");
        const GmlValue* label = find_key(value->list, "value");
        if (label == nullptr) fail(ErrorKind::format, at_line(value->line) + "missing value");
        const auto ext = static_cast<ExternalId>(raw);
        if (!index.emplace(ext, static_cast<NodeId>(ids.size())).second) {
            fail(ErrorKind::format, at_line(id->line) + "duplicate node id " + std::to_string(raw));
        }
        ids.push_back(ext);
        labels.push_back(gml_int(*label, "value"));
    }
    for (const auto& [key, value] : graph->list) {
        if (key != "edge") continue;
        if (!value->is_list) fail(ErrorKind::format, at_line(value->line) + "'edge' must be a block");
        const GmlValue* source = find_key(value->list, "source");
        const GmlValue* target = find_key(value->list, "target");
        if (source == nullptr || target == nullptr) {
            fail(ErrorKind::format, at_line(value->line) + "edge requires source and target");
        }
        auto resolve = [&](const GmlValue& v, std::string_view name) {
            const std::int64_t raw = gml_int(v, name);
            const auto it = raw < 0 ? index.end() : index.find(static_cast<ExternalId>(raw));
            if (it == index.end()) {
                fail(ErrorKind::format, at_line(v.line) + "edge references unknown node id " + std::to_string(raw));
            }
            return it->second;
        };
        edges.push_back({resolve(*source, "source"), resolve(*target, "target")});
    }
    if (ids.empty()) fail(ErrorKind::precondition, "empty graph");

    GmlGraph result;
    result.graph = Graph::from_internal(std::move(ids), edges, &result.report);
    result.partition.labels = std::move(labels);
    return result;
}

Cover parse_community_file(std::istream& in) {
    Cover cover;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        std::vector<ExternalId> members;
        members.reserve(tokens.size());
        for (auto t : tokens) members.push_back(parse_id(t, line_no));
        cover.communities.push_back(std::move(members));
    }
    if (in.bad()) fail(ErrorKind::io, "read error");
    return cover;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    const auto ids = g.external_ids();
    for (const Edge& e : g.edges()) out << ids[e.u] << '\t' << ids[e.v] << '\n';
}

LabelList parse_label_file(std::istream& in) {
    LabelList labels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 2) {
            fail(ErrorKind::format,
                 at_line(line_no) + "expected 'node label', got " + std::to_string(tokens.size()) + " tokens");
        }
        const auto label = to_int<std::int64_t>(tokens[1]);
        if (!label) fail(ErrorKind::format, at_line(line_no) + "label must be an integer");
        labels.emplace_back(parse_id(tokens[0], line_no), *label);
    }
    if (in.bad()) fail(ErrorKind::io, "read error");
    return labels;
}

void write_label_file(const Graph& g, const Partition& p, std::ostream& out) {
    if (p.size() != g.node_count()) fail(ErrorKind::invalid_argument, "partition size does not match graph");
    for (NodeId i = 0; i < p.size(); ++i) out << g.external_id(i) << '\t' << p.labels[i] << '\n';
}

}  // namespace lrc
