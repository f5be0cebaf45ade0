#include "ncover/edge_list.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ncover {

bool natural_less(std::string_view a, std::string_view b) {
    std::size_t i = 0;
    std::size_t j = 0;
    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    while (i < a.size() && j < b.size()) {
        if (is_digit(a[i]) && is_digit(b[j])) {
            std::size_t ia = i;
            std::size_t jb = j;
            while (ia < a.size() && is_digit(a[ia]))
                ++ia;
            while (jb < b.size() && is_digit(b[jb]))
                ++jb;
            std::string_view da = a.substr(i, ia - i);
            std::string_view db = b.substr(j, jb - j);
            // Compare numerically: strip leading zeros, then by length.
            const auto sa = da.find_first_not_of('0');
            const auto sb = db.find_first_not_of('0');
            std::string_view na = sa == std::string_view::npos ? std::string_view{} : da.substr(sa);
            std::string_view nb = sb == std::string_view::npos ? std::string_view{} : db.substr(sb);
            if (na.size() != nb.size())
                return na.size() < nb.size();
            if (na != nb)
                return na < nb;
            if (da.size() != db.size())
                return da.size() > db.size(); // more leading zeros first, for a total order
            i = ia;
            j = jb;
            continue;
        }
        if (a[i] != b[j])
            return a[i] < b[j];
        ++i;
        ++j;
    }
    return a.size() - i < b.size() - j;
}

const std::string& TokenGraph::token(VertexId v) const {
    return tokens.at(graph.index_of(v));
}

std::optional<VertexId> TokenGraph::id_of(std::string_view token) const {
    for (std::size_t i = 0; i < tokens.size(); ++i)
        if (tokens[i] == token)
            return graph.vertices()[i];
    return std::nullopt;
}

TokenGraph parse_edge_list(std::string_view text) {
    struct Line {
        std::size_t number;
        std::vector<std::string> tokens;
    };
    std::vector<Line> lines;
    {
        std::size_t number = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t eol = std::min(text.find('\n', pos), text.size());
            ++number;
            std::string_view raw = text.substr(pos, eol - pos);
            pos = eol + 1;
            if (const auto hash = raw.find('#'); hash != std::string_view::npos)
                raw = raw.substr(0, hash);
            Line line{number, {}};
            std::istringstream words{std::string(raw)};
            for (std::string w; words >> w;)
                line.tokens.push_back(std::move(w));
            if (!line.tokens.empty())
                lines.push_back(std::move(line));
            if (eol == text.size())
                break;
        }
    }

    std::vector<std::string> names;
    for (const Line& line : lines) {
        if (line.tokens.size() > 2)
            throw ParseError(line.number, "expected at most two tokens");
        for (const std::string& t : line.tokens)
            names.push_back(t);
        if (line.tokens.size() == 2 && line.tokens[0] == line.tokens[1])
            throw ParseError(line.number, "self-loop on vertex '" + line.tokens[0] + "'");
    }
    std::sort(names.begin(), names.end(), natural_less);
    names.erase(std::unique(names.begin(), names.end()), names.end());

    std::map<std::string, VertexId, bool (*)(std::string_view, std::string_view)> ids(natural_less);
    for (std::size_t i = 0; i < names.size(); ++i)
        ids.emplace(names[i], static_cast<VertexId>(i));

    GraphBuilder b;
    for (std::size_t i = 0; i < names.size(); ++i)
        b.add_vertex(static_cast<VertexId>(i));
    std::map<Edge, std::size_t> first_seen;
    for (const Line& line : lines) {
        if (line.tokens.size() != 2)
            continue;
        const Edge e(ids.at(line.tokens[0]), ids.at(line.tokens[1]));
        if (const auto [it, fresh] = first_seen.emplace(e, line.number); !fresh)
            throw ParseError(line.number, "duplicate edge '" + line.tokens[0] + " " +
                                              line.tokens[1] + "' (first at line " +
                                              std::to_string(it->second) + ")");
        b.add_edge(e);
    }

    TokenGraph tg;
    tg.graph = b.build();
    tg.tokens = std::move(names);
    return tg;
}

TokenGraph with_decimal_tokens(const Graph& g) {
    TokenGraph tg;
    tg.graph = g;
    for (VertexId v : g.vertices())
        tg.tokens.push_back(std::to_string(v));
    return tg;
}

std::string serialize_edge_list(const TokenGraph& tg) {
    std::ostringstream out;
    for (const Edge& e : tg.graph.edges())
        out << tg.token(e.u) << ' ' << tg.token(e.v) << '\n';
    for (VertexId v : tg.graph.vertices())
        if (tg.graph.is_isolated(v))
            out << tg.token(v) << '\n';
    return out.str();
}

} // namespace ncover
