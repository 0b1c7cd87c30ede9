#include "longhole/harness.hpp"

#include <charconv>
#include <set>

namespace longhole {

auto decode_edgelist(std::string_view text) -> Graph
{
    std::vector<Edge> edges;
    std::set<Edge> seen;
    int declared = -1;
    int top = -1;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos)
            line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        const std::size_t offset = line_start;
        line_start = line_end + 1;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            std::string_view comment = line.substr(hash + 1);
            constexpr std::string_view key = " vertices ";
            if (comment.starts_with(key)) {
                int n = 0;
                auto rest = comment.substr(key.size());
                auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
                if (ec == std::errc())
                    declared = n;
            }
            line = line.substr(0, hash);
        }
        std::size_t i = 0;
        auto skip = [&] {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
        };
        auto number = [&]() -> int {
            skip();
            int v = 0;
            auto [p, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
            if (ec != std::errc() || v < 0)
                throw ParseError("edgelist: expected a vertex id", offset + i);
            i = static_cast<std::size_t>(p - line.data());
            return v;
        };
        skip();
        if (i == line.size())
            continue;
        const int u = number();
        const int v = number();
        skip();
        if (i != line.size())
            throw ParseError("edgelist: trailing characters", offset + i);
        if (u == v)
            throw InputError("edgelist: loop at vertex " + std::to_string(u));
        Edge e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second)
            throw InputError("edgelist: repeated edge " + std::to_string(u) + " " + std::to_string(v));
        edges.push_back(e);
        top = std::max(top, e.second);
    }
    const int n = std::max(declared, top + 1);
    if (n > kMaxVertices)
        throw InputError("edgelist: order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
    return Graph(n, edges);
}

auto encode_edgelist(const Graph & g) -> std::string
{
    std::string out = "# vertices " + std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace longhole
