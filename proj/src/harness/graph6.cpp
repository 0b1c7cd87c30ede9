#include "longhole/harness.hpp"

namespace longhole {

namespace {

    constexpr std::string_view kHeader = ">>graph6<<";

    auto trim(std::string_view s) -> std::pair<std::string_view, std::size_t>
    {
        std::size_t lead = 0;
        while (lead < s.size() && std::isspace(static_cast<unsigned char>(s[lead])))
            ++lead;
        s.remove_prefix(lead);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return {s, lead};
    }

} // namespace

auto decode_graph6(std::string_view text) -> Graph
{
    auto [s, base] = trim(text);
    if (s.starts_with(kHeader)) {
        s.remove_prefix(kHeader.size());
        base += kHeader.size();
    }
    std::size_t pos = 0;
    auto byte = [&](std::size_t i) -> int {
        if (i >= s.size())
            throw ParseError("graph6: unexpected end of input", base + i);
        const int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte outside 63..126", base + i);
        return c - 63;
    };
    if (s.empty())
        throw ParseError("graph6: empty input", base);
    long n = 0;
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else if (byte(1) < 63) {
        n = (static_cast<long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        for (std::size_t i = 2; i < 8; ++i)
            n = (n << 6) | byte(i);
        pos = 8;
    }
    if (n > kMaxVertices)
        throw ParseError("graph6: order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices), base);
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t need = (bits + 5) / 6;
    if (s.size() - pos != need)
        throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, found " +
                             std::to_string(s.size() - pos),
                         base + pos);
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int chunk = byte(pos + k / 6);
            if ((chunk >> (5 - k % 6)) & 1)
                edges.emplace_back(i, j);
        }
    if (need > 0) {
        const std::size_t pad = need * 6 - bits;
        const int last = byte(pos + need - 1);
        if ((last & ((1 << pad) - 1)) != 0)
            throw ParseError("graph6: nonzero padding bits", base + pos + need - 1);
    }
    return Graph(static_cast<int>(n), edges);
}

auto encode_graph6(const Graph & g) -> std::string
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift : {12, 6, 0})
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int chunk = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

auto parse_format(std::string_view name) -> Format
{
    if (name == "graph6")
        return Format::graph6;
    if (name == "edgelist")
        return Format::edgelist;
    throw InputError("unknown format: " + std::string(name));
}

auto parse_graph(std::string_view bytes, Format format) -> Graph
{
    return format == Format::graph6 ? decode_graph6(bytes) : decode_edgelist(bytes);
}

} // namespace longhole
