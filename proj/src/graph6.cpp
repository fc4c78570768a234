#include "hamclass/graph6.hpp"

#include "hamclass/error.hpp"

namespace hamclass {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c)
{
    const int v = static_cast<unsigned char>(c) - 63;
    if (v < 0 || v > 63) throw Error(ErrorKind::Parse, "byte outside the graph6 range 63..126");
    return v;
}

} // namespace

Graph parse_graph6(std::string_view text)
{
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw Error(ErrorKind::Parse, "empty graph6 record");

    std::size_t pos = 0;
    long order = 0;
    if (text[0] != '~') {
        order = sextet(text[0]);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw Error(ErrorKind::UnsupportedOrder, "8-byte graph6 order prefix (n > 258047)");
        if (text.size() < 4) throw Error(ErrorKind::Parse, "truncated graph6 order prefix");
        order = (static_cast<long>(sextet(text[1])) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
        pos = 4;
        if (order <= 62) throw Error(ErrorKind::Parse, "non-minimal graph6 order prefix");
    }
    if (order == 0 || order > kMaxOrder)
        throw Error(ErrorKind::UnsupportedOrder, "graph6 order " + std::to_string(order) + " outside [1, 64]");

    const int n = static_cast<int>(order);
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw Error(ErrorKind::Parse, "graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                                          std::to_string(bytes));

    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int group = sextet(text[pos + k / 6]);
            if ((group >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    if (bits % 6 != 0) {
        const int tail = sextet(text[pos + bytes - 1]);
        const int pad_mask = (1 << (6 - bits % 6)) - 1;
        if (tail & pad_mask) throw Error(ErrorKind::Parse, "stray bits set in graph6 padding");
    }
    for (std::size_t b = pos; b < text.size(); ++b) sextet(text[b]);
    return g;
}

std::string write_graph6(const Graph &g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

} // namespace hamclass
