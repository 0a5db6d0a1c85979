#ifndef HARMPOLY_GRAPH6_HPP
#define HARMPOLY_GRAPH6_HPP

// graph6 and sparse6 encodings (the line formats used by nauty/geng).
//
// Both start with a size field N(n): one byte n+63 for n <= 62, otherwise
// 126 followed by three 6-bit groups (n <= 258047), otherwise 126 126 and
// six 6-bit groups. Every byte carries 6 payload bits plus 63.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace harmpoly {

class Graph6Error : public std::invalid_argument {
  public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::invalid_argument(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

inline constexpr std::uint64_t graph6_max_order = (std::uint64_t{1} << 36) - 1;

namespace detail {

inline void put_size(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += '~';
        for (int shift = 12; shift >= 0; shift -= 6)
            out += static_cast<char>(((n >> shift) & 63) + 63);
    } else {
        if (n > graph6_max_order)
            throw std::length_error("graph too large for graph6/sparse6");
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6)
            out += static_cast<char>(((n >> shift) & 63) + 63);
    }
}

/// Reads N(n) starting at `pos`, advancing it.
inline std::uint64_t get_size(std::string_view s, std::size_t& pos) {
    auto byte = [&](std::size_t i) -> std::uint64_t {
        if (i >= s.size())
            throw Graph6Error("truncated size field", i);
        auto c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126)
            throw Graph6Error("byte " + std::to_string(c) + " outside 63..126", i);
        return c - 63;
    };
    if (byte(pos) != 63)
        return byte(pos++);
    std::size_t groups = 3;
    ++pos;
    if (pos < s.size() && s[pos] == '~') {
        groups = 6;
        ++pos;
    }
    std::uint64_t n = 0;
    for (std::size_t g = 0; g < groups; ++g)
        n = (n << 6) | byte(pos++);
    return n;
}

inline std::string_view strip(std::string_view line, std::string_view header) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.substr(0, header.size()) == header)
        line.remove_prefix(header.size());
    return line;
}

/// Reads 6-bit groups from a byte string, most significant bit first.
class BitReader {
  public:
    BitReader(std::string_view s, std::size_t pos) : s_(s), pos_(pos) {}

    bool exhausted() const { return pos_ >= s_.size() && left_ == 0; }
    std::size_t byte_offset() const { return pos_; }

    /// Next bit; returns false (and leaves `bit` untouched) at end of input.
    bool next(unsigned& bit) {
        if (left_ == 0) {
            if (pos_ >= s_.size())
                return false;
            auto c = static_cast<unsigned char>(s_[pos_]);
            if (c < 63 || c > 126)
                throw Graph6Error("byte " + std::to_string(c) + " outside 63..126", pos_);
            cur_ = c - 63u;
            left_ = 6;
            ++pos_;
        }
        --left_;
        bit = (cur_ >> left_) & 1u;
        return true;
    }

  private:
    std::string_view s_;
    std::size_t pos_;
    unsigned cur_ = 0;
    int left_ = 0;
};

class BitWriter {
  public:
    explicit BitWriter(std::string& out) : out_(out) {}
    void put(unsigned bit) {
        cur_ = (cur_ << 1) | (bit & 1u);
        if (++used_ == 6)
            flush();
    }
    int pending() const { return used_; }
    /// Pads the final partial byte with `fill` bits.
    void finish(unsigned fill = 0) {
        while (used_ != 0)
            put(fill);
    }

  private:
    void flush() {
        out_ += static_cast<char>(cur_ + 63);
        cur_ = 0;
        used_ = 0;
    }
    std::string& out_;
    unsigned cur_ = 0;
    int used_ = 0;
};

inline unsigned bits_for(std::uint64_t n) {
    unsigned k = 0;
    for (std::uint64_t v = n > 0 ? n - 1 : 0; v > 0; v >>= 1)
        ++k;
    return k;
}

}  // namespace detail

/// Upper-triangle adjacency bits in column order x(0,1), x(0,2), x(1,2), x(0,3), ...
inline std::string write_graph6(const Graph& g) {
    std::string out;
    detail::put_size(out, g.order());
    detail::BitWriter w(out);
    for (Vertex j = 1; j < g.order(); ++j)
        for (Vertex i = 0; i < j; ++i)
            w.put(g.adjacent(i, j) ? 1 : 0);
    w.finish(0);
    return out;
}

inline Graph parse_graph6(std::string_view line) {
    line = detail::strip(line, ">>graph6<<");
    if (line.empty())
        throw Graph6Error("empty graph6 line", 0);
    std::size_t pos = 0;
    const std::uint64_t n = detail::get_size(line, pos);
    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t need = (bits + 5) / 6;
    if (line.size() - pos < need)
        throw Graph6Error("truncated adjacency data: need " + std::to_string(need) + " bytes, have " +
                              std::to_string(line.size() - pos),
                          line.size());
    if (line.size() - pos > need)
        throw Graph6Error("trailing data after adjacency bits", pos + need);
    detail::BitReader r(line, pos);
    std::vector<Edge> edges;
    unsigned bit = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i) {
            r.next(bit);
            if (bit)
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    return Graph::from_edges(n, edges);
}

/**
 * sparse6: ':' N(n), then (b, x) pairs with b one bit and x k bits,
 * k = bit length of n-1. Decoding keeps a current vertex v: b = 1 bumps v,
 * then x > v moves v to x, otherwise {x, v} is an edge.
 */
inline std::string write_sparse6(const Graph& g) {
    const std::uint64_t n = g.order();
    if (n == 0)
        throw std::invalid_argument("sparse6 cannot encode the empty graph");
    std::string out = ":";
    detail::put_size(out, n);
    const unsigned k = detail::bits_for(n);
    detail::BitWriter w(out);
    auto put_x = [&](std::uint64_t x) {
        for (unsigned b = k; b-- > 0;)
            w.put(static_cast<unsigned>((x >> b) & 1));
    };
    std::uint64_t last = 0;
    for (Vertex j = 0; j < n; ++j) {
        for (Vertex i : g.neighbors(j)) {
            if (i > j)
                break;
            if (j == last) {
                w.put(0);
            } else {
                w.put(1);
                if (j > last + 1) {
                    put_x(j);
                    w.put(0);
                }
                last = j;
            }
            put_x(i);
        }
    }
    if (w.pending() != 0) {
        const int pad = 6 - w.pending();
        // All-ones padding would decode as an extra edge in this corner case.
        if (pad >= static_cast<int>(k) + 1 && last + 2 == n && n == (std::uint64_t{1} << k)) {
            w.put(0);
        }
        w.finish(1);
    }
    return out;
}

inline Graph parse_sparse6(std::string_view line) {
    line = detail::strip(line, ">>sparse6<<");
    if (line.empty() || line[0] != ':')
        throw Graph6Error("sparse6 line must start with ':'", 0);
    std::size_t pos = 1;
    const std::uint64_t n = detail::get_size(line, pos);
    const unsigned k = detail::bits_for(n);
    detail::BitReader r(line, pos);
    std::vector<Edge> edges;
    std::uint64_t v = 0;
    while (true) {
        unsigned b = 0;
        if (!r.next(b))
            break;
        std::uint64_t x = 0;
        bool complete = true;
        for (unsigned i = 0; i < k; ++i) {
            unsigned bit = 0;
            if (!r.next(bit)) {
                complete = false;
                break;
            }
            x = (x << 1) | bit;
        }
        if (!complete)
            break;
        if (b)
            ++v;
        if (v >= n)
            break;
        if (x > v)
            v = x;
        else
            edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(v));
    }
    // Only padding may follow the point where decoding stops.
    if (r.byte_offset() < line.size())
        throw Graph6Error("trailing data after sparse6 edge stream", r.byte_offset());
    return Graph::from_edges(n, edges);
}

/// Dispatches on the leading ':' of sparse6.
inline Graph parse_graph6_or_sparse6(std::string_view line) {
    auto s = detail::strip(line, "");
    if (s.substr(0, 11) == ">>sparse6<<" || (!s.empty() && s[0] == ':'))
        return parse_sparse6(s);
    return parse_graph6(s);
}

}  // namespace harmpoly

#endif
