#include "csfkit/listing.hpp"

#include <algorithm>
#include <cctype>

namespace csfkit {

Part vertex_part(int level) {
    if (level < 1) throw std::invalid_argument("vertex_part: level must be >= 1");
    Part p;
    p.level = level;
    return p;
}

Part graph_part(int level, BicolouredGraph g) {
    if (level < 1) throw std::invalid_argument("graph_part: level must be >= 1");
    if (g.r + g.s < 1) throw std::invalid_argument("graph_part: graph needs a vertex");
    Part p;
    p.level = level;
    p.graph = std::move(g);
    return p;
}

PartListing::PartListing(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (const Part& p : parts_) {
        if (p.level < 1) throw std::invalid_argument("PartListing: level must be >= 1");
        if (p.graph && p.graph->r + p.graph->s < 1)
            throw std::invalid_argument("PartListing: empty graph part");
    }
}

int PartListing::vertex_count() const {
    int c = 0;
    for (const Part& p : parts_) c += p.vertex_count();
    return c;
}

int PartListing::min_level() const {
    int m = 0;
    for (const Part& p : parts_) m = m == 0 ? p.min_level() : std::min(m, p.min_level());
    return m;
}

int PartListing::max_level() const {
    int m = 0;
    for (const Part& p : parts_) m = std::max(m, p.max_level());
    return m;
}

PartListing PartListing::shifted(int delta) const {
    std::vector<Part> parts = parts_;
    for (Part& p : parts) {
        p.level += delta;
        if (p.level < 1) throw std::invalid_argument("shifted: level would drop below 1");
    }
    return PartListing(std::move(parts));
}

PartListing PartListing::normalized() const {
    if (empty()) return *this;
    return shifted(1 - min_level());
}

std::vector<ListingVertex> listing_vertices(const PartListing& listing) {
    std::vector<ListingVertex> out;
    const auto& parts = listing.parts();
    for (int pi = 0; pi < static_cast<int>(parts.size()); ++pi) {
        const Part& p = parts[pi];
        if (p.is_vertex()) {
            out.push_back({pi, p.level, false, false, 0});
        } else {
            for (int d = 0; d < p.graph->r; ++d) out.push_back({pi, p.level, true, true, d});
            for (int u = 0; u < p.graph->s; ++u)
                out.push_back({pi, p.level + 1, true, false, u});
        }
    }
    return out;
}

LinListing::LinListing(std::vector<std::pair<Rat, PartListing>> terms) {
    int count = -1;
    for (auto& [c, l] : terms) {
        if (c == 0) continue;
        if (count < 0) count = l.vertex_count();
        if (l.vertex_count() != count)
            throw std::invalid_argument("LinListing: mixed vertex counts");
        terms_.emplace_back(std::move(c), std::move(l));
    }
}

Poset listing_to_poset(const PartListing& listing) {
    const std::vector<ListingVertex> verts = listing_vertices(listing);
    const int n = static_cast<int>(verts.size());
    const auto& parts = listing.parts();
    std::vector<std::uint32_t> up(n, 0);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            const auto& a = verts[x];
            const auto& b = verts[y];
            bool rel = false;
            if (a.level <= b.level - 2) {
                rel = true;
            } else if (a.level == b.level - 1) {
                if (a.part < b.part) {
                    rel = true;
                } else if (a.part == b.part && a.in_graph && a.down_side && !b.down_side) {
                    rel = parts[a.part].graph->has_edge(a.index_in_side, b.index_in_side);
                }
            }
            if (rel) up[x] |= 1u << y;
        }
    }
    return Poset::from_less_masks(n, std::move(up));
}

namespace {

bool spans_apart(const Part& a, const Part& b) {
    return b.min_level() - a.max_level() >= 2 || a.min_level() - b.max_level() >= 2;
}

}  // namespace

PartListing commute(const PartListing& listing, int i) {
    if (i < 0 || i + 1 >= listing.size()) throw std::invalid_argument("commute: index out of range");
    const auto& parts = listing.parts();
    if (!spans_apart(parts[i], parts[i + 1]))
        throw std::invalid_argument("commute: parts occupy adjacent or shared levels");
    std::vector<Part> out = parts;
    std::swap(out[i], out[i + 1]);
    return PartListing(std::move(out));
}

PartListing circulate_general(const PartListing& listing, int split_index) {
    if (split_index < 0 || split_index > listing.size())
        throw std::invalid_argument("circulate: split index out of range");
    const auto& parts = listing.parts();
    for (int i = 0; i < split_index; ++i)
        if (parts[i].min_level() < 2)
            throw std::invalid_argument("circulate: leading part touches level 1");
    std::vector<Part> out(parts.begin() + split_index, parts.end());
    for (int i = 0; i < split_index; ++i) {
        Part p = parts[i];
        p.level -= 1;
        out.push_back(std::move(p));
    }
    return PartListing(std::move(out));
}

PartListing circulate(const PartListing& listing) {
    if (listing.empty()) throw std::invalid_argument("circulate: empty listing");
    return circulate_general(listing, 1);
}

PartListing combine(const PartListing& listing, int lo, int hi) {
    if (lo < 0 || hi >= listing.size() || lo > hi)
        throw std::invalid_argument("combine: bad range");
    const auto& parts = listing.parts();
    int min_l = parts[lo].min_level(), max_l = parts[lo].max_level();
    for (int i = lo; i <= hi; ++i) {
        min_l = std::min(min_l, parts[i].min_level());
        max_l = std::max(max_l, parts[i].max_level());
    }
    if (max_l - min_l >= 2) throw std::invalid_argument("combine: range spans three or more levels");
    const int lower = min_l;

    // Collect down/up vertices in scan order; edges follow the poset rules
    // inside the range.
    struct Slot {
        int part;
        bool in_graph;
        int index_in_side;
    };
    std::vector<Slot> downs, ups;
    for (int i = lo; i <= hi; ++i) {
        const Part& p = parts[i];
        if (p.is_vertex()) {
            (p.level == lower ? downs : ups).push_back({i, false, 0});
        } else {
            if (p.level != lower)
                throw std::invalid_argument("combine: range spans three or more levels");
            for (int d = 0; d < p.graph->r; ++d) downs.push_back({i, true, d});
            for (int u = 0; u < p.graph->s; ++u) ups.push_back({i, true, u});
        }
    }
    BicolouredGraph g(static_cast<int>(downs.size()), static_cast<int>(ups.size()));
    for (int d = 0; d < g.r; ++d) {
        for (int u = 0; u < g.s; ++u) {
            const Slot& a = downs[d];
            const Slot& b = ups[u];
            bool rel = a.part < b.part;
            if (a.part == b.part && a.in_graph)
                rel = parts[a.part].graph->has_edge(a.index_in_side, b.index_in_side);
            if (rel) g.set_edge(d, u, true);
        }
    }

    std::vector<Part> out(parts.begin(), parts.begin() + lo);
    out.push_back(graph_part(lower, std::move(g)));
    out.insert(out.end(), parts.begin() + hi + 1, parts.end());
    return PartListing(std::move(out));
}

BicolouredGraph two_level_word_to_graph(const PartListing& word, int lower_level) {
    if (word.empty()) {
        if (lower_level < 0) return BicolouredGraph(0, 0);
        return BicolouredGraph(0, 0);
    }
    PartListing w = word;
    if (lower_level > 0) {
        if (word.min_level() < lower_level || word.max_level() > lower_level + 1)
            throw std::invalid_argument("two_level_word_to_graph: word outside the span");
        // Force interpretation by adding a phantom? Not needed: combine uses
        // the range minimum, so shift so the requested lower level is 1 and
        // append nothing. When the word occupies only lower_level + 1 the
        // vertices must land on the up side; handle that below.
        if (word.min_level() == lower_level + 1) {
            PartListing combined = combine(w, 0, w.size() - 1);
            const BicolouredGraph& g = *combined.parts()[0].graph;
            // All vertices sit one level above the requested span floor.
            BicolouredGraph out(0, g.r + g.s);
            return out;
        }
    }
    PartListing combined = combine(w, 0, w.size() - 1);
    return *combined.parts()[0].graph;
}

namespace {

// One peeling pass over a single graph. Emits prefix/suffix vertex parts and
// shrinks the graph until no rule applies.
void peel_graph(int level, BicolouredGraph g, std::vector<Part>& out) {
    std::vector<Part> prefix, suffix_rev;  // suffix emitted closest-to-core first
    for (;;) {
        bool applied = false;
        // (a) down adjacent to all ups
        for (int d = 0; d < g.r && !applied; ++d)
            if (g.down_degree(d) == g.s) {
                prefix.push_back(vertex_part(level));
                g = g.without_down(d);
                applied = true;
            }
        if (applied) continue;
        // (b) isolated up
        for (int u = 0; u < g.s && !applied; ++u)
            if (g.up_degree(u) == 0) {
                prefix.push_back(vertex_part(level + 1));
                g = g.without_up(u);
                applied = true;
            }
        if (applied) continue;
        // (c) isolated down
        for (int d = 0; d < g.r && !applied; ++d)
            if (g.down_degree(d) == 0) {
                suffix_rev.push_back(vertex_part(level));
                g = g.without_down(d);
                applied = true;
            }
        if (applied) continue;
        // (d) up adjacent to all downs
        for (int u = 0; u < g.s && !applied; ++u)
            if (g.up_degree(u) == g.r) {
                suffix_rev.push_back(vertex_part(level + 1));
                g = g.without_up(u);
                applied = true;
            }
        if (!applied) break;
    }
    out.insert(out.end(), prefix.begin(), prefix.end());
    if (g.r + g.s > 0) out.push_back(graph_part(level, std::move(g)));
    out.insert(out.end(), suffix_rev.rbegin(), suffix_rev.rend());
}

}  // namespace

PartListing peel(const PartListing& listing) {
    std::vector<Part> out;
    for (const Part& p : listing.parts()) {
        if (p.is_vertex())
            out.push_back(p);
        else
            peel_graph(p.level, *p.graph, out);
    }
    return PartListing(std::move(out));
}

// ---------------------------------------------------------------------------
// Text grammar

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& msg) const { throw ListingParseError(msg, pos); }

    int read_int() {
        if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        long value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000) fail("integer too large");
            ++pos;
        }
        return static_cast<int>(value);
    }

    void expect(char c) {
        if (done() || peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
};

Part parse_part(Cursor& cur) {
    if (cur.peek() == 'v') {
        ++cur.pos;
        int level = cur.read_int();
        if (level < 1) cur.fail("level must be >= 1");
        return vertex_part(level);
    }
    if (cur.peek() != 'b') cur.fail("expected part");
    ++cur.pos;
    int level = cur.read_int();
    if (level < 1) cur.fail("level must be >= 1");
    cur.expect('{');
    int r = cur.read_int();
    cur.expect('x');
    int s = cur.read_int();
    if (r > 16 || s > 16) cur.fail("graph side too large");
    if (r + s < 1) cur.fail("graph part needs a vertex");
    BicolouredGraph g(r, s);
    if (!cur.done() && cur.peek() == ':') {
        ++cur.pos;
        for (;;) {
            std::size_t edge_pos = cur.pos;
            int d = cur.read_int();
            cur.expect('-');
            int u = cur.read_int();
            if (d < 1 || d > r || u < 1 || u > s)
                throw ListingParseError("edge endpoint out of range", edge_pos);
            if (g.has_edge(d - 1, u - 1)) throw ListingParseError("duplicate edge", edge_pos);
            g.set_edge(d - 1, u - 1, true);
            if (cur.done() || cur.peek() != ',') break;
            ++cur.pos;
        }
    }
    cur.expect('}');
    return graph_part(level, std::move(g));
}

}  // namespace

PartListing parse_listing(std::string_view text) {
    Cursor cur{text};
    std::vector<Part> parts;
    for (;;) {
        while (!cur.done() && std::isspace(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
        if (cur.done()) break;
        parts.push_back(parse_part(cur));
        if (!cur.done() && !std::isspace(static_cast<unsigned char>(cur.peek())))
            cur.fail("expected whitespace between parts");
    }
    return PartListing(std::move(parts));
}

std::string serialize_listing(const PartListing& listing) {
    std::string out;
    for (const Part& p : listing.parts()) {
        if (!out.empty()) out += ' ';
        if (p.is_vertex()) {
            out += 'v';
            out += std::to_string(p.level);
        } else {
            out += 'b';
            out += std::to_string(p.level);
            out += '{';
            out += graph_to_literal(*p.graph);
            out += '}';
        }
    }
    return out;
}

}  // namespace csfkit
