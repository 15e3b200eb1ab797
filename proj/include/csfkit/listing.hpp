#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "csfkit/bigraph.hpp"
#include "csfkit/poset.hpp"
#include "csfkit/rational.hpp"

namespace csfkit {

// One part of a listing: a single vertex on a level, or a bicoloured graph
// spanning two adjacent levels (the stored level is the lower one).
struct Part {
    int level = 1;
    std::optional<BicolouredGraph> graph;

    bool is_vertex() const { return !graph.has_value(); }
    int min_level() const { return level; }
    int max_level() const { return graph ? level + 1 : level; }
    int vertex_count() const { return graph ? graph->r + graph->s : 1; }

    bool operator==(const Part&) const = default;
};

Part vertex_part(int level);
Part graph_part(int level, BicolouredGraph g);

class PartListing {
  public:
    PartListing() = default;
    explicit PartListing(std::vector<Part> parts);

    const std::vector<Part>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int size() const { return static_cast<int>(parts_.size()); }
    int vertex_count() const;
    int min_level() const;  // 0 for the empty listing
    int max_level() const;

    // Copy with every level shifted by delta (resulting levels must stay >= 1).
    PartListing shifted(int delta) const;
    // Shifted so the minimum level is 1.
    PartListing normalized() const;

    bool operator==(const PartListing&) const = default;

  private:
    std::vector<Part> parts_;
};

// Where each poset vertex of a listing lives. Vertices are numbered by scan
// order: parts left to right; inside a graph part, downs then ups.
struct ListingVertex {
    int part;
    int level;
    bool in_graph;
    bool down_side;     // meaningful when in_graph
    int index_in_side;  // 0-based within its side
};

std::vector<ListingVertex> listing_vertices(const PartListing& listing);

// Formal rational combination of listings, all with the same vertex count.
// Zero coefficients are dropped.
class LinListing {
  public:
    LinListing() = default;
    explicit LinListing(std::vector<std::pair<Rat, PartListing>> terms);

    const std::vector<std::pair<Rat, PartListing>>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

  private:
    std::vector<std::pair<Rat, PartListing>> terms_;
};

// The associated poset: x < y iff x is two or more levels below y; or exactly
// one level below with x's part strictly earlier; or they are joined by an
// edge of a shared graph part.
Poset listing_to_poset(const PartListing& listing);

// Swap parts i and i+1; their level spans must be at distance >= 2.
PartListing commute(const PartListing& listing, int i);

// First split_index parts (all with min level >= 2) are lowered one level and
// moved to the end.
PartListing circulate_general(const PartListing& listing, int split_index);
PartListing circulate(const PartListing& listing);

// Replace parts [lo, hi] (all within two adjacent levels) by the single
// equivalent graph part.
PartListing combine(const PartListing& listing, int lo, int hi);

// Combine an entire two-level word into one graph. For single-level words the
// occupied level is taken as the down side; pass lower_level to force the
// span.
BicolouredGraph two_level_word_to_graph(const PartListing& word, int lower_level = -1);

// Repeatedly extract removable vertices from every graph part:
// (a) down adjacent to all ups -> leading vertex part, (b) isolated up ->
// leading, (c) isolated down -> trailing, (d) up adjacent to all downs ->
// trailing. Rules tried in that order, lowest index first.
PartListing peel(const PartListing& listing);

struct ListingParseError : std::runtime_error {
    std::size_t offset;
    ListingParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

// Grammar (whitespace-separated tokens):
//   part := 'v' INT | 'b' INT '{' INT 'x' INT (':' edge (',' edge)*)? '}'
//   edge := INT '-' INT        (1-based; down index first)
PartListing parse_listing(std::string_view text);
std::string serialize_listing(const PartListing& listing);

}  // namespace csfkit
