#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cobweb/sequence.hpp"

namespace cobweb {

// An element <j, s>: level s (which is also the rank), 1-based position j
// within the level.
struct Vertex {
    std::size_t level = 0;
    std::uint64_t position = 1;
    bool operator==(const Vertex&) const = default;
};

// The finite poset P_n on levels 0..n of the infinite layered poset a
// sequence designates.  Level s is an antichain of F_s elements, every
// element of level s lies below every element of any higher level, and
// consecutive levels form a complete bipartite digraph in the Hasse
// diagram.  Vertices are virtual: only the level sizes are stored, so the
// poset scales to large levels without materializing elements.
class CobwebPoset {
public:
    // Materializes level sizes F_0..F_n.  Throws std::domain_error when a
    // level would be empty or level 0 is not a single element.
    CobwebPoset(SequenceSpec spec, std::size_t n);

    const SequenceSpec& spec() const { return spec_; }
    std::size_t top_level() const { return level_sizes_.size() - 1; }
    const std::vector<std::uint64_t>& level_sizes() const { return level_sizes_; }
    std::uint64_t level_size(std::size_t s) const;

    mpz_class vertex_count() const;
    // Number of Hasse arcs: sum of F_s * F_{s+1}.
    mpz_class cover_arc_count() const;

    bool contains(Vertex v) const;
    void require(Vertex v) const;  // std::out_of_range if not contained
    std::size_t rank(Vertex v) const;

    // Reflexive order: x <= y iff x.level < y.level or x == y.  Distinct
    // vertices of one level are incomparable.
    bool less_equal(Vertex x, Vertex y) const;
    bool less(Vertex x, Vertex y) const;
    // True iff y covers x, i.e. y sits exactly one level above x.
    bool covered_by(Vertex x, Vertex y) const;

    // The unique minimal element <1, 0>.
    Vertex minimum() const { return Vertex{0, 1}; }

    // Materializes the vertex set, level-major and position-ascending.
    std::vector<Vertex> all_vertices(std::uint64_t max_count = 1'000'000) const;

    // Graphviz digraph text: one node v_<level>_<position> per vertex,
    // levels grouped with rank=same, one arc per cover pair pointing from
    // the lower level to the higher, levels and positions ascending.
    // Byte-deterministic.  Throws resource_limit_error above the cap.
    std::string to_dot(std::uint64_t max_vertices = default_dot_cap) const;

    static constexpr std::uint64_t default_dot_cap = 10'000;

private:
    SequenceSpec spec_;
    std::vector<std::uint64_t> level_sizes_;
};

}  // namespace cobweb
