#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#include "cobweb/errors.hpp"
#include "cobweb/poset.hpp"
#include "test_util.hpp"

using namespace cobweb;

namespace {

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

std::size_t dot_node_count(const std::string& dot) {
    std::size_t nodes = 0, pos = 0;
    while ((pos = dot.find("rank=same;", pos)) != std::string::npos) {
        const std::size_t end = dot.find('\n', pos);
        nodes += count_lines_with(dot.substr(pos, end - pos), " v_");
        pos = end;
    }
    return nodes;
}

}  // namespace

TEST_SUITE("poset") {

TEST_CASE("build materializes level sizes") {
    const CobwebPoset two(parse_sequence("const:2"), 1);
    const std::vector<std::uint64_t> expected_two{1, 2};
    CHECK(two.level_sizes() == expected_two);
    CHECK(two.vertex_count() == 3);

    const CobwebPoset nat3(parse_sequence("nat"), 3);
    const std::vector<std::uint64_t> expected_nat{1, 2, 3, 4};
    CHECK(nat3.level_sizes() == expected_nat);
    CHECK(nat3.vertex_count() == 10);

    const CobwebPoset fib5(parse_sequence("fib"), 5);
    const std::vector<std::uint64_t> expected_fib{1, 1, 2, 3, 5, 8};
    CHECK(fib5.level_sizes() == expected_fib);

    const CobwebPoset point(parse_sequence("nat"), 0);
    CHECK(point.top_level() == 0);
    CHECK(point.vertex_count() == 1);
}

TEST_CASE("construction rejects empty or malformed levels") {
    SequenceSpec zero;  // built by hand to sidestep parse-time validation
    zero.kind = SequenceKind::constant;
    zero.constant = 0;
    CHECK_THROWS_AS(CobwebPoset(zero, 2), std::domain_error);

    SequenceSpec bad_head;
    bad_head.kind = SequenceKind::explicit_list;
    bad_head.values = {3, 2};
    CHECK_THROWS_AS(CobwebPoset(bad_head, 1), std::domain_error);
}

TEST_CASE("order predicate") {
    const CobwebPoset p(parse_sequence("nat"), 3);
    const Vertex root{0, 1};
    const Vertex high{3, 2};
    CHECK(p.less_equal(root, high));  // minimum below everything
    CHECK(p.less(root, high));

    const Vertex left{2, 1};
    const Vertex right{2, 2};
    CHECK_FALSE(p.less_equal(left, right));  // same level, distinct: incomparable
    CHECK_FALSE(p.less_equal(right, left));

    const Vertex self{1, 2};
    CHECK(p.less_equal(self, self));  // reflexive
    CHECK_FALSE(p.less(self, self));
}

TEST_CASE("invalid vertices are rejected") {
    const CobwebPoset p(parse_sequence("nat"), 3);
    const Vertex root{0, 1};
    const Vertex above_top{4, 1};
    const Vertex past_level{1, 3};  // level 1 holds 2 elements
    const Vertex zero_pos{1, 0};
    CHECK_FALSE(p.contains(above_top));
    CHECK_THROWS_AS(p.less_equal(root, above_top), std::out_of_range);
    CHECK_THROWS_AS(p.less(past_level, root), std::out_of_range);
    CHECK_THROWS_AS(p.covered_by(zero_pos, root), std::out_of_range);
    CHECK_THROWS_AS(p.rank(above_top), std::out_of_range);
    CHECK(p.rank(Vertex{2, 3}) == 2);
}

TEST_CASE("cover relation is level adjacency") {
    const CobwebPoset p(parse_sequence("nat"), 2);
    const Vertex root{0, 1};
    const Vertex up{1, 2};
    const Vertex two_up{2, 1};
    CHECK(p.covered_by(root, up));
    CHECK_FALSE(p.covered_by(root, two_up));
    CHECK_FALSE(p.covered_by(up, root));
    CHECK(p.cover_arc_count() == 8);  // 1*2 + 2*3
}

TEST_CASE("covers match one-step order reachability on small instances") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const CobwebPoset p(test::random_spec(rng, n, 1, 4), n);
        const auto vertices = p.all_vertices();
        for (const Vertex& x : vertices) {
            for (const Vertex& y : vertices) {
                bool gap = false;  // some z strictly between x and y
                for (const Vertex& z : vertices) {
                    if (p.less(x, z) && p.less(z, y)) {
                        gap = true;
                        break;
                    }
                }
                CHECK(p.covered_by(x, y) == (p.less(x, y) && !gap));
                if (p.covered_by(x, y)) CHECK(p.rank(y) == p.rank(x) + 1);
            }
        }
    }
}

TEST_CASE("order is transitive and antisymmetric on small instances") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const CobwebPoset p(test::random_spec(rng, n, 1, 4), n);
        const auto vertices = p.all_vertices();
        for (const Vertex& x : vertices) {
            for (const Vertex& y : vertices) {
                if (p.less_equal(x, y) && p.less_equal(y, x)) CHECK(x == y);
                for (const Vertex& z : vertices) {
                    if (p.less_equal(x, y) && p.less_equal(y, z)) {
                        CHECK(p.less_equal(x, z));
                    }
                }
            }
        }
    }
}

TEST_CASE("counting identities") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const CobwebPoset p(test::random_spec(rng, n, 1, 4), n);
        const auto& sizes = p.level_sizes();

        mpz_class vertices = 0;
        mpz_class arcs = 0;
        for (std::size_t s = 0; s <= n; ++s) vertices += sizes[s];
        for (std::size_t s = 0; s < n; ++s) arcs += mpz_class(sizes[s]) * sizes[s + 1];
        CHECK(p.vertex_count() == vertices);
        CHECK(p.cover_arc_count() == arcs);
        CHECK(p.all_vertices().size() == vertices.get_ui());

        // down-set of any rank-k vertex holds every vertex of the lower levels
        for (const Vertex& x : p.all_vertices()) {
            std::size_t below = 0;
            for (const Vertex& z : p.all_vertices()) {
                if (p.less(z, x)) ++below;
            }
            std::uint64_t lower_levels = 0;
            for (std::size_t s = 0; s < x.level; ++s) lower_levels += sizes[s];
            CHECK(below == lower_levels);
        }
    }
}

TEST_CASE("dot export: exact bytes for the smallest chain") {
    const CobwebPoset p(parse_sequence("const:1"), 1);
    CHECK(p.to_dot() ==
          "digraph cobweb {\n"
          "  rankdir=BT;\n"
          "  node [shape=circle];\n"
          "  { rank=same; v_0_1; }\n"
          "  { rank=same; v_1_1; }\n"
          "  v_0_1 -> v_1_1;\n"
          "}\n");
}

TEST_CASE("dot export: node and arc counts") {
    const std::string dot = CobwebPoset(parse_sequence("nat"), 2).to_dot();
    CHECK(dot_node_count(dot) == 6);
    CHECK(count_lines_with(dot, " -> ") == 8);

    const std::string fib2 = CobwebPoset(parse_sequence("fib"), 2).to_dot();
    CHECK(dot_node_count(fib2) == 4);
    CHECK(count_lines_with(fib2, " -> ") == 3);
}

TEST_CASE("dot arcs always point one level up") {
    const std::string dot = CobwebPoset(parse_sequence("nat"), 3).to_dot();
    std::size_t pos = 0;
    while ((pos = dot.find(" -> ", pos)) != std::string::npos) {
        const std::size_t src = dot.rfind("v_", pos);
        const std::size_t dst = dot.find("v_", pos);
        const int from = std::stoi(dot.substr(src + 2));
        const int to = std::stoi(dot.substr(dst + 2));
        CHECK(to == from + 1);
        pos += 4;
    }
}

TEST_CASE("dot export refuses oversized posets") {
    const CobwebPoset big(parse_sequence("const:100"), 200);  // 20001 vertices
    CHECK_THROWS_AS(big.to_dot(), resource_limit_error);
    CHECK_THROWS_WITH(big.to_dot(), doctest::Contains("cap of 10000"));

    const CobwebPoset small(parse_sequence("const:2"), 1);
    CHECK_THROWS_AS(small.to_dot(2), resource_limit_error);
    CHECK_NOTHROW(small.to_dot(3));
}

TEST_CASE("dot output is deterministic") {
    const CobwebPoset p(parse_sequence("odd"), 3);
    CHECK(p.to_dot() == p.to_dot());
}

}  // TEST_SUITE
