#include "cobweb/poset.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "cobweb/errors.hpp"

namespace cobweb {

CobwebPoset::CobwebPoset(SequenceSpec spec, std::size_t n) : spec_(std::move(spec)) {
    level_sizes_.reserve(n + 1);
    for (std::size_t s = 0; s <= n; ++s) {
        const std::uint64_t size = evaluate(spec_, s);
        if (size == 0) {
            throw std::domain_error("level " + std::to_string(s) +
                                    " is empty; every level needs at least one element");
        }
        level_sizes_.push_back(size);
    }
    if (level_sizes_[0] != 1) {
        throw std::domain_error("level 0 must hold exactly one element, got " +
                                std::to_string(level_sizes_[0]));
    }
}

std::uint64_t CobwebPoset::level_size(std::size_t s) const {
    if (s >= level_sizes_.size()) {
        throw std::out_of_range("level " + std::to_string(s) + " is above the top level " +
                                std::to_string(top_level()));
    }
    return level_sizes_[s];
}

mpz_class CobwebPoset::vertex_count() const {
    mpz_class total = 0;
    for (const std::uint64_t size : level_sizes_) total += mpz_class(size);
    return total;
}

mpz_class CobwebPoset::cover_arc_count() const {
    mpz_class total = 0;
    for (std::size_t s = 0; s + 1 < level_sizes_.size(); ++s) {
        total += mpz_class(level_sizes_[s]) * mpz_class(level_sizes_[s + 1]);
    }
    return total;
}

bool CobwebPoset::contains(Vertex v) const {
    return v.level < level_sizes_.size() && v.position >= 1 &&
           v.position <= level_sizes_[v.level];
}

void CobwebPoset::require(Vertex v) const {
    if (!contains(v)) {
        throw std::out_of_range("vertex <" + std::to_string(v.position) + "," +
                                std::to_string(v.level) + "> is not in P_" +
                                std::to_string(top_level()));
    }
}

std::size_t CobwebPoset::rank(Vertex v) const {
    require(v);
    return v.level;
}

bool CobwebPoset::less_equal(Vertex x, Vertex y) const {
    require(x);
    require(y);
    return x == y || x.level < y.level;
}

bool CobwebPoset::less(Vertex x, Vertex y) const {
    require(x);
    require(y);
    return x.level < y.level;
}

bool CobwebPoset::covered_by(Vertex x, Vertex y) const {
    require(x);
    require(y);
    return y.level == x.level + 1;
}

std::vector<Vertex> CobwebPoset::all_vertices(std::uint64_t max_count) const {
    const mpz_class count = vertex_count();
    if (count > max_count) {
        throw resource_limit_error("materializing " + count.get_str() +
                                   " vertices exceeds the cap of " + std::to_string(max_count));
    }
    std::vector<Vertex> out;
    out.reserve(count.get_ui());
    for (std::size_t s = 0; s < level_sizes_.size(); ++s) {
        for (std::uint64_t j = 1; j <= level_sizes_[s]; ++j) {
            out.push_back(Vertex{s, j});
        }
    }
    return out;
}

std::string CobwebPoset::to_dot(std::uint64_t max_vertices) const {
    const mpz_class count = vertex_count();
    if (count > max_vertices) {
        throw resource_limit_error("DOT export of " + count.get_str() +
                                   " vertices exceeds the cap of " + std::to_string(max_vertices));
    }
    std::ostringstream os;
    os << "digraph cobweb {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=circle];\n";
    for (std::size_t s = 0; s < level_sizes_.size(); ++s) {
        os << "  { rank=same;";
        for (std::uint64_t j = 1; j <= level_sizes_[s]; ++j) {
            os << " v_" << s << "_" << j << ";";
        }
        os << " }\n";
    }
    for (std::size_t s = 0; s + 1 < level_sizes_.size(); ++s) {
        for (std::uint64_t j = 1; j <= level_sizes_[s]; ++j) {
            for (std::uint64_t q = 1; q <= level_sizes_[s + 1]; ++q) {
                os << "  v_" << s << "_" << j << " -> v_" << s + 1 << "_" << q << ";\n";
            }
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace cobweb
