#include "persuasion/exact_cover.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>

#include "persuasion/errors.hpp"

namespace persuasion {

std::size_t ExactCoverInstance::element_total() const {
    std::size_t m = 0;
    for (const auto &s : subsets) m += s.size();
    return m;
}

void ExactCoverInstance::validate() const {
    if (subset_names.size() != subsets.size())
        throw InvalidECI("subset name/content arity mismatch");
    std::set<std::vector<std::size_t>> seen;
    std::vector<bool> covered(universe_size + 1, false);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        const auto &s = subsets[i];
        if (s.empty()) throw InvalidECI("subset " + subset_names[i] + " is empty");
        if (!std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InvalidECI("subset " + subset_names[i] + " not sorted unique");
        for (std::size_t e : s) {
            if (e < 1 || e > universe_size)
                throw InvalidECI("subset " + subset_names[i] + " references element " +
                                 std::to_string(e) + " outside universe");
            covered[e] = true;
        }
        if (!seen.insert(s).second)
            throw InvalidECI("subset " + subset_names[i] + " duplicates an earlier subset");
    }
    for (std::size_t e = 1; e <= universe_size; ++e)
        if (!covered[e]) throw InvalidECI("element " + std::to_string(e) + " not covered by any subset");
}

std::size_t default_enumeration_cap() {
    if (const char *env = std::getenv("PERSUASION_CAP")) {
        char *end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 24;
}

bool verify_cover_mask(const ExactCoverInstance &eci, std::uint64_t chosen_mask) {
    std::vector<bool> covered(eci.universe_size + 1, false);
    for (std::size_t i = 0; i < eci.subsets.size(); ++i) {
        if (!(chosen_mask >> i & 1)) continue;
        for (std::size_t e : eci.subsets[i]) {
            if (covered[e]) return false;  // overlap
            covered[e] = true;
        }
    }
    for (std::size_t e = 1; e <= eci.universe_size; ++e)
        if (!covered[e]) return false;
    return true;
}

bool verify_cover(const ExactCoverInstance &eci, const std::vector<std::size_t> &chosen) {
    std::uint64_t mask = 0;
    for (std::size_t i : chosen) {
        if (i >= eci.subsets.size()) throw Error("cover references subset " + std::to_string(i));
        mask |= std::uint64_t{1} << i;
    }
    return verify_cover_mask(eci, mask);
}

namespace {

std::vector<std::size_t> mask_to_indices(std::uint64_t mask, std::size_t k) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) out.push_back(i);
    return out;
}

// (|H|, index sequence) ordering used for brute-force witnesses.
bool witness_mask_less(std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    // Equal cardinality: lexicographic on the sorted index sequence is
    // "lowest first differing index wins", i.e. compare from the low bit.
    const std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    return a >> std::countr_zero(diff) & 1;
}

}  // namespace

CoverVerdict exact_cover_brute(const ExactCoverInstance &eci, std::size_t cap) {
    eci.validate();
    const std::size_t k = eci.subset_count();
    if (k > cap)
        throw CapExceeded("k = " + std::to_string(k) + " exceeds enumeration cap " +
                          std::to_string(cap));
    CoverVerdict verdict;
    std::size_t count = 0;
    std::uint64_t best = 0;
    bool found = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        if (!verify_cover_mask(eci, mask)) continue;
        ++count;
        if (!found || witness_mask_less(mask, best)) {
            best = mask;
            found = true;
        }
    }
    verdict.solvable = found;
    verdict.solution_count = count;
    if (found) verdict.witness = mask_to_indices(best, k);
    return verdict;
}

namespace {

// Toroidal doubly-linked sparse matrix, Knuth-style.
struct DlxMatrix {
    struct Node {
        std::size_t left, right, up, down;
        std::size_t column;  // column header index, or row id for headers
    };
    std::vector<Node> nodes;         // [0] = root, [1..n] = column headers
    std::vector<std::size_t> sizes;  // rows per column header
    std::size_t n;

    explicit DlxMatrix(const ExactCoverInstance &eci) : n(eci.universe_size) {
        nodes.resize(n + 1);
        sizes.assign(n + 1, 0);
        for (std::size_t c = 0; c <= n; ++c) {
            nodes[c].left = (c + n) % (n + 1);
            nodes[c].right = (c + 1) % (n + 1);
            nodes[c].up = nodes[c].down = c;
            nodes[c].column = c;
        }
        row_of_node.assign(n + 1, 0);
        for (std::size_t r = 0; r < eci.subsets.size(); ++r) {
            std::size_t first = 0;
            for (std::size_t e : eci.subsets[r]) {
                const std::size_t id = nodes.size();
                Node node{};
                node.column = e;
                node.up = nodes[e].up;
                node.down = e;
                nodes[nodes[e].up].down = id;
                nodes[e].up = id;
                ++sizes[e];
                if (first == 0) {
                    node.left = node.right = id;
                    first = id;
                } else {
                    node.left = nodes[first].left;
                    node.right = first;
                    nodes[nodes[first].left].right = id;
                    nodes[first].left = id;
                }
                nodes.push_back(node);
                row_of_node.push_back(r);
            }
        }
    }

    std::vector<std::size_t> row_of_node;

    void cover(std::size_t c) {
        nodes[nodes[c].right].left = nodes[c].left;
        nodes[nodes[c].left].right = nodes[c].right;
        for (std::size_t i = nodes[c].down; i != c; i = nodes[i].down)
            for (std::size_t j = nodes[i].right; j != i; j = nodes[j].right) {
                nodes[nodes[j].down].up = nodes[j].up;
                nodes[nodes[j].up].down = nodes[j].down;
                --sizes[nodes[j].column];
            }
    }

    void uncover(std::size_t c) {
        for (std::size_t i = nodes[c].up; i != c; i = nodes[i].up)
            for (std::size_t j = nodes[i].left; j != i; j = nodes[j].left) {
                ++sizes[nodes[j].column];
                nodes[nodes[j].down].up = j;
                nodes[nodes[j].up].down = j;
            }
        nodes[nodes[c].right].left = c;
        nodes[nodes[c].left].right = c;
    }

    bool search(std::vector<std::size_t> &stack, std::size_t &count, bool count_all,
                std::vector<std::size_t> &first_solution, bool &recorded) {
        if (nodes[0].right == 0) {
            ++count;
            if (!recorded) {
                first_solution = stack;
                recorded = true;
            }
            return !count_all;
        }
        // Fewest-rows column, ties to the lowest column index.
        std::size_t best = 0;
        std::size_t best_size = SIZE_MAX;
        for (std::size_t c = nodes[0].right; c != 0; c = nodes[c].right)
            if (sizes[c] < best_size) {
                best_size = sizes[c];
                best = c;
            }
        if (best_size == 0) return false;
        cover(best);
        for (std::size_t i = nodes[best].down; i != best; i = nodes[i].down) {
            stack.push_back(row_of_node[i]);
            for (std::size_t j = nodes[i].right; j != i; j = nodes[j].right)
                cover(nodes[j].column);
            const bool done = search(stack, count, count_all, first_solution, recorded);
            for (std::size_t j = nodes[i].left; j != i; j = nodes[j].left)
                uncover(nodes[j].column);
            stack.pop_back();
            if (done) {
                uncover(best);
                return true;
            }
        }
        uncover(best);
        return false;
    }
};

}  // namespace

CoverVerdict exact_cover_dlx(const ExactCoverInstance &eci, bool count_all) {
    eci.validate();
    DlxMatrix matrix(eci);
    std::vector<std::size_t> stack;
    std::vector<std::size_t> first;
    std::size_t count = 0;
    bool recorded = false;
    matrix.search(stack, count, count_all, first, recorded);
    CoverVerdict verdict;
    verdict.solvable = count > 0;
    if (count_all) verdict.solution_count = count;
    if (recorded) {
        std::sort(first.begin(), first.end());
        verdict.witness = std::move(first);
    }
    return verdict;
}

}  // namespace persuasion
