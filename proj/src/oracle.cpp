#include "bpbvd/oracle.hpp"

#include <cstdlib>
#include <string>

namespace bpbvd {

namespace {

void check_cap(const Instance& inst, std::size_t cap) {
    if (inst.graph.num_vertices() > cap)
        throw OracleCapExceeded("brute force: " + std::to_string(inst.graph.num_vertices()) +
                                " vertices exceeds cap " + std::to_string(cap));
}

// Advances idx to the next size-s combination of [0, n) in lex order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t s = idx.size();
    std::size_t i = s;
    while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

VertexSet pick(const VertexSet& verts, const std::vector<std::size_t>& idx) {
    VertexSet s;
    s.reserve(idx.size());
    for (std::size_t i : idx) s.push_back(verts[i]);
    return s;
}

bool solves(const Instance& inst, const VertexSet& s) {
    return is_in_phi(inst.graph.without(s), inst.pclass, inst.d);
}

}  // namespace

std::size_t oracle_cap_from_env() {
    const char* raw = std::getenv("BPBVD_ORACLE_CAP");
    if (!raw || !*raw) return kDefaultOracleCap;
    try {
        std::size_t pos = 0;
        unsigned long v = std::stoul(raw, &pos);
        if (pos != std::string(raw).size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("BPBVD_ORACLE_CAP is not a number: ") + raw);
    }
}

SolveResult brute_force(const Instance& inst, std::size_t cap) {
    check_cap(inst, cap);
    SolveResult r;
    const VertexSet verts = inst.graph.vertices();
    const std::size_t n = verts.size();
    for (std::size_t s = 0; s <= n && static_cast<long>(s) <= inst.k; ++s) {
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        do {
            ++r.stats.branch_nodes;
            auto cand = pick(verts, idx);
            if (solves(inst, cand)) {
                r.solution = std::move(cand);
                return r;
            }
        } while (next_combination(idx, n));
    }
    return r;
}

SolveResult brute_force_parallel(const Instance& inst, std::size_t cap) {
    check_cap(inst, cap);
    SolveResult r;
    const VertexSet verts = inst.graph.vertices();
    const std::size_t n = verts.size();
    constexpr std::size_t kBatch = 2048;
    for (std::size_t s = 0; s <= n && static_cast<long>(s) <= inst.k; ++s) {
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        bool more = true;
        while (more) {
            std::vector<VertexSet> batch;
            while (more && batch.size() < kBatch) {
                batch.push_back(pick(verts, idx));
                more = next_combination(idx, n);
            }
            const long count = static_cast<long>(batch.size());
            long first = count;
#pragma omp parallel for reduction(min : first) schedule(static)
            for (long i = 0; i < count; ++i)
                if (i < first && solves(inst, batch[i])) first = i;
            r.stats.branch_nodes += static_cast<std::uint64_t>(first < count ? first + 1 : count);
            if (first < count) {
                r.solution = std::move(batch[first]);
                return r;
            }
        }
    }
    return r;
}

}  // namespace bpbvd
