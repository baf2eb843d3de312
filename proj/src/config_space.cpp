#include "graphlift/config_space.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "graphlift/errors.hpp"

namespace graphlift {

namespace {

std::uint64_t tuple_hash(std::span<const std::int32_t> t) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int32_t x : t) {
        for (int b = 0; b < 4; ++b) {
            h ^= static_cast<std::uint64_t>((x >> (8 * b)) & 0xff);
            h *= 1099511628211ull;
        }
    }
    return h;
}

constexpr int kMaxArityHard = 5;

} // namespace

ConfigGraph::ConfigGraph(int arity, std::vector<std::int32_t> flat_tuples,
                         std::vector<ConfigEdge> edges)
    : arity_(arity), flat_tuples_(std::move(flat_tuples)), edges_(std::move(edges)) {
    adjacency_.resize(vertex_count());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        adjacency_[edges_[i].u].push_back(static_cast<std::int32_t>(i));
        if (edges_[i].w != edges_[i].u)
            adjacency_[edges_[i].w].push_back(static_cast<std::int32_t>(i));
    }
    for (ConfigVertexId v = 0; v < vertex_count(); ++v)
        lookup_[tuple_hash(tuple(v))].push_back(v);
}

ConfigVertexId ConfigGraph::find_tuple(std::span<const VertexId> t) const {
    if (static_cast<int>(t.size()) != arity_) return -1;
    auto it = lookup_.find(tuple_hash(t));
    if (it == lookup_.end()) return -1;
    for (ConfigVertexId v : it->second) {
        auto mine = tuple(v);
        if (std::equal(mine.begin(), mine.end(), t.begin())) return v;
    }
    return -1;
}

bool ConfigGraph::tuple_less(ConfigVertexId a, ConfigVertexId b) const {
    auto ta = tuple(a);
    auto tb = tuple(b);
    return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end());
}

std::int64_t config_vertex_estimate(const GraphMap& m, int n) {
    const FiberIndex fi = fibers(m);
    std::int64_t total = 0;
    for (const auto& fiber : fi.vertex_fibers) {
        std::int64_t ff = 1;
        std::int64_t k = static_cast<std::int64_t>(fiber.size());
        for (int j = 0; j < n; ++j) {
            ff *= (k - j);
            if (ff <= 0) {
                ff = 0;
                break;
            }
            if (ff > (std::int64_t{1} << 62) / (k + 1)) return std::int64_t{1} << 62;
        }
        total += ff;
        if (total > (std::int64_t{1} << 62)) return std::int64_t{1} << 62;
    }
    return total;
}

ConfigGraph build_config(const GraphMap& m, int n, const ConfigLimits& limits) {
    if (n < 2 || n > limits.max_arity || n > kMaxArityHard)
        throw std::invalid_argument("configuration arity out of range: " + std::to_string(n));

    const std::int64_t estimate = config_vertex_estimate(m, n);
    if (estimate > limits.max_vertices)
        throw resource_limit_error("configuration graph would have " + std::to_string(estimate) +
                                   " tuples, cap is " + std::to_string(limits.max_vertices));

    const FiberIndex fi = fibers(m);

    // Vertices: per fiber, ordered n-tuples of distinct members, lexicographic.
    std::vector<std::int32_t> flat;
    flat.reserve(static_cast<std::size_t>(estimate) * n);
    std::vector<VertexId> current(n);
    for (const auto& fiber : fi.vertex_fibers) {
        if (static_cast<int>(fiber.size()) < n) continue;
        std::vector<char> used(fiber.size(), 0);
        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == n) {
                flat.insert(flat.end(), current.begin(), current.end());
                return;
            }
            for (std::size_t i = 0; i < fiber.size(); ++i) {
                if (used[i]) continue;
                used[i] = 1;
                current[depth] = fiber[i];
                self(self, depth + 1);
                used[i] = 0;
            }
        };
        rec(rec, 0);
    }

    if (static_cast<std::int64_t>(flat.size()) != estimate * n)
        throw std::logic_error("configuration vertex count disagrees with the fiber estimate");

    ConfigGraph vertices_only(n, flat, {});

    // Edges: per image edge, ordered tuples of pairwise vertex-disjoint
    // preimage edges, with the orientation forced by the image endpoints
    // (free per coordinate over a loop image).
    const std::int64_t max_edges = 16 * limits.max_vertices + 1024;
    std::vector<ConfigEdge> edges;
    std::vector<EdgeId> chosen(n);
    std::vector<VertexId> used_vertices;
    std::vector<VertexId> utk(n), wtk(n);
    for (EdgeId c = 0; c < m.codomain.edge_count(); ++c) {
        const auto& fiber = fi.edge_fibers[c];
        if (static_cast<int>(fiber.size()) < n) continue;
        auto [p, q] = m.codomain.edge_ends(c);
        const bool image_loop = (p == q);

        auto emit = [&]() {
            if (!image_loop) {
                for (int j = 0; j < n; ++j) {
                    auto [x, y] = m.domain.edge_ends(chosen[j]);
                    if (m.vmap[x] == p) {
                        utk[j] = x;
                        wtk[j] = y;
                    } else {
                        utk[j] = y;
                        wtk[j] = x;
                    }
                }
                ConfigVertexId u = vertices_only.find_tuple(utk);
                ConfigVertexId w = vertices_only.find_tuple(wtk);
                if (u < 0 || w < 0)
                    throw std::logic_error("configuration edge endpoint tuple missing");
                edges.push_back({u, w, chosen});
                return;
            }
            // Loop image: walk every per-coordinate orientation, keep one
            // representative of each undirected edge.
            std::vector<int> flip(n, 0);
            for (;;) {
                for (int j = 0; j < n; ++j) {
                    auto [x, y] = m.domain.edge_ends(chosen[j]);
                    utk[j] = flip[j] ? y : x;
                    wtk[j] = flip[j] ? x : y;
                }
                if (std::lexicographical_compare(utk.begin(), utk.end(), wtk.begin(),
                                                 wtk.end()) ||
                    std::equal(utk.begin(), utk.end(), wtk.begin())) {
                    ConfigVertexId u = vertices_only.find_tuple(utk);
                    ConfigVertexId w = vertices_only.find_tuple(wtk);
                    if (u < 0 || w < 0)
                        throw std::logic_error("configuration edge endpoint tuple missing");
                    edges.push_back({u, w, chosen});
                }
                int j = n - 1;
                while (j >= 0) {
                    if (m.domain.is_loop(chosen[j])) {
                        --j;
                        continue;
                    }
                    if (flip[j] == 0) {
                        flip[j] = 1;
                        break;
                    }
                    flip[j] = 0;
                    --j;
                }
                if (j < 0) break;
            }
        };

        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == n) {
                emit();
                if (static_cast<std::int64_t>(edges.size()) > max_edges)
                    throw resource_limit_error("configuration graph edge count exceeds cap");
                return;
            }
            for (EdgeId e : fiber) {
                auto [x, y] = m.domain.edge_ends(e);
                bool clash = false;
                for (VertexId uv : used_vertices)
                    if (uv == x || uv == y) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
                chosen[depth] = e;
                used_vertices.push_back(x);
                if (y != x) used_vertices.push_back(y);
                self(self, depth + 1);
                used_vertices.pop_back();
                if (y != x) used_vertices.pop_back();
            }
        };
        rec(rec, 0);
    }

    return ConfigGraph(n, std::move(flat), std::move(edges));
}

ComponentMap components(const ConfigGraph& c) {
    ComponentMap cm;
    const std::int32_t nv = c.vertex_count();
    cm.comp_of.assign(nv, -1);

    std::vector<std::int32_t> provisional(nv, -1);
    std::int32_t comp_count = 0;
    std::deque<ConfigVertexId> queue;
    for (ConfigVertexId s = 0; s < nv; ++s) {
        if (provisional[s] >= 0) continue;
        provisional[s] = comp_count;
        queue.push_back(s);
        while (!queue.empty()) {
            ConfigVertexId v = queue.front();
            queue.pop_front();
            for (std::int32_t ei : c.adjacency()[v]) {
                const ConfigEdge& e = c.edges()[ei];
                ConfigVertexId w = (e.u == v) ? e.w : e.u;
                if (provisional[w] < 0) {
                    provisional[w] = comp_count;
                    queue.push_back(w);
                }
            }
        }
        ++comp_count;
    }

    // Canonical component ids follow the lex order of least member tuples.
    std::vector<ConfigVertexId> least(comp_count, -1);
    std::vector<std::int64_t> sizes(comp_count, 0);
    for (ConfigVertexId v = 0; v < nv; ++v) {
        std::int32_t k = provisional[v];
        ++sizes[k];
        if (least[k] < 0 || c.tuple_less(v, least[k])) least[k] = v;
    }
    std::vector<std::int32_t> order(comp_count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        return c.tuple_less(least[a], least[b]);
    });
    std::vector<std::int32_t> rank(comp_count);
    for (std::int32_t i = 0; i < comp_count; ++i) rank[order[i]] = i;

    cm.count = comp_count;
    cm.least_vertex.resize(comp_count);
    cm.sizes.resize(comp_count);
    for (std::int32_t k = 0; k < comp_count; ++k) {
        cm.least_vertex[rank[k]] = least[k];
        cm.sizes[rank[k]] = sizes[k];
    }
    for (ConfigVertexId v = 0; v < nv; ++v) cm.comp_of[v] = rank[provisional[v]];
    return cm;
}

ActionResult act(const ConfigGraph& c, const ComponentMap& cm, std::span<const int> sigma) {
    const int n = c.arity();
    if (static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("permutation size does not match arity");
    std::vector<char> seen(n, 0);
    for (int s : sigma) {
        if (s < 0 || s >= n || seen[s])
            throw std::invalid_argument("not a permutation of the coordinates");
        seen[s] = 1;
    }

    ActionResult out;
    out.vertex_image.resize(c.vertex_count());
    std::vector<VertexId> image(n);
    for (ConfigVertexId v = 0; v < c.vertex_count(); ++v) {
        auto t = c.tuple(v);
        for (int j = 0; j < n; ++j) image[sigma[j]] = t[j];
        ConfigVertexId w = c.find_tuple(image);
        out.vertex_image[v] = w;
    }
    out.component_image.resize(cm.count);
    for (std::int32_t k = 0; k < cm.count; ++k)
        out.component_image[k] = cm.comp_of[out.vertex_image[cm.least_vertex[k]]];
    return out;
}

ConfigVertexId shift_image(const ConfigGraph& c, ConfigVertexId v) {
    const int n = c.arity();
    auto t = c.tuple(v);
    std::vector<VertexId> shifted(n);
    shifted[0] = t[n - 1];
    for (int j = 1; j < n; ++j) shifted[j] = t[j - 1];
    return c.find_tuple(shifted);
}

std::optional<ObstructorWitness> find_obstructor_in(const ConfigGraph& c,
                                                    const ComponentMap& cm) {
    const std::int32_t nv = c.vertex_count();
    if (nv == 0) return std::nullopt;

    std::vector<ConfigVertexId> candidates;
    for (ConfigVertexId v = 0; v < nv; ++v) {
        ConfigVertexId s = shift_image(c, v);
        if (s >= 0 && cm.comp_of[s] == cm.comp_of[v]) candidates.push_back(v);
    }
    if (candidates.empty()) return std::nullopt;
    std::sort(candidates.begin(), candidates.end(),
              [&](ConfigVertexId a, ConfigVertexId b) { return c.tuple_less(a, b); });

    // Shortest over all start tuples; candidates are scanned in canonical
    // order so ties resolve to the least start.
    std::int32_t best_dist = -1;
    ConfigVertexId best_start = -1;
    std::vector<ConfigVertexId> best_path;
    std::vector<std::int32_t> dist(nv);
    std::vector<ConfigVertexId> parent(nv);
    for (ConfigVertexId start : candidates) {
        if (best_dist == 1) break;
        const ConfigVertexId target = shift_image(c, start);
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<ConfigVertexId> queue;
        dist[start] = 0;
        parent[start] = -1;
        queue.push_back(start);
        std::int32_t found = -1;
        while (!queue.empty()) {
            ConfigVertexId v = queue.front();
            queue.pop_front();
            if (v == target) {
                found = dist[v];
                break;
            }
            if (best_dist >= 0 && dist[v] + 1 >= best_dist) continue;
            for (std::int32_t ei : c.adjacency()[v]) {
                const ConfigEdge& e = c.edges()[ei];
                ConfigVertexId w = (e.u == v) ? e.w : e.u;
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if (found >= 0 && (best_dist < 0 || found < best_dist)) {
            best_dist = found;
            best_start = start;
            best_path.clear();
            for (ConfigVertexId v = target; v != -1; v = parent[v]) best_path.push_back(v);
            std::reverse(best_path.begin(), best_path.end());
        }
    }
    if (best_start < 0) return std::nullopt;

    ObstructorWitness w;
    w.arity = c.arity();
    for (ConfigVertexId v : best_path) {
        auto t = c.tuple(v);
        w.path.emplace_back(t.begin(), t.end());
    }
    return w;
}

std::optional<ObstructorWitness> find_obstructor(const GraphMap& m, int n,
                                                 const ConfigLimits& limits) {
    ConfigGraph c = build_config(m, n, limits);
    ComponentMap cm = components(c);
    return find_obstructor_in(c, cm);
}

bool p_trivial_in(const ConfigGraph& c, const ComponentMap& cm) {
    const int n = c.arity();
    if (cm.count == 0) return true;
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    while (std::next_permutation(sigma.begin(), sigma.end())) {
        ActionResult a = act(c, cm, sigma);
        for (std::int32_t k = 0; k < cm.count; ++k)
            if (a.component_image[k] == k) return false;
    }
    return true;
}

bool p_trivial(const GraphMap& m, int n, const ConfigLimits& limits) {
    ConfigGraph c = build_config(m, n, limits);
    ComponentMap cm = components(c);
    return p_trivial_in(c, cm);
}

bool witness_valid(const GraphMap& m, const ObstructorWitness& w, const ConfigLimits& limits) {
    if (w.arity < 2 || w.path.size() < 2) return false;
    const auto& first = w.path.front();
    const auto& last = w.path.back();
    if (static_cast<int>(first.size()) != w.arity) return false;
    if (first == last) return false;
    std::vector<VertexId> shifted(first.size());
    shifted[0] = first.back();
    for (std::size_t j = 1; j < first.size(); ++j) shifted[j] = first[j - 1];
    if (shifted != last) return false;

    ConfigGraph c = build_config(m, w.arity, limits);
    std::vector<ConfigVertexId> ids;
    for (const auto& t : w.path) {
        if (static_cast<int>(t.size()) != w.arity) return false;
        ConfigVertexId v = c.find_tuple(t);
        if (v < 0) return false;
        ids.push_back(v);
    }
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
        bool adjacent = false;
        for (std::int32_t ei : c.adjacency()[ids[i]]) {
            const ConfigEdge& e = c.edges()[ei];
            if ((e.u == ids[i] && e.w == ids[i + 1]) || (e.w == ids[i] && e.u == ids[i + 1])) {
                adjacent = true;
                break;
            }
        }
        if (!adjacent) return false;
    }
    return true;
}

} // namespace graphlift
