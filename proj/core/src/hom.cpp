#include "rigidkit/hom.hpp"

#include "bitset.hpp"
#include "rigidkit/errors.hpp"
#include "rigidkit/parallel.hpp"

#include <algorithm>
#include <limits>

namespace rigidkit {

namespace {

using detail::Word;

// Targets up to this size get dense adjacency rows; larger targets are
// filtered through their adjacency lists instead.
constexpr std::size_t dense_target_limit = 4096;

// Read-only data shared by every searcher working on one query.
class SearchModel {
  public:
    SearchModel(const Digraph& source, const Digraph& target) : source_(source), target_(target) {
        words_ = detail::words_for(target.size());
        dense_ = target.size() <= dense_target_limit;
        if (dense_) {
            out_rows_.assign(target.size() * words_, 0);
            in_rows_.assign(target.size() * words_, 0);
            for (auto [u, v] : target.edges()) {
                detail::set_bit(out_row(u), v);
                detail::set_bit(in_row(v), u);
            }
        }
        degree_.resize(source.size());
        for (Vertex v = 0; v < source.size(); ++v)
            degree_[v] = source.out_degree(v) + source.in_degree(v);
    }

    const Digraph& source() const { return source_; }
    const Digraph& target() const { return target_; }
    std::size_t words() const { return words_; }
    bool dense() const { return dense_; }
    std::size_t degree(Vertex v) const { return degree_[v]; }
    std::span<Word> out_row(Vertex t) { return {out_rows_.data() + t * words_, words_}; }
    std::span<Word> in_row(Vertex t) { return {in_rows_.data() + t * words_, words_}; }
    std::span<const Word> out_row(Vertex t) const { return {out_rows_.data() + t * words_, words_}; }
    std::span<const Word> in_row(Vertex t) const { return {in_rows_.data() + t * words_, words_}; }

  private:
    const Digraph& source_;
    const Digraph& target_;
    std::size_t words_ = 0;
    bool dense_ = true;
    std::vector<Word> out_rows_;
    std::vector<Word> in_rows_;
    std::vector<std::size_t> degree_;
};

class Searcher {
  public:
    using Visit = std::function<bool(std::span<const Vertex>)>;

    Searcher(const SearchModel& model, std::span<const Pin> pins) : model_(model) {
        const auto& src = model.source();
        const auto& tgt = model.target();
        words_ = model.words();
        domains_.assign(src.size() * words_, 0);
        assignment_.assign(src.size(), 0);
        assigned_.assign(src.size(), false);
        anchored_.assign(src.size(), 0);
        queued_.assign(src.size(), false);
        scratch_.assign(words_, 0);

        // Vertices with out-arcs need targets with out-arcs; likewise for in-arcs.
        for (Vertex u = 0; u < src.size(); ++u) {
            auto d = domain(u);
            bool needs_out = src.out_degree(u) > 0;
            bool needs_in = src.in_degree(u) > 0;
            for (Vertex t = 0; t < tgt.size(); ++t)
                if ((!needs_out || tgt.out_degree(t) > 0) && (!needs_in || tgt.in_degree(t) > 0))
                    detail::set_bit(d, t);
        }
        for (const Pin& pin : pins) {
            auto d = domain(pin.source);
            bool keep = detail::test_bit(d, pin.target);
            std::fill(d.begin(), d.end(), 0);
            if (keep)
                detail::set_bit(d, pin.target);
        }
        for (Vertex u = 0; u < src.size(); ++u)
            if (!detail::any(domain(u)))
                feasible_ = false;
    }

    bool feasible() const { return feasible_; }

    // Variable chosen at the root; fixed for a given model and pins.
    Vertex root_vertex() const { return select(); }

    std::vector<Vertex> candidates(Vertex u) const {
        std::vector<Vertex> out;
        detail::for_each_bit(domain(u), [&](std::size_t t) { out.push_back(static_cast<Vertex>(t)); });
        return out;
    }

    // Full search; returns false if stopped by the visitor.
    bool run(const Visit& visit) {
        if (!feasible_)
            return true;
        return search(0, visit);
    }

    // Search with the root vertex fixed to one candidate.
    bool run_from(Vertex root, Vertex candidate, const Visit& visit) {
        if (!feasible_)
            return true;
        return branch(0, root, candidate, visit);
    }

  private:
    std::span<Word> domain(Vertex u) { return {domains_.data() + u * words_, words_}; }
    std::span<const Word> domain(Vertex u) const { return {domains_.data() + u * words_, words_}; }

    Vertex select() const {
        const auto n = model_.source().size();
        Vertex best = static_cast<Vertex>(n);
        std::size_t best_size = std::numeric_limits<std::size_t>::max();
        for (Vertex u = 0; u < n; ++u) {
            if (assigned_[u])
                continue;
            auto size = detail::popcount(domain(u));
            if (best == n || size < best_size ||
                (size == best_size && (anchored_[u] > anchored_[best] ||
                                       (anchored_[u] == anchored_[best] && model_.degree(u) > model_.degree(best))))) {
                best = u;
                best_size = size;
            }
        }
        return best;
    }

    bool search(std::size_t depth, const Visit& visit) {
        if (depth == assignment_.size())
            return visit(assignment_);
        Vertex u = select();
        for (Vertex t : candidates(u))
            if (!branch(depth, u, t, visit))
                return false;
        return true;
    }

    bool branch(std::size_t depth, Vertex u, Vertex t, const Visit& visit) {
        auto mark = trail_vertices_.size();
        assigned_[u] = true;
        assignment_[u] = t;
        anchor(u, 1);
        bool keep_going = true;
        if (propagate(u, t))
            keep_going = search(depth + 1, visit);
        restore(mark);
        anchor(u, -1);
        assigned_[u] = false;
        return keep_going;
    }

    void anchor(Vertex u, int delta) {
        const auto& src = model_.source();
        for (Vertex w : src.out_neighbours(u))
            anchored_[w] += delta;
        for (Vertex w : src.in_neighbours(u))
            anchored_[w] += delta;
    }

    // Forward checking from u -> t. On dense targets the changes are then
    // propagated to arc consistency: a candidate survives only while every
    // neighbour keeps a compatible candidate.
    bool propagate(Vertex u, Vertex t) {
        const auto& src = model_.source();
        queue_.clear();
        for (Vertex w : src.out_neighbours(u))
            if (!assigned_[w] && !narrow(w, t, true))
                return false;
        for (Vertex w : src.in_neighbours(u))
            if (!assigned_[w] && !narrow(w, t, false))
                return false;
        if (!model_.dense())
            return true;
        while (!queue_.empty()) {
            Vertex w = queue_.back();
            queue_.pop_back();
            queued_[w] = false;
            if (!assigned_[w] && !support(w))
                return false;
        }
        return true;
    }

    bool narrow(Vertex w, Vertex t, bool outgoing) {
        auto before = detail::popcount(domain(w));
        if (!restrict(w, t, outgoing))
            return false;
        if (detail::popcount(domain(w)) != before)
            enqueue(w);
        return true;
    }

    void enqueue(Vertex w) {
        if (!queued_[w]) {
            queued_[w] = true;
            queue_.push_back(w);
        }
    }

    // Restricts the neighbours of w to targets adjacent to some candidate of w.
    bool support(Vertex w) {
        const auto& src = model_.source();
        auto rows_union = [&](bool outgoing) {
            std::fill(scratch_.begin(), scratch_.end(), 0);
            detail::for_each_bit(domain(w), [&](std::size_t t) {
                auto row = outgoing ? model_.out_row(static_cast<Vertex>(t)) : model_.in_row(static_cast<Vertex>(t));
                for (std::size_t i = 0; i < words_; ++i)
                    scratch_[i] |= row[i];
            });
        };
        auto apply = [&](Vertex v) {
            auto d = domain(v);
            bool shrinks = false;
            for (std::size_t i = 0; i < words_ && !shrinks; ++i)
                shrinks = (d[i] & ~scratch_[i]) != 0;
            if (!shrinks)
                return true;
            trail_vertices_.push_back(v);
            trail_words_.insert(trail_words_.end(), d.begin(), d.end());
            if (!detail::and_with(d, scratch_))
                return false;
            enqueue(v);
            return true;
        };
        if (src.out_degree(w) > 0) {
            rows_union(true);
            for (Vertex v : src.out_neighbours(w))
                if (!assigned_[v] && !apply(v))
                    return false;
        }
        if (src.in_degree(w) > 0) {
            rows_union(false);
            for (Vertex v : src.in_neighbours(w))
                if (!assigned_[v] && !apply(v))
                    return false;
        }
        return true;
    }

    // D(w) &= out(t) (or in(t)); records the old domain on the trail.
    bool restrict(Vertex w, Vertex t, bool outgoing) {
        auto d = domain(w);
        trail_vertices_.push_back(w);
        trail_words_.insert(trail_words_.end(), d.begin(), d.end());
        if (model_.dense())
            return detail::and_with(d, outgoing ? model_.out_row(t) : model_.in_row(t));

        std::fill(scratch_.begin(), scratch_.end(), 0);
        const auto& tgt = model_.target();
        bool any = false;
        for (Vertex x : outgoing ? tgt.out_neighbours(t) : tgt.in_neighbours(t))
            if (detail::test_bit(d, x)) {
                detail::set_bit(scratch_, x);
                any = true;
            }
        std::copy(scratch_.begin(), scratch_.end(), d.begin());
        return any;
    }

    void restore(std::size_t mark) {
        while (trail_vertices_.size() > mark) {
            auto d = domain(trail_vertices_.back());
            auto from = trail_words_.end() - static_cast<std::ptrdiff_t>(words_);
            std::copy(from, trail_words_.end(), d.begin());
            trail_words_.erase(from, trail_words_.end());
            trail_vertices_.pop_back();
        }
    }

    const SearchModel& model_;
    std::size_t words_ = 0;
    std::vector<Word> domains_;
    std::vector<Vertex> assignment_;
    std::vector<bool> assigned_;
    std::vector<int> anchored_;
    std::vector<Vertex> queue_;
    std::vector<bool> queued_;
    std::vector<Vertex> trail_vertices_;
    std::vector<Word> trail_words_;
    std::vector<Word> scratch_;
    bool feasible_ = true;
};

void validate_pins(const Digraph& source, const Digraph& target, std::span<const Pin> pins) {
    for (const Pin& pin : pins)
        if (pin.source >= source.size() || pin.target >= target.size())
            throw OutOfRangeError("pin " + std::to_string(pin.source) + "=" + std::to_string(pin.target) +
                                  " outside the source or target vertex set");
}

// Collects up to `limit` image vectors in search order.
std::vector<std::vector<Vertex>> collect(const Digraph& source, const Digraph& target, const HomQuery& query) {
    validate_pins(source, target, query.pins);
    const auto limit = query.limit.value_or(std::numeric_limits<std::size_t>::max());
    std::vector<std::vector<Vertex>> found;
    if (limit == 0)
        return found;

    SearchModel model(source, target);
    Searcher root_searcher(model, query.pins);
    if (!root_searcher.feasible())
        return found;
    if (source.size() == 0) {
        found.emplace_back();
        return found;
    }

    auto gather = [limit](std::vector<std::vector<Vertex>>& into) {
        return [&into, limit](std::span<const Vertex> image) {
            into.emplace_back(image.begin(), image.end());
            return into.size() < limit;
        };
    };

    if (query.workers <= 1) {
        root_searcher.run(gather(found));
        return found;
    }

    // Split the root vertex's candidates; each slot is searched independently
    // and slots are concatenated in candidate order, which is exactly the
    // sequential order.
    Vertex root = root_searcher.root_vertex();
    auto cands = root_searcher.candidates(root);
    std::vector<std::vector<std::vector<Vertex>>> per_candidate(cands.size());
    parallel_for(cands.size(), query.workers, [&](std::size_t i) {
        Searcher searcher(model, query.pins);
        searcher.run_from(root, cands[i], gather(per_candidate[i]));
    });
    for (auto& slot : per_candidate)
        for (auto& image : slot) {
            if (found.size() == limit)
                return found;
            found.push_back(std::move(image));
        }
    return found;
}

}  // namespace

std::vector<VertexMap> enumerate_homs(const Digraph& source, const Digraph& target, const HomQuery& query) {
    auto images = collect(source, target, query);
    std::sort(images.begin(), images.end());
    std::vector<VertexMap> result;
    result.reserve(images.size());
    for (auto& image : images)
        result.push_back(VertexMap::from_image(std::move(image)));
    return result;
}

std::size_t count_homs(const Digraph& source, const Digraph& target, const HomQuery& query) {
    validate_pins(source, target, query.pins);
    const auto limit = query.limit.value_or(std::numeric_limits<std::size_t>::max());
    if (query.workers > 1)
        return collect(source, target, query).size();
    std::size_t count = 0;
    if (limit == 0)
        return 0;
    for_each_hom(source, target, query.pins, [&](std::span<const Vertex>) { return ++count < limit; });
    return count;
}

bool hom_exists(const Digraph& source, const Digraph& target, std::span<const Pin> pins) {
    return for_each_hom(source, target, pins, [](std::span<const Vertex>) { return false; }) > 0;
}

std::size_t for_each_hom(const Digraph& source, const Digraph& target, std::span<const Pin> pins,
                         const std::function<bool(std::span<const Vertex>)>& visit) {
    validate_pins(source, target, pins);
    SearchModel model(source, target);
    Searcher searcher(model, pins);
    if (!searcher.feasible())
        return 0;
    std::size_t visited = 0;
    if (source.size() == 0) {
        visit({});
        return 1;
    }
    searcher.run([&](std::span<const Vertex> image) {
        ++visited;
        return visit(image);
    });
    return visited;
}

bool is_homomorphism(const Digraph& source, const Digraph& target, std::span<const Vertex> image) {
    if (image.size() != source.size())
        return false;
    for (Vertex t : image)
        if (t >= target.size())
            return false;
    return std::all_of(source.edges().begin(), source.edges().end(),
                       [&](const Edge& e) { return target.has_edge(image[e.first], image[e.second]); });
}

RigidityCertificate is_rigid(const Digraph& g) {
    RigidityCertificate cert;
    for_each_hom(g, g, {}, [&](std::span<const Vertex> image) {
        ++cert.maps_examined;
        for (Vertex v = 0; v < image.size(); ++v)
            if (image[v] != v) {
                cert.rigid = false;
                cert.counterexample = VertexMap::from_image({image.begin(), image.end()});
                return false;
            }
        return true;
    });
    return cert;
}

}  // namespace rigidkit
