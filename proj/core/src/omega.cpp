#include "rigidkit/omega.hpp"

#include "rigidkit/errors.hpp"
#include "rigidkit/hom.hpp"
#include "rigidkit/parallel.hpp"

namespace rigidkit {

OmegaPrefix omega_prefix(std::size_t bound) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < bound; ++i)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    if (bound >= 3)
        edges.emplace_back(0, 2);
    return {bound, Digraph(bound, std::move(edges))};
}

std::vector<Vertex> omega_witness(Vertex i) {
    std::vector<Vertex> w(i + 3);
    for (Vertex j = 0; j < w.size(); ++j)
        w[j] = j;
    return w;
}

OmegaCertificate verify_omega(Vertex i, std::size_t bound) {
    if (bound < static_cast<std::size_t>(i) + 3)
        throw BoundError("prefix of size " + std::to_string(bound) + " cannot contain A(" + std::to_string(i) +
                         "), which needs " + std::to_string(i + 3) + " vertices");
    OmegaCertificate cert{i, bound, omega_witness(i), 0, true, std::nullopt};
    auto prefix = omega_prefix(bound);
    auto sub = induced_substructure(prefix.graph, cert.witness);
    cert.hom_count = for_each_hom(sub.graph, prefix.graph, {}, [&](std::span<const Vertex> image) {
        bool inclusion = true;
        for (std::size_t j = 0; j < image.size(); ++j)
            inclusion = inclusion && image[j] == cert.witness[j];
        if (!inclusion && !cert.counterexample)
            cert.counterexample = VertexMap{cert.witness, {image.begin(), image.end()}};
        return true;
    });
    cert.adequate = cert.hom_count == 1 && !cert.counterexample;
    return cert;
}

OmegaSweepReport omega_sweep(std::size_t i_max, std::size_t slack, unsigned workers) {
    OmegaSweepReport report;
    report.i_max = i_max;
    report.slack = slack;
    report.entries.resize(i_max + 1);
    parallel_for(report.entries.size(), workers, [&](std::size_t idx) {
        auto& entry = report.entries[idx];
        entry.i = static_cast<Vertex>(idx);
        for (std::size_t s = 0; s <= slack; ++s) {
            auto cert = verify_omega(entry.i, idx + 3 + s);
            entry.verdicts.push_back(cert.adequate);
            entry.hom_counts.push_back(cert.hom_count);
        }
        entry.adequate = entry.verdicts.back();
        for (bool v : entry.verdicts)
            entry.stable = entry.stable && v == entry.verdicts.front();
    });
    for (const auto& entry : report.entries)
        report.pass = report.pass && entry.adequate && entry.stable;
    return report;
}

}  // namespace rigidkit
