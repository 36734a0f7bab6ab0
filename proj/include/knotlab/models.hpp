#ifndef KNOTLAB_MODELS_HPP
#define KNOTLAB_MODELS_HPP

#include <functional>
#include <string>
#include <vector>

#include "knotlab/graph.hpp"
#include "knotlab/rng.hpp"

namespace knotlab {

/// The four random-graph models:
///   ErdosRenyi(n, M)      uniform over labelled graphs with exactly M edges
///   Gilbert(n, p)         each pair an edge independently with probability p
///   UniformLabelled(n)    every labelled graph equally likely (= Gilbert(n, 1/2))
///   UniformUnlabelled(n)  every isomorphism class equally likely
struct ModelSpec {
    enum class Kind { ErdosRenyi, Gilbert, UniformLabelled, UniformUnlabelled };

    Kind kind = Kind::Gilbert;
    int n = 0;
    long long M = 0;  // ErdosRenyi only
    double p = 0.0;   // Gilbert only

    static ModelSpec erdos_renyi(int n, long long M);
    static ModelSpec gilbert(int n, double p);
    static ModelSpec uniform_labelled(int n);
    static ModelSpec uniform_unlabelled(int n);

    std::string describe() const;
    void validate() const;
};

/// Largest order for which the unlabelled universe is enumerated exactly.
/// Gamma_9 = 274,668 classes; beyond that callers use the |Aut|-weighted
/// labelled estimator (see unlabelled_weight).
inline constexpr int kEnumerationCap = 9;

/// Draw the trial-th sample. Pure in (spec, seed, trial); bit-identical
/// across runs and platforms.
Graph sample(const ModelSpec& spec, Seed seed, uint64_t trial);

/// One representative per isomorphism class of order n, in a fixed
/// deterministic order. Returns Gamma_n.
long long enumerate_unlabelled(int n, const std::function<void(const Graph&)>& visit);

/// Gamma_n without the stream.
long long count_unlabelled(int n);

/// Gamma_{n,k}: isomorphism classes of order n with exactly k edges.
long long count_unlabelled_by_size(int n, int k);

/// Cached catalog of all order-n class representatives (n <= kEnumerationCap).
const std::vector<Graph>& unlabelled_catalog(int n);

/// Importance weight converting labelled-uniform sampling to
/// unlabelled-uniform expectations: returns |Aut(G)|. For a class function f,
/// E_lab[f * w] / E_lab[w] = E_unl[f].
long long unlabelled_weight(const Graph& g);

}  // namespace knotlab

#endif
