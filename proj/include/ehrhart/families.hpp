#pragma once

#include "ehrhart/engine.hpp"

namespace ehrhart {

class FamilyError : public std::runtime_error
{
    public:
        explicit FamilyError(const std::string& what) : std::runtime_error(what) {}
};

/// A constructed polytope together with its closed-form Ehrhart polynomial.
template <typename P>
struct Family
{
    P polytope;
    RationalPolynomial ehrhart;
};

// ---------------------------------------------------------------------------
// Cubes, simplices, cross-polytopes, Pitman-Stanley, Birkhoff, Reeve

Family<HPolytope> unit_cube(int d);
/// Lives in R^(d+1) on the hyperplane sum x = 1.
Family<HPolytope> standard_simplex(int d);

struct CrossPolytope
{
    HPolytope polytope;
    RationalPolynomial ehrhart;
    HStarVector hstar;
};
CrossPolytope cross_polytope(int d);

Family<HPolytope> pitman_stanley(const std::vector<long>& a);
/// Compositions (i_1..i_d) of d with i_1 + ... + i_k >= k.
std::vector<std::vector<long>> pitman_stanley_indices(int d);

HPolytope birkhoff(int n);

Family<VPolytope> reeve(long m);
HPolytope reeve_h(long m);
/// Product of d-3 segments [0, d-3] with the Reeve tetrahedron T_m.
Family<HPolytope> sign_pattern_product(long m, int d);

// ---------------------------------------------------------------------------
// Flow polytopes

/// Directed acyclic graph on vertices 1..vertices; every edge (i, j) has i < j.
struct FlowGraph
{
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;

    int outdegree(int v) const;
    int indegree(int v) const;
    bool connected() const;
};

FlowGraph complete_graph(int vertices);
/// Edges (i, i+1) and (i, d+1) for i = 1..d.
FlowGraph pitman_stanley_graph(int d);
/// Planar graph whose unit flow polytope is the order polytope of Q_k.
FlowGraph order_q_graph(int k);

/// Nonnegative integer flows with netflow b (length vertices, sum zero).
Integer kostant(const FlowGraph& g, const std::vector<long>& b);
/// Netflow a_i at vertex i = 1..n and -sum(a) at the sink.
HPolytope flow_polytope(const FlowGraph& g, const std::vector<long>& a);
/// Binomial form of the Lidskii formula.
RationalPolynomial lidskii_ehrhart(const FlowGraph& g, const std::vector<long>& a);
/// Multiset form of the Lidskii formula.
RationalPolynomial lidskii_ehrhart_multiset(const FlowGraph& g, const std::vector<long>& a);

HPolytope cry(int n);
HPolytope tesler(int n);

// ---------------------------------------------------------------------------
// Order polytopes

struct Poset
{
    int size = 0;
    std::vector<std::pair<int, int>> covers;  // (a, b) means a < b

    /// Reflexive-transitive closure; throws on cycles.
    std::vector<std::vector<bool>> order() const;
};

Poset chain_poset(int n);
/// Ordinal sum of k two-element antichains; element (i, j) has index 2j + i.
Poset poset_p(int k);
/// One minimal element covered by k others.
Poset poset_q(int k);

HPolytope order_polytope(const Poset& p);
/// (1 + z)^k padded to dimension 2k.
HStarVector order_p_hstar(int k);
RationalPolynomial order_q_ehrhart(int k);

// ---------------------------------------------------------------------------
// Simplices Delta_(1,q)

struct Delta1q
{
    VPolytope polytope;
    HStarVector hstar;
    bool reflexive;
};
Delta1q delta_1q(const std::vector<long>& q);
std::vector<long> payne(long r, long s, long k);
HStarVector payne_hstar(long r, long s, long k);

struct BaseR
{
    std::vector<long> q;
    /// r = 1: the tuple would be all zeros, and the simplex is the standard one.
    bool standard_simplex = false;
};
BaseR base_r_simplex(long r, int d);

// ---------------------------------------------------------------------------
// Zonotopes

/// Generators are the columns.
RationalPolynomial zonotope_coeffs(const MatrixXz& generators);
VPolytope zonotope_vrep(const MatrixXz& generators);
VPolytope regular_permutohedron(int d);
/// Columns e_j - e_i for 1 <= i < j <= d+1.
MatrixXz permutohedron_generators(int d);
/// Spanning forests of K_n with exactly `trees` components.
Integer forest_count(int n, int trees);
/// |(P + tZ) ∩ Z^D| on the diagonal t_1 = ... = t_n = t.
RationalPolynomial gen_zonotope_ehrhart(const VPolytope& p, const MatrixXz& generators);

// ---------------------------------------------------------------------------
// Type-Y generalized permutohedra

struct BipartiteGraph
{
    int right = 0;  // d + 1
    std::vector<std::vector<int>> supports;  // I_j as 0-based right vertices

    int left() const { return static_cast<int>(supports.size()); }
};

std::vector<std::vector<long>> draconian(const BipartiteGraph& g);
RationalPolynomial typey_ehrhart(const BipartiteGraph& g, const std::vector<long>& y);
VPolytope typey_vrep(const BipartiteGraph& g, const std::vector<long>& y);
/// Left vertex j joined to right vertices j..d+1.
BipartiteGraph staircase_graph(int d);

// ---------------------------------------------------------------------------
// Cyclic and k-integral polytopes

VPolytope cyclic_polytope(int d, const std::vector<long>& u);
/// Coefficients up to t^k are projection volumes, the rest come from slices.
RationalPolynomial higher_assemble(const VPolytope& p, int k);
/// Every face of dimension <= k of a simplex has an integral affine hull.
bool is_k_integral_simplex(const VPolytope& p, int k);
/// Lattice points of tP in lexicographic order.
std::vector<VectorXz> lattice_points(const VPolytope& p, long t = 1);

// ---------------------------------------------------------------------------
// Stored counterexamples

struct StoredExample
{
    std::string name;
    Polytope polytope;
    RationalPolynomial reference;
};

HPolytope smooth_reflexive_9();
RationalPolynomial smooth_reflexive_9_ehrhart();
VPolytope mink1_p();
VPolytope mink1_q();
RationalPolynomial mink1_ehrhart();
VPolytope mink2_p();
VPolytope mink2_q();
RationalPolynomial mink2_ehrhart();
RationalPolynomial mink2_q_ehrhart();

/// smooth-reflexive-9, mink-1, mink-2 and mink-2-q.
std::vector<StoredExample> stored_counterexamples();

}  // namespace ehrhart
