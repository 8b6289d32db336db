#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "longcycle/cycle.hpp"

namespace longcycle {

/// Circulant graph on Z_n: i ~ i + s for s in `connection` (taken mod n).
/// The connection set must be nonempty, avoid 0 and satisfy S = -S mod n.
Graph circulant(int n, const std::vector<int>& connection);

/// A group with a connection set, read from
///   `cyclic n: s1,s2,...`             (Z_n, connection {s_i})
///   `perm n: (0 1 2)(3 4); (0 1); ...` (the group generated by the listed
///                                      permutations of 0..n-1, which also
///                                      form the connection set)
struct GroupPresentation {
  enum class Kind { Cyclic, Permutation };
  Kind kind = Kind::Cyclic;
  int order = 0;  // n in the header line
  std::vector<int> connection;               // cyclic case
  std::vector<std::vector<int>> generators;  // permutation case, images of 0..n-1
};

/// Throws InvalidArgument("malformed group: ...") on bad text.
GroupPresentation parse_group(const std::string& text);

/// Cayley graph: vertices are the group elements (at most 128, listed in
/// breadth-first order from the identity), g ~ g∘s for s in the connection set.
/// Throws InvalidArgument for "identity in connection" or
/// "connection not closed under inverses".
Graph cayley(const GroupPresentation& gp);

struct Automorphism {
  std::vector<int> perm;  // vertex v maps to perm[v]
};

bool is_automorphism(const Graph& g, const std::vector<int>& perm);

struct AutomorphismOptions {
  std::int64_t node_budget = 10'000'000;  // refinement tree nodes
};

/// An isomorphism g -> h (perm[v] is the image of v), if any.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h, const AutomorphismOptions& opts = {});

/// Some automorphism with perm[u] = v, if any.
std::optional<Automorphism> automorphism_mapping(const Graph& g, int u, int v, const AutomorphismOptions& opts = {});

struct AutomorphismList {
  std::vector<Automorphism> automorphisms;
  bool complete = true;  // false when `limit` cut the enumeration short
};

/// Every automorphism of g (one search-tree leaf each), up to `limit`.
AutomorphismList automorphisms(const Graph& g, int limit, const AutomorphismOptions& opts = {});

/// Orbit id of each vertex (the smallest vertex of its orbit).
std::vector<int> vertex_orbits(const Graph& g, const AutomorphismOptions& opts = {});

/// True iff Aut(g) has a single vertex orbit. Throws InvalidArgument
/// ("automorphism search cap exceeded") for order > cap.
bool is_vertex_transitive(const Graph& g, int cap = 64, const AutomorphismOptions& opts = {});

/// The image of x, canonicalized. Throws InvalidArgument if a.perm is not a
/// permutation covering x.
Cycle apply_automorphism(const Cycle& x, const Automorphism& a);

struct MergeSearchOptions {
  int max_automorphisms = 5000;
  AutomorphismOptions search;
};

/// Looks for a longer cycle by merging x with its images under automorphisms:
/// maximal subpaths of X^g whose interior avoids X replace one of the two
/// arcs of X between their ends, alone or in pairs. Throws BudgetExceeded
/// (carrying |x|) when Aut(g) has more than max_automorphisms elements and no
/// improvement was found among those examined.
std::optional<Cycle> automorphism_merge_search(const Graph& g, const Cycle& x, const MergeSearchOptions& opts = {});

}  // namespace longcycle
