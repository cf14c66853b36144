#pragma once

#include "spectral_er/graph.hpp"

#include <optional>
#include <string>

namespace ser {

// Balanced complete r-partite graph T_{n,r}; larger parts come first.
Graph turan(int n, int r);

// T_{n,r} plus a star K_{1,q} inside the first (largest) part: T_{n,r,q}.
// Star center and leaves are the lowest-indexed vertices of that part.
Graph turan_plus_star(int n, int r, int q);

// Balanced complete bipartite graph plus one edge in the larger part.
Graph k_plus(int n);

enum class RemarkKind { unbalanced_plus, even_plus_minus, odd_plus_minus };

std::optional<RemarkKind> remark_kind_from_name(const std::string& name);
std::string remark_kind_name(RemarkKind kind);

// The three families with lambda > lambda(T_{n,2}) and floor(n/2)-1 triangles:
//  unbalanced_plus: K_{n/2+1,n/2-1} plus an edge in the large part (even n >= 6)
//  even_plus_minus: K_{n/2,n/2} plus an edge e1 in one part, minus a crossing
//                   edge incident to e1 (even n >= 6)
//  odd_plus_minus:  the same on K_{(n+1)/2,(n-1)/2} (odd n >= 5)
Graph remark_graph(RemarkKind kind, int n);

enum class CaseTag { G1, G2, G3, G4, G5, G6, G7, G8 };

std::optional<CaseTag> case_tag_from_name(const std::string& name);
std::string case_tag_name(CaseTag tag);

struct CaseGraphId {
    CaseTag tag;
    // G1/G3: split counts (s1, s2) of the extra A-vertices; G7/G8: (a, b, c).
    std::optional<long> a, b, c;
};

// Proof-case graphs. Common frame: apex u* adjacent to all of A (|A| = n/2+1),
// B independent with every B-vertex adjacent to a fixed co-pair subset of A.
//  G1(s1,s2): G[A] = P4 u0u1u2u3 with s1 extras pendant on u1, s2 on u2
//             (s1+s2 = n/2-3); B avoids {u1,u2}.
//  G2:        G[A] = star K_{1,n/2-1} at u2 with u0 pendant on the leaf u1
//             (G1 with every extra on u2); B avoids {u1,u2}.
//  G3(s1,s2): G[A] = P5 u0..u4 with s1 extras on u1, s2 on u3 (s1+s2 = n/2-4);
//             B avoids {u1,u3}.
//  G4:        G3 with every extra pendant on u3; B avoids {u1,u3}.
//  G5/G6:     n = 8 only; G[A] = C4 + K1; the two B-vertices avoid the same
//             opposite C4 pair (G5) or the two different pairs (G6).
//  G7(a,b,c): u1,u2 nonadjacent; a vertices adjacent to both, b pendants split
//             ceil(b/2) on u1 / floor(b/2) on u2, c isolated; B avoids {u1,u2}.
//  G8(a,b,c): as G7 but all b pendants on u1 (a+b+c = n/2-1, 2a+b = n/2, a>=2).
Graph case_graph(const CaseGraphId& id, int n);

// Unique graphs of the final |A| = t+2 case: apex over A = K_{1,t} plus one
// isolated vertex, B-vertices adjacent to A minus the star center;
// t = n/2 (even n >= 10) or (n-1)/2 (odd n >= 9).
Graph claim10_graph(bool even, int n);

// min over intra-part non-edges e of T_{n,r} of the number of copies of f in
// T_{n,r}+e; this is c(n,F) for color-critical F with chi(F) = r+1.
long long min_added_edge_copies(int n, int r, const Graph& f);

}  // namespace ser
