#pragma once

#include "qdo/model.hpp"
#include "qdo/pauli.hpp"

namespace qdo {

/// A set of mutually qubit-wise-commuting terms with the basis that covers
/// them. The basis has no identity letters; members index into the term list
/// of the PauliSum that was grouped (iteration order of PauliSum::terms()).
struct MeasurementGroup {
    std::string basis;
    std::vector<int> members;
};

/// Perfect matchings covering every edge of K_N exactly once. For odd N a
/// dummy vertex is added and its edges dropped, so rounds may leave one
/// vertex unmatched.
struct Factorization {
    int num_vertices = 0;
    std::vector<std::vector<std::pair<int, int>>> rounds;
};

struct GroupingResult {
    std::vector<MeasurementGroup> groups;
    /// Set when the structural grouping could not classify every term and the
    /// greedy fallback was used instead.
    bool fell_back_to_greedy = false;
};

/// Circle-method one-factorization of the complete graph on N vertices.
/// N-1 rounds for even N, N rounds for odd N.
Factorization round_robin_factorization(int N);

/// Structural grouping for Hamiltonians built by build_1d_hamiltonian:
/// one all-Z group plus one group per (round, k1, k2, X/Y pattern pair),
/// shared across the disjoint edges of each round.
GroupingResult exact_grouping(const PauliSum& h, const RegisterMap& layout,
                              const CouplingGraph& graph);

/// Largest-degree-first coloring of the qubit-wise anti-commutation conflict
/// graph. Ties break toward the lower term index.
std::vector<MeasurementGroup> greedy_grouping(const PauliSum& h);

/// (d-1)^r * C(N-1, r-1) + 1 with the odd-N adjustment for r = 2.
long long circuit_count_bound(int N, int d, int r = 2);

/// Throws if any term is missed/duplicated, a member is not covered by its
/// group basis, or two members of a group fail to qubit-wise commute.
void validate_grouping(const PauliSum& h, const std::vector<MeasurementGroup>& groups);

/// Ordered list of term letter-strings, defining member indices.
std::vector<std::string> term_order(const PauliSum& h);

std::string grouping_to_json(const std::vector<MeasurementGroup>& groups);

}  // namespace qdo
