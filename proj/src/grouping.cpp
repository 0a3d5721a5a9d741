#include "qdo/grouping.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <json.hpp>

namespace qdo {

Factorization round_robin_factorization(int N) {
    if (N < 2) throw std::domain_error("round_robin_factorization: N must be >= 2");
    const bool odd = (N % 2) != 0;
    const int n = odd ? N + 1 : N;  // dummy vertex = N when odd
    Factorization out;
    out.num_vertices = N;
    // Circle method: vertex n-1 is fixed, the others rotate.
    for (int round = 0; round < n - 1; ++round) {
        std::vector<std::pair<int, int>> matching;
        auto push = [&](int a, int b) {
            if (a == N || b == N) return;  // dummy edge
            matching.emplace_back(std::min(a, b), std::max(a, b));
        };
        push(round % (n - 1), n - 1);
        for (int i = 1; i < n / 2; ++i) {
            const int a = (round + i) % (n - 1);
            const int b = (round - i + (n - 1)) % (n - 1);
            push(a, b);
        }
        std::sort(matching.begin(), matching.end());
        out.rounds.push_back(std::move(matching));
    }
    return out;
}

std::vector<std::string> term_order(const PauliSum& h) {
    std::vector<std::string> out;
    out.reserve(h.size());
    for (const auto& [letters, c] : h.terms()) out.push_back(letters);
    return out;
}

namespace {

bool is_iz_only(const std::string& letters) {
    return std::all_of(letters.begin(), letters.end(),
                       [](char c) { return c == 'I' || c == 'Z'; });
}

// X/Y letters on bits 0..k, I/Z above; returns k+1 (prefix length) or -1.
int xy_prefix_length(const std::string& reg) {
    std::size_t i = 0;
    while (i < reg.size() && (reg[i] == 'X' || reg[i] == 'Y')) ++i;
    if (i == 0) return -1;
    for (std::size_t j = i; j < reg.size(); ++j)
        if (reg[j] == 'X' || reg[j] == 'Y') return -1;
    return static_cast<int>(i);
}

}  // namespace

GroupingResult exact_grouping(const PauliSum& h, const RegisterMap& layout,
                              const CouplingGraph& graph) {
    graph.validate();
    const int N = layout.num_oscillators;
    const int m = layout.qubits_per_oscillator;
    const auto terms = term_order(h);

    std::map<std::pair<int, int>, int> edge_round;
    Factorization fact;
    if (N >= 2) {
        fact = round_robin_factorization(N);
        for (std::size_t r = 0; r < fact.rounds.size(); ++r)
            for (const auto& e : fact.rounds[r])
                edge_round[e] = static_cast<int>(r);
    }

    GroupingResult result;
    std::map<std::string, int> basis_index;
    auto group_for_basis = [&](const std::string& basis) -> MeasurementGroup& {
        auto [it, inserted] = basis_index.try_emplace(
            basis, static_cast<int>(result.groups.size()));
        if (inserted) result.groups.push_back({basis, {}});
        return result.groups[it->second];
    };

    const std::string all_z(layout.total_qubits(), 'Z');
    group_for_basis(all_z);  // the Z group comes first

    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string& letters = terms[t];
        if (is_iz_only(letters)) {
            group_for_basis(all_z).members.push_back(static_cast<int>(t));
            continue;
        }
        // Expect X/Y structure on exactly two oscillator registers.
        std::vector<int> active;
        for (int osc = 0; osc < N; ++osc) {
            const std::string reg = letters.substr(osc * m, m);
            if (!is_iz_only(reg)) active.push_back(osc);
        }
        bool structured = active.size() == 2;
        std::array<std::string, 2> patterns;
        if (structured) {
            for (int s = 0; s < 2; ++s) {
                const std::string reg = letters.substr(active[s] * m, m);
                const int len = xy_prefix_length(reg);
                if (len < 0) {
                    structured = false;
                    break;
                }
                patterns[s] = reg.substr(0, len);
            }
        }
        auto round_it = structured
                            ? edge_round.find({active[0], active[1]})
                            : edge_round.end();
        if (!structured || round_it == edge_round.end()) {
            // Structure does not match build_1d_hamiltonian output.
            result.groups = greedy_grouping(h);
            result.fell_back_to_greedy = true;
            return result;
        }
        // Basis: Z everywhere, the pattern pair replicated on every disjoint
        // edge of the round.
        std::string basis = all_z;
        for (const auto& [a, b] : fact.rounds[round_it->second]) {
            for (std::size_t bit = 0; bit < patterns[0].size(); ++bit)
                basis[layout.qubit(a, static_cast<int>(bit))] = patterns[0][bit];
            for (std::size_t bit = 0; bit < patterns[1].size(); ++bit)
                basis[layout.qubit(b, static_cast<int>(bit))] = patterns[1][bit];
        }
        group_for_basis(basis).members.push_back(static_cast<int>(t));
    }

    // Drop bases that ended up with no members (possible when gamma vanishes
    // on some edges).
    std::erase_if(result.groups,
                  [](const MeasurementGroup& g) { return g.members.empty(); });
    return result;
}

std::vector<MeasurementGroup> greedy_grouping(const PauliSum& h) {
    const auto terms = term_order(h);
    const int n = static_cast<int>(terms.size());
    if (n == 0) return {};

    std::vector<std::vector<int>> conflicts(n);
    std::vector<int> degree(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!qubit_wise_commute(terms[i], terms[j])) {
                conflicts[i].push_back(j);
                conflicts[j].push_back(i);
            }
        }
    }
    for (int i = 0; i < n; ++i) degree[i] = static_cast<int>(conflicts[i].size());

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (degree[a] != degree[b]) return degree[a] > degree[b];
        return a < b;
    });

    std::vector<int> color(n, -1);
    int num_colors = 0;
    for (int v : order) {
        std::set<int> used;
        for (int u : conflicts[v])
            if (color[u] >= 0) used.insert(color[u]);
        int c = 0;
        while (used.count(c)) ++c;
        color[v] = c;
        num_colors = std::max(num_colors, c + 1);
    }

    std::vector<MeasurementGroup> groups(num_colors);
    for (int i = 0; i < n; ++i) groups[color[i]].members.push_back(i);
    for (auto& g : groups) {
        std::string basis(h.num_qubits(), 'I');
        for (int idx : g.members) {
            const std::string& letters = terms[idx];
            for (std::size_t q = 0; q < letters.size(); ++q)
                if (letters[q] != 'I') basis[q] = letters[q];
        }
        std::replace(basis.begin(), basis.end(), 'I', 'Z');
        g.basis = std::move(basis);
    }
    return groups;
}

long long circuit_count_bound(int N, int d, int r) {
    if (N < 2 || r < 2) throw std::domain_error("circuit_count_bound: N, r must be >= 2");
    qubits_for_dimension(d);
    long long per_edge = 1;
    for (int i = 0; i < r; ++i) per_edge *= (d - 1);
    if (r == 2) {
        const long long rounds = (N % 2 == 0) ? N - 1 : N;
        return per_edge * rounds + 1;
    }
    // Corollary bound for higher-order coupling; no construction is provided.
    long long binom = 1;
    for (int i = 1; i < r; ++i) binom = binom * (N - i) / i;
    return per_edge * binom + 1;
}

void validate_grouping(const PauliSum& h, const std::vector<MeasurementGroup>& groups) {
    const auto terms = term_order(h);
    std::vector<int> seen(terms.size(), 0);
    for (const auto& g : groups) {
        if (g.basis.size() != h.num_qubits() ||
            g.basis.find('I') != std::string::npos)
            throw std::logic_error("validate_grouping: bad basis");
        for (int idx : g.members) {
            if (idx < 0 || idx >= static_cast<int>(terms.size()))
                throw std::logic_error("validate_grouping: member out of range");
            ++seen[idx];
            const std::string& letters = terms[idx];
            for (std::size_t q = 0; q < letters.size(); ++q)
                if (letters[q] != 'I' && letters[q] != g.basis[q])
                    throw std::logic_error("validate_grouping: member not covered");
        }
        for (std::size_t a = 0; a < g.members.size(); ++a)
            for (std::size_t b = a + 1; b < g.members.size(); ++b)
                if (!qubit_wise_commute(terms[g.members[a]], terms[g.members[b]]))
                    throw std::logic_error("validate_grouping: members conflict");
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != 1)
            throw std::logic_error("validate_grouping: term covered " +
                                   std::to_string(seen[i]) + " times");
}

std::string grouping_to_json(const std::vector<MeasurementGroup>& groups) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& g : groups)
        arr.push_back({{"basis", g.basis}, {"members", g.members}});
    return arr.dump(2);
}

}  // namespace qdo
