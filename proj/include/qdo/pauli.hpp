#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdo {

using cplx = std::complex<double>;

/// Letters are over {I, X, Y, Z}, stored qubit-0-first.
struct PauliString {
    std::string letters;
    cplx coefficient{1.0, 0.0};

    std::size_t num_qubits() const { return letters.size(); }

    /// Number of non-identity letters.
    int weight() const;
};

bool is_valid_pauli_letters(const std::string& letters);

/// True iff at every position the letters are equal or at least one is I.
bool qubit_wise_commute(const std::string& p, const std::string& q);

/// Single-letter product a*b -> (phase, letter). Phase is one of {1, i, -1, -i}.
std::pair<cplx, char> pauli_letter_product(char a, char b);

/// A finite map from letter-sequence to complex coefficient. Terms with
/// |coefficient| below the pruning threshold are dropped by simplify().
class PauliSum {
  public:
    static constexpr double kPruneThreshold = 1e-12;

    PauliSum() = default;
    explicit PauliSum(std::size_t num_qubits) : num_qubits_(num_qubits) {}

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    const std::map<std::string, cplx>& terms() const { return terms_; }

    cplx coefficient(const std::string& letters) const;

    void add_term(const std::string& letters, cplx coefficient);
    void add(const PauliSum& other);
    void scale(cplx factor);

    /// Full Pauli product, including i/-i phases from same-qubit letter
    /// products.
    PauliSum multiply(const PauliSum& other) const;

    /// Drop terms with |coefficient| < kPruneThreshold.
    void simplify();

    /// True iff every coefficient is real to within tol.
    bool is_hermitian(double tol = 1e-12) const;

    std::string to_json() const;
    static PauliSum from_json(const std::string& text);

  private:
    std::size_t num_qubits_ = 0;
    std::map<std::string, cplx> terms_;
};

/// Apply a single Pauli term to a state vector (qubit q = bit q of the index).
void apply_pauli_term(const std::string& letters, cplx coefficient,
                      const std::vector<cplx>& in, std::vector<cplx>& out);

/// <psi| sum |psi>
cplx pauli_expectation(const PauliSum& sum, const std::vector<cplx>& psi);

/// <psi| P |psi> for a single term with unit coefficient.
cplx pauli_term_expectation(const std::string& letters,
                            const std::vector<cplx>& psi);

}  // namespace qdo
