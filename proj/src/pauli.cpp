#include "qdo/pauli.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace qdo {

int PauliString::weight() const {
    return static_cast<int>(
        std::count_if(letters.begin(), letters.end(), [](char c) { return c != 'I'; }));
}

bool is_valid_pauli_letters(const std::string& letters) {
    return std::all_of(letters.begin(), letters.end(), [](char c) {
        return c == 'I' || c == 'X' || c == 'Y' || c == 'Z';
    });
}

bool qubit_wise_commute(const std::string& p, const std::string& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("qubit_wise_commute: length mismatch");
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != 'I' && q[i] != 'I' && p[i] != q[i]) return false;
    }
    return true;
}

std::pair<cplx, char> pauli_letter_product(char a, char b) {
    static const cplx one{1, 0}, im{0, 1};
    if (a == 'I') return {one, b};
    if (b == 'I') return {one, a};
    if (a == b) return {one, 'I'};
    // XY=iZ, YZ=iX, ZX=iY and the reversed products pick up a minus sign.
    if (a == 'X' && b == 'Y') return {im, 'Z'};
    if (a == 'Y' && b == 'Z') return {im, 'X'};
    if (a == 'Z' && b == 'X') return {im, 'Y'};
    if (a == 'Y' && b == 'X') return {-im, 'Z'};
    if (a == 'Z' && b == 'Y') return {-im, 'X'};
    if (a == 'X' && b == 'Z') return {-im, 'Y'};
    throw std::invalid_argument("pauli_letter_product: invalid letters");
}

cplx PauliSum::coefficient(const std::string& letters) const {
    auto it = terms_.find(letters);
    return it == terms_.end() ? cplx{0, 0} : it->second;
}

void PauliSum::add_term(const std::string& letters, cplx coefficient) {
    if (!is_valid_pauli_letters(letters))
        throw std::invalid_argument("PauliSum: invalid letters " + letters);
    if (num_qubits_ == 0) num_qubits_ = letters.size();
    if (letters.size() != num_qubits_)
        throw std::invalid_argument("PauliSum: term length mismatch");
    terms_[letters] += coefficient;
}

void PauliSum::add(const PauliSum& other) {
    for (const auto& [letters, c] : other.terms_) add_term(letters, c);
}

void PauliSum::scale(cplx factor) {
    for (auto& [letters, c] : terms_) c *= factor;
}

PauliSum PauliSum::multiply(const PauliSum& other) const {
    if (num_qubits_ != other.num_qubits_ && !terms_.empty() && !other.terms_.empty())
        throw std::invalid_argument("PauliSum::multiply: qubit count mismatch");
    PauliSum out(num_qubits_);
    for (const auto& [pa, ca] : terms_) {
        for (const auto& [pb, cb] : other.terms_) {
            cplx phase{1, 0};
            std::string prod(pa.size(), 'I');
            for (std::size_t i = 0; i < pa.size(); ++i) {
                auto [ph, letter] = pauli_letter_product(pa[i], pb[i]);
                phase *= ph;
                prod[i] = letter;
            }
            out.add_term(prod, phase * ca * cb);
        }
    }
    out.simplify();
    return out;
}

void PauliSum::simplify() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < kPruneThreshold)
            it = terms_.erase(it);
        else
            ++it;
    }
}

bool PauliSum::is_hermitian(double tol) const {
    return std::all_of(terms_.begin(), terms_.end(), [tol](const auto& kv) {
        return std::abs(kv.second.imag()) <= tol;
    });
}

std::string PauliSum::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [letters, c] : terms_) {
        arr.push_back({{"letters", letters}, {"re", c.real()}, {"im", c.imag()}});
    }
    return arr.dump(2);
}

PauliSum PauliSum::from_json(const std::string& text) {
    auto arr = nlohmann::json::parse(text);
    PauliSum out;
    for (const auto& item : arr) {
        out.add_term(item.at("letters").get<std::string>(),
                     {item.at("re").get<double>(), item.value("im", 0.0)});
    }
    out.simplify();
    return out;
}

void apply_pauli_term(const std::string& letters, cplx coefficient,
                      const std::vector<cplx>& in, std::vector<cplx>& out) {
    const std::size_t n = in.size();
    if (n != (std::size_t{1} << letters.size()))
        throw std::invalid_argument("apply_pauli_term: dimension mismatch");
    out.assign(n, cplx{0, 0});
    std::size_t flip_mask = 0;
    std::size_t z_mask = 0;
    cplx base = coefficient;
    for (std::size_t q = 0; q < letters.size(); ++q) {
        switch (letters[q]) {
            case 'X': flip_mask |= std::size_t{1} << q; break;
            case 'Y':
                flip_mask |= std::size_t{1} << q;
                z_mask |= std::size_t{1} << q;
                base *= cplx{0, 1};
                break;
            case 'Z': z_mask |= std::size_t{1} << q; break;
            default: break;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        // Y contributes i*(-1)^bit on the source index, Z contributes (-1)^bit.
        const int parity = __builtin_popcountll(i & z_mask) & 1;
        const cplx amp = parity ? -base * in[i] : base * in[i];
        out[i ^ flip_mask] += amp;
    }
}

cplx pauli_term_expectation(const std::string& letters,
                            const std::vector<cplx>& psi) {
    std::vector<cplx> tmp;
    apply_pauli_term(letters, cplx{1, 0}, psi, tmp);
    cplx acc{0, 0};
    for (std::size_t i = 0; i < psi.size(); ++i) acc += std::conj(psi[i]) * tmp[i];
    return acc;
}

cplx pauli_expectation(const PauliSum& sum, const std::vector<cplx>& psi) {
    cplx acc{0, 0};
    for (const auto& [letters, c] : sum.terms()) {
        acc += c * pauli_term_expectation(letters, psi);
    }
    return acc;
}

}  // namespace qdo
