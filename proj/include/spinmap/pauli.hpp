// Copyright 2026 The spinmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// Symbolic algebra of multi-qubit Pauli operators.
//
// Conventions used throughout the library:
//   * qubit 0 is the most significant tensor factor, so in a 2^n amplitude
//     array qubit q lives in bit (n - 1 - q) of the basis index;
//   * |0> = spin up, Z|0> = +|0>;
//   * sigma_+ = (X + iY)/2 = |0><1| and sigma_- = (X - iY)/2 = |1><0|.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"

namespace spinmap {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char to_char(PauliLetter p) {
    constexpr char names[] = {'I', 'X', 'Y', 'Z'};
    return names[static_cast<int>(p)];
}

inline PauliLetter letter_from_char(char c) {
    switch (c) {
    case 'I':
        return PauliLetter::I;
    case 'X':
        return PauliLetter::X;
    case 'Y':
        return PauliLetter::Y;
    case 'Z':
        return PauliLetter::Z;
    default:
        throw InvalidArgument(std::string("unknown Pauli letter '") + c + "'");
    }
}

/// Exact powers of i.
inline cplx i_power(int k) {
    switch (((k % 4) + 4) % 4) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

/// a * b = i^k * c. Returns {k, c}.
constexpr std::pair<int, PauliLetter> multiply_letters(PauliLetter a, PauliLetter b) {
    if (a == PauliLetter::I) {
        return {0, b};
    }
    if (b == PauliLetter::I || a == b) {
        return {0, a == b ? PauliLetter::I : a};
    }
    const auto ia = static_cast<int>(a);
    const auto ib = static_cast<int>(b);
    const auto c = static_cast<PauliLetter>(ia ^ ib);
    // XY = iZ, YZ = iX, ZX = iY; reversed order picks up -i.
    const bool cyclic = (ib - ia + 3) % 3 == 1;
    return {cyclic ? 1 : 3, c};
}

class PauliString {
  public:
    PauliString() = default;

    explicit PauliString(std::size_t num_qubits, cplx phase = 1.0)
        : letters_(num_qubits, PauliLetter::I), phase_(phase) {
        check_phase();
    }

    PauliString(std::size_t num_qubits,
                std::initializer_list<std::pair<std::size_t, PauliLetter>> letters,
                cplx phase = 1.0)
        : PauliString(num_qubits, phase) {
        for (const auto &[q, p] : letters) {
            set(q, p);
        }
    }

    /// Parses "X0 Z1 X2" (letter + qubit index, whitespace separated). An
    /// optional leading sign token "+", "-", "+i" or "-i" sets the phase.
    static PauliString parse(std::string_view text, std::size_t num_qubits) {
        PauliString out(num_qubits);
        std::istringstream in{std::string(text)};
        std::string token;
        bool first = true;
        while (in >> token) {
            if (first && (token == "+" || token == "-" || token == "+i" || token == "-i")) {
                out.phase_ = token == "+" ? cplx{1.0}
                             : token == "-" ? cplx{-1.0}
                             : token == "+i" ? cplx{0.0, 1.0}
                                             : cplx{0.0, -1.0};
                first = false;
                continue;
            }
            first = false;
            if (token.size() < 2) {
                throw InvalidArgument("malformed Pauli token '" + token + "'");
            }
            const PauliLetter letter = letter_from_char(token[0]);
            std::size_t q = 0;
            for (std::size_t k = 1; k < token.size(); ++k) {
                if (token[k] < '0' || token[k] > '9') {
                    throw InvalidArgument("malformed Pauli token '" + token + "'");
                }
                q = q * 10 + static_cast<std::size_t>(token[k] - '0');
            }
            if (out.letter(q) != PauliLetter::I) {
                throw InvalidArgument("qubit " + std::to_string(q) + " repeated in '" +
                                      std::string(text) + "'");
            }
            out.set(q, letter);
        }
        return out;
    }

    std::size_t num_qubits() const { return letters_.size(); }
    cplx phase() const { return phase_; }

    PauliLetter letter(std::size_t q) const {
        check_index(q);
        return letters_[q];
    }

    void set(std::size_t q, PauliLetter p) {
        check_index(q);
        letters_[q] = p;
    }

    void set_phase(cplx phase) {
        phase_ = phase;
        check_phase();
    }

    const std::vector<PauliLetter> &letters() const { return letters_; }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t q = 0; q < letters_.size(); ++q) {
            if (letters_[q] != PauliLetter::I) {
                out.push_back(q);
            }
        }
        return out;
    }

    std::size_t weight() const {
        return static_cast<std::size_t>(std::count_if(
            letters_.begin(), letters_.end(), [](PauliLetter p) { return p != PauliLetter::I; }));
    }

    bool is_identity() const { return weight() == 0; }

    /// Same letters with phase +1.
    PauliString canonical() const {
        PauliString out = *this;
        out.phase_ = 1.0;
        return out;
    }

    /// Pads with identity factors up to `num_qubits`.
    PauliString embedded(std::size_t num_qubits) const {
        if (num_qubits < letters_.size()) {
            throw DimensionError("cannot embed a Pauli string into a smaller register");
        }
        PauliString out = *this;
        out.letters_.resize(num_qubits, PauliLetter::I);
        return out;
    }

    /// Bit masks over the basis index (qubit q <-> bit n-1-q). X and Y set
    /// the flip mask, Y and Z set the sign mask.
    std::uint64_t x_mask() const { return mask([](PauliLetter p) {
        return p == PauliLetter::X || p == PauliLetter::Y; }); }
    std::uint64_t z_mask() const { return mask([](PauliLetter p) {
        return p == PauliLetter::Z || p == PauliLetter::Y; }); }
    int y_count() const {
        return static_cast<int>(std::count(letters_.begin(), letters_.end(), PauliLetter::Y));
    }

    /// Debug rendering, e.g. "+1.0 X0 Z1 X2".
    std::string to_string() const {
        std::string out = format_phase(phase_);
        if (is_identity()) {
            return out + " I";
        }
        for (std::size_t q = 0; q < letters_.size(); ++q) {
            if (letters_[q] != PauliLetter::I) {
                out += ' ';
                out += to_char(letters_[q]);
                out += std::to_string(q);
            }
        }
        return out;
    }

    /// Letters only, e.g. "X0 Z1 X2" ("I" for the identity).
    std::string letters_string() const {
        std::string out;
        for (std::size_t q = 0; q < letters_.size(); ++q) {
            if (letters_[q] != PauliLetter::I) {
                if (!out.empty()) {
                    out += ' ';
                }
                out += to_char(letters_[q]);
                out += std::to_string(q);
            }
        }
        return out.empty() ? "I" : out;
    }

    friend bool operator==(const PauliString &a, const PauliString &b) {
        return a.letters_ == b.letters_ && a.phase_ == b.phase_;
    }

  private:
    void check_index(std::size_t q) const {
        if (q >= letters_.size()) {
            throw InvalidArgument("qubit index " + std::to_string(q) + " out of range for " +
                                  std::to_string(letters_.size()) + " qubits");
        }
    }

    void check_phase() const {
        if (std::abs(std::abs(phase_) - 1.0) > 1e-12) {
            throw InvalidArgument("Pauli string phase must have unit modulus");
        }
    }

    template <class Pred> std::uint64_t mask(Pred pred) const {
        if (letters_.size() > 63) {
            throw DimensionError("bit masks are limited to 63 qubits");
        }
        std::uint64_t m = 0;
        const std::size_t n = letters_.size();
        for (std::size_t q = 0; q < n; ++q) {
            if (pred(letters_[q])) {
                m |= std::uint64_t{1} << (n - 1 - q);
            }
        }
        return m;
    }

    static std::string format_phase(cplx phase) {
        if (phase == cplx{1.0}) {
            return "+1.0";
        }
        if (phase == cplx{-1.0}) {
            return "-1.0";
        }
        if (phase == cplx{0.0, 1.0}) {
            return "+1.0i";
        }
        if (phase == cplx{0.0, -1.0}) {
            return "-1.0i";
        }
        std::ostringstream os;
        os << '(' << phase.real() << ',' << phase.imag() << ')';
        return os.str();
    }

    std::vector<PauliLetter> letters_;
    cplx phase_{1.0};
};

inline void check_same_size(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": qubit counts differ (" + std::to_string(a) +
                             " vs " + std::to_string(b) + ")");
    }
}

inline PauliString multiply(const PauliString &a, const PauliString &b) {
    check_same_size(a.num_qubits(), b.num_qubits(), "multiply");
    PauliString out(a.num_qubits());
    int ipow = 0;
    for (std::size_t q = 0; q < a.num_qubits(); ++q) {
        const auto [k, c] = multiply_letters(a.letter(q), b.letter(q));
        ipow += k;
        out.set(q, c);
    }
    out.set_phase(a.phase() * b.phase() * i_power(ipow));
    return out;
}

inline PauliString operator*(const PauliString &a, const PauliString &b) { return multiply(a, b); }

inline bool commutes(const PauliString &a, const PauliString &b) {
    check_same_size(a.num_qubits(), b.num_qubits(), "commutes");
    std::size_t clashes = 0;
    for (std::size_t q = 0; q < a.num_qubits(); ++q) {
        const PauliLetter x = a.letter(q);
        const PauliLetter y = b.letter(q);
        if (x != PauliLetter::I && y != PauliLetter::I && x != y) {
            ++clashes;
        }
    }
    return clashes % 2 == 0;
}

/// Canonical term order: by support (lexicographic on the index list), then
/// by the letters on that support. Phases are ignored.
struct CanonicalOrder {
    bool operator()(const PauliString &a, const PauliString &b) const {
        const auto sa = a.support();
        const auto sb = b.support();
        if (sa != sb) {
            return sa < sb;
        }
        for (std::size_t q : sa) {
            if (a.letter(q) != b.letter(q)) {
                return a.letter(q) < b.letter(q);
            }
        }
        return false;
    }
};

/// Complex-weighted sum of phase-free Pauli strings.
class PauliSum {
  public:
    using TermMap = std::map<PauliString, cplx, CanonicalOrder>;

    PauliSum() = default;
    explicit PauliSum(std::size_t num_qubits) : num_qubits_(num_qubits) {}

    PauliSum(const PauliString &s, cplx coeff = 1.0) : num_qubits_(s.num_qubits()) {
        add(s, coeff);
    }

    static PauliSum identity(std::size_t num_qubits, cplx coeff = 1.0) {
        return PauliSum(PauliString(num_qubits), coeff);
    }

    std::size_t num_qubits() const { return num_qubits_; }
    const TermMap &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Adds coeff * s; the string phase is folded into the coefficient.
    /// Terms whose merged coefficient is exactly zero are dropped.
    void add(const PauliString &s, cplx coeff = 1.0) {
        check_same_size(num_qubits_, s.num_qubits(), "PauliSum::add");
        const cplx c = coeff * s.phase();
        if (c == cplx{0.0}) {
            return;
        }
        const PauliString key = s.canonical();
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
            return;
        }
        it->second += c;
        if (it->second == cplx{0.0}) {
            terms_.erase(it);
        }
    }

    cplx coefficient(const PauliString &s) const {
        const auto it = terms_.find(s.canonical());
        return it == terms_.end() ? cplx{0.0} : it->second * std::conj(s.phase());
    }

    /// Drops terms with |coefficient| <= tol and snaps real/imaginary parts
    /// below tol to zero.
    PauliSum chopped(double tol = 1e-14) const {
        PauliSum out(num_qubits_);
        for (const auto &[s, c] : terms_) {
            cplx v{std::abs(c.real()) <= tol ? 0.0 : c.real(),
                   std::abs(c.imag()) <= tol ? 0.0 : c.imag()};
            if (v != cplx{0.0}) {
                out.terms_.emplace(s, v);
            }
        }
        return out;
    }

    bool is_hermitian(double tol = 1e-12) const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [tol](const auto &kv) { return std::abs(kv.second.imag()) <= tol; });
    }

    PauliSum adjoint() const {
        PauliSum out(num_qubits_);
        for (const auto &[s, c] : terms_) {
            out.terms_.emplace(s, std::conj(c));
        }
        return out;
    }

    PauliSum embedded(std::size_t num_qubits) const {
        PauliSum out(num_qubits);
        for (const auto &[s, c] : terms_) {
            out.add(s.embedded(num_qubits), c);
        }
        return out;
    }

    /// Sum of |coefficient|; an upper bound on the operator norm.
    double norm_bound() const {
        double total = 0.0;
        for (const auto &kv : terms_) {
            total += std::abs(kv.second);
        }
        return total;
    }

    PauliSum &operator+=(const PauliSum &o) {
        check_same_size(num_qubits_, o.num_qubits_, "PauliSum +");
        for (const auto &[s, c] : o.terms_) {
            add(s, c);
        }
        return *this;
    }

    PauliSum &operator-=(const PauliSum &o) { return *this += o * cplx{-1.0}; }

    PauliSum &operator*=(cplx k) {
        if (k == cplx{0.0}) {
            terms_.clear();
            return *this;
        }
        for (auto &kv : terms_) {
            kv.second *= k;
        }
        return *this;
    }

    friend PauliSum operator+(PauliSum a, const PauliSum &b) { return a += b; }
    friend PauliSum operator-(PauliSum a, const PauliSum &b) { return a -= b; }
    friend PauliSum operator*(PauliSum a, cplx k) { return a *= k; }
    friend PauliSum operator*(cplx k, PauliSum a) { return a *= k; }

    friend PauliSum operator*(const PauliSum &a, const PauliSum &b) {
        check_same_size(a.num_qubits_, b.num_qubits_, "PauliSum *");
        PauliSum out(a.num_qubits_);
        for (const auto &[sa, ca] : a.terms_) {
            for (const auto &[sb, cb] : b.terms_) {
                out.add(multiply(sa, sb), ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const PauliSum &a, const PauliSum &b) {
        return a.num_qubits_ == b.num_qubits_ && a.terms_ == b.terms_;
    }

    /// One term per line, e.g. "(0.5,0) X0 X1".
    std::string to_string() const {
        std::ostringstream os;
        for (const auto &[s, c] : terms_) {
            os << '(' << c.real() << ',' << c.imag() << ") " << s.letters_string() << '\n';
        }
        return os.str();
    }

  private:
    std::size_t num_qubits_ = 0;
    TermMap terms_;
};

/// Dense 2^n x 2^n matrix of a Pauli sum.
inline Matrix to_matrix(const PauliSum &s, std::size_t oracle_limit = default_oracle_limit()) {
    const std::size_t n = s.num_qubits();
    check_oracle_limit(n, oracle_limit, "to_matrix");
    const std::uint64_t dim = std::uint64_t{1} << n;
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto &[p, c] : s.terms()) {
        const std::uint64_t x = p.x_mask();
        const std::uint64_t z = p.z_mask();
        const cplx base = c * i_power(p.y_count());
        for (std::uint64_t col = 0; col < dim; ++col) {
            const double sign = (std::popcount(col & z) % 2 == 0) ? 1.0 : -1.0;
            m(static_cast<Eigen::Index>(col ^ x), static_cast<Eigen::Index>(col)) += sign * base;
        }
    }
    return m;
}

inline Matrix to_matrix(const PauliString &p, std::size_t oracle_limit = default_oracle_limit()) {
    return to_matrix(PauliSum(p), oracle_limit);
}

inline bool hermitian_check(const PauliSum &s) { return s.is_hermitian(1e-12); }

/// sigma_+ on qubit q as a two-term sum.
inline PauliSum sigma_plus(std::size_t num_qubits, std::size_t q) {
    PauliSum out(num_qubits);
    out.add(PauliString(num_qubits, {{q, PauliLetter::X}}), 0.5);
    out.add(PauliString(num_qubits, {{q, PauliLetter::Y}}), cplx{0.0, 0.5});
    return out;
}

inline PauliSum sigma_minus(std::size_t num_qubits, std::size_t q) {
    PauliSum out(num_qubits);
    out.add(PauliString(num_qubits, {{q, PauliLetter::X}}), 0.5);
    out.add(PauliString(num_qubits, {{q, PauliLetter::Y}}), cplx{0.0, -0.5});
    return out;
}

/// (1 + Z_q)/2, the projector on |0> = up.
inline PauliSum up_projector(std::size_t num_qubits, std::size_t q) {
    PauliSum out = PauliSum::identity(num_qubits, 0.5);
    out.add(PauliString(num_qubits, {{q, PauliLetter::Z}}), 0.5);
    return out;
}

} // namespace spinmap
