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

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <type_traits>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "pauli.hpp"

namespace spinmap {

/// e^{-i (angle/2) X}
struct RxGate {
    std::size_t qubit = 0;
    double angle = 0.0;
    friend bool operator==(const RxGate &, const RxGate &) = default;
};

/// e^{-i (angle/2) Y}
struct RyGate {
    std::size_t qubit = 0;
    double angle = 0.0;
    friend bool operator==(const RyGate &, const RyGate &) = default;
};

/// e^{-i (angle/2) Z}
struct RzGate {
    std::size_t qubit = 0;
    double angle = 0.0;
    friend bool operator==(const RzGate &, const RzGate &) = default;
};

/// Ising interaction e^{i angle Z_a Z_b}. Note the sign differs from the
/// single-qubit rotations.
struct ZZGate {
    std::size_t qubit_a = 0;
    std::size_t qubit_b = 1;
    double angle = 0.0;
    friend bool operator==(const ZZGate &, const ZZGate &) = default;
};

/// e^{i angle P} applied only when the control qubit is in |control_value>.
/// The string's +-1 phase is part of P.
struct CPauliExpGate {
    std::size_t control = 0;
    int control_value = 1;
    PauliString string;
    double angle = 0.0;
    friend bool operator==(const CPauliExpGate &, const CPauliExpGate &) = default;
};

/// Multiplies the control = control_value branch by e^{i phase}.
struct PhaseOnControlGate {
    std::size_t control = 0;
    int control_value = 1;
    double phase = 0.0;
    friend bool operator==(const PhaseOnControlGate &, const PhaseOnControlGate &) = default;
};

using Gate = std::variant<RxGate, RyGate, RzGate, ZZGate, CPauliExpGate, PhaseOnControlGate>;

inline bool is_elementary(const Gate &g) {
    return std::holds_alternative<RxGate>(g) || std::holds_alternative<RyGate>(g) ||
           std::holds_alternative<RzGate>(g) || std::holds_alternative<ZZGate>(g);
}

/// Ordered gate list; gates[0] is applied first. `global_phase` is the scalar
/// e^{i global_phase} multiplying the whole unitary, so circuits represent
/// operators exactly rather than up to phase.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }
    double global_phase() const { return global_phase_; }

    void add_global_phase(double phi) { global_phase_ += phi; }

    Circuit &append(Gate g) {
        validate(g);
        gates_.push_back(std::move(g));
        return *this;
    }

    Circuit &append(const Circuit &other) {
        check_same_size(num_qubits_, other.num_qubits_, "Circuit::append");
        gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
        global_phase_ += other.global_phase_;
        return *this;
    }

    /// The same gates on a register of `num_qubits` >= num_qubits().
    Circuit widened(std::size_t num_qubits) const {
        if (num_qubits < num_qubits_) {
            throw DimensionError("cannot narrow a circuit");
        }
        Circuit out(num_qubits);
        out.global_phase_ = global_phase_;
        for (const auto &g : gates_) {
            if (const auto *c = std::get_if<CPauliExpGate>(&g)) {
                CPauliExpGate w = *c;
                w.string = c->string.embedded(num_qubits);
                out.gates_.push_back(std::move(w));
            } else {
                out.gates_.push_back(g);
            }
        }
        return out;
    }

    /// Adjoint circuit: reversed order, negated angles.
    Circuit inverse() const {
        Circuit out(num_qubits_);
        out.global_phase_ = -global_phase_;
        for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
            out.gates_.push_back(std::visit(
                [](auto g) -> Gate {
                    if constexpr (std::is_same_v<decltype(g), PhaseOnControlGate>) {
                        g.phase = -g.phase;
                    } else {
                        g.angle = -g.angle;
                    }
                    return g;
                },
                *it));
        }
        return out;
    }

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    void check_qubit(std::size_t q) const {
        if (q >= num_qubits_) {
            throw InvalidArgument("gate qubit " + std::to_string(q) + " out of range for " +
                                  std::to_string(num_qubits_) + " qubits");
        }
    }

    void validate(const Gate &g) const {
        std::visit(
            [this](const auto &x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, ZZGate>) {
                    check_qubit(x.qubit_a);
                    check_qubit(x.qubit_b);
                    if (x.qubit_a == x.qubit_b) {
                        throw InvalidArgument("ZZ gate needs two distinct qubits");
                    }
                } else if constexpr (std::is_same_v<T, CPauliExpGate>) {
                    check_qubit(x.control);
                    check_same_size(x.string.num_qubits(), num_qubits_, "CPauliExp");
                    if (x.string.letter(x.control) != PauliLetter::I) {
                        throw OverlapError("control qubit lies in the Pauli string support");
                    }
                    if (x.control_value != 0 && x.control_value != 1) {
                        throw InvalidArgument("control value must be 0 or 1");
                    }
                    if (x.string.phase() != cplx{1.0} && x.string.phase() != cplx{-1.0}) {
                        throw InvalidArgument("controlled Pauli exponential needs a +-1 phase");
                    }
                } else if constexpr (std::is_same_v<T, PhaseOnControlGate>) {
                    check_qubit(x.control);
                    if (x.control_value != 0 && x.control_value != 1) {
                        throw InvalidArgument("control value must be 0 or 1");
                    }
                } else {
                    check_qubit(x.qubit);
                }
            },
            g);
    }

    std::size_t num_qubits_ = 0;
    std::vector<Gate> gates_;
    double global_phase_ = 0.0;
};

struct GateCensus {
    std::size_t rx = 0;
    std::size_t ry = 0;
    std::size_t rz = 0;
    std::size_t zz = 0;
    std::size_t cpauliexp = 0;
    std::size_t phase_on_control = 0;

    std::size_t total() const { return rx + ry + rz + zz + cpauliexp + phase_on_control; }

    std::string to_string() const {
        std::ostringstream os;
        os << "RX " << rx << "\nRY " << ry << "\nRZ " << rz << "\nZZ " << zz << "\nCPEXP "
           << cpauliexp << "\nPHASE " << phase_on_control << "\nTOTAL " << total() << '\n';
        return os.str();
    }

    friend bool operator==(const GateCensus &, const GateCensus &) = default;
};

inline GateCensus gate_census(const Circuit &c) {
    GateCensus out;
    for (const auto &g : c.gates()) {
        std::visit(
            [&out](const auto &x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, RxGate>) {
                    ++out.rx;
                } else if constexpr (std::is_same_v<T, RyGate>) {
                    ++out.ry;
                } else if constexpr (std::is_same_v<T, RzGate>) {
                    ++out.rz;
                } else if constexpr (std::is_same_v<T, ZZGate>) {
                    ++out.zz;
                } else if constexpr (std::is_same_v<T, CPauliExpGate>) {
                    ++out.cpauliexp;
                } else {
                    ++out.phase_on_control;
                }
            },
            g);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text serialization, one gate per line:
//   QUBITS 4
//   GPHASE 0.5
//   RX q0 1.5707963267948966
//   ZZ q1 q3 0.7853981633974483
//   CPEXP c:q0 v:1 P:X1Z2 theta:0.5
//   PHASE c:q0 v:1 phi:-1.5707963267948966
// Angles use the shortest representation that round-trips a double.

inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace detail {

inline std::string compact_pauli(const PauliString &p) {
    std::string out;
    for (std::size_t q = 0; q < p.num_qubits(); ++q) {
        if (p.letter(q) != PauliLetter::I) {
            out += to_char(p.letter(q));
            out += std::to_string(q);
        }
    }
    return out.empty() ? "I" : out;
}

inline double parse_double(std::string_view s, std::size_t line) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw InvalidArgument("circuit line " + std::to_string(line) + ": bad number '" +
                              std::string(s) + "'");
    }
    return v;
}

inline std::size_t parse_qubit(std::string_view s, std::size_t line) {
    if (s.size() < 2 || s[0] != 'q') {
        throw InvalidArgument("circuit line " + std::to_string(line) + ": bad qubit '" +
                              std::string(s) + "'");
    }
    std::size_t q = 0;
    const auto res = std::from_chars(s.data() + 1, s.data() + s.size(), q);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw InvalidArgument("circuit line " + std::to_string(line) + ": bad qubit '" +
                              std::string(s) + "'");
    }
    return q;
}

inline std::string_view after_prefix(std::string_view s, std::string_view prefix, std::size_t line) {
    if (s.substr(0, prefix.size()) != prefix) {
        throw InvalidArgument("circuit line " + std::to_string(line) + ": expected '" +
                              std::string(prefix) + "...'");
    }
    return s.substr(prefix.size());
}

inline PauliString parse_compact_pauli(std::string_view s, std::size_t num_qubits,
                                       std::size_t line) {
    PauliString out(num_qubits);
    if (s == "I") {
        return out;
    }
    std::size_t k = 0;
    while (k < s.size()) {
        const PauliLetter letter = letter_from_char(s[k++]);
        std::size_t start = k;
        while (k < s.size() && s[k] >= '0' && s[k] <= '9') {
            ++k;
        }
        if (start == k) {
            throw InvalidArgument("circuit line " + std::to_string(line) + ": bad Pauli string");
        }
        const std::size_t q = std::stoul(std::string(s.substr(start, k - start)));
        if (q >= num_qubits) {
            throw InvalidArgument("circuit line " + std::to_string(line) + ": qubit out of range");
        }
        out.set(q, letter);
    }
    return out;
}

} // namespace detail

inline std::string gate_to_text(const Gate &g) {
    return std::visit(
        [](const auto &x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, RxGate>) {
                return "RX q" + std::to_string(x.qubit) + ' ' + format_double(x.angle);
            } else if constexpr (std::is_same_v<T, RyGate>) {
                return "RY q" + std::to_string(x.qubit) + ' ' + format_double(x.angle);
            } else if constexpr (std::is_same_v<T, RzGate>) {
                return "RZ q" + std::to_string(x.qubit) + ' ' + format_double(x.angle);
            } else if constexpr (std::is_same_v<T, ZZGate>) {
                return "ZZ q" + std::to_string(x.qubit_a) + " q" + std::to_string(x.qubit_b) + ' ' +
                       format_double(x.angle);
            } else if constexpr (std::is_same_v<T, CPauliExpGate>) {
                // the +-1 string phase is folded into theta
                const double sign = x.string.phase().real() < 0 ? -1.0 : 1.0;
                return "CPEXP c:q" + std::to_string(x.control) + " v:" + std::to_string(x.control_value) +
                       " P:" + detail::compact_pauli(x.string) + " theta:" + format_double(sign * x.angle);
            } else {
                return "PHASE c:q" + std::to_string(x.control) + " v:" + std::to_string(x.control_value) +
                       " phi:" + format_double(x.phase);
            }
        },
        g);
}

inline std::string to_text(const Circuit &c) {
    std::string out = "QUBITS " + std::to_string(c.num_qubits()) + '\n';
    if (c.global_phase() != 0.0) {
        out += "GPHASE " + format_double(c.global_phase()) + '\n';
    }
    for (const auto &g : c.gates()) {
        out += gate_to_text(g);
        out += '\n';
    }
    return out;
}

/// Parses the text format. Without a QUBITS header the register size is
/// `num_qubits` if nonzero, else one more than the largest index seen.
inline Circuit parse_circuit(std::string_view text, std::size_t num_qubits = 0) {
    struct Line {
        std::size_t number;
        std::vector<std::string> tokens;
    };
    std::vector<Line> lines;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    std::size_t declared = num_qubits;
    std::size_t max_index = 0;
    bool any_index = false;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream ls(raw);
        std::vector<std::string> tokens;
        for (std::string t; ls >> t;) {
            tokens.push_back(t);
        }
        if (tokens.empty()) {
            continue;
        }
        if (tokens[0] == "QUBITS") {
            if (tokens.size() != 2) {
                throw InvalidArgument("circuit line " + std::to_string(line_no) + ": malformed QUBITS");
            }
            declared = std::stoul(tokens[1]);
            continue;
        }
        for (const auto &t : tokens) {
            std::string_view v = t;
            if (v.substr(0, 2) == "c:") {
                v.remove_prefix(2);
            }
            if (v.size() >= 2 && v[0] == 'q' && v[1] >= '0' && v[1] <= '9') {
                max_index = std::max(max_index, detail::parse_qubit(v, line_no));
                any_index = true;
            } else if (v.substr(0, 2) == "P:") {
                for (std::size_t k = 2; k < v.size();) {
                    ++k;
                    std::size_t start = k;
                    while (k < v.size() && v[k] >= '0' && v[k] <= '9') {
                        ++k;
                    }
                    if (k > start) {
                        max_index = std::max(max_index, std::stoul(std::string(v.substr(start, k - start))));
                        any_index = true;
                    }
                }
            }
        }
        lines.push_back({line_no, std::move(tokens)});
    }
    const std::size_t n = declared != 0 ? declared : (any_index ? max_index + 1 : 0);
    Circuit c(n);
    for (const auto &[ln, tk] : lines) {
        const std::string &op = tk[0];
        auto need = [&](std::size_t count) {
            if (tk.size() != count) {
                throw InvalidArgument("circuit line " + std::to_string(ln) + ": expected " +
                                      std::to_string(count - 1) + " operands for " + op);
            }
        };
        if (op == "GPHASE") {
            need(2);
            c.add_global_phase(detail::parse_double(tk[1], ln));
        } else if (op == "RX" || op == "RY" || op == "RZ") {
            need(3);
            const std::size_t q = detail::parse_qubit(tk[1], ln);
            const double a = detail::parse_double(tk[2], ln);
            if (op == "RX") {
                c.append(RxGate{q, a});
            } else if (op == "RY") {
                c.append(RyGate{q, a});
            } else {
                c.append(RzGate{q, a});
            }
        } else if (op == "ZZ") {
            need(4);
            c.append(ZZGate{detail::parse_qubit(tk[1], ln), detail::parse_qubit(tk[2], ln),
                            detail::parse_double(tk[3], ln)});
        } else if (op == "CPEXP") {
            need(5);
            CPauliExpGate g;
            g.control = detail::parse_qubit(detail::after_prefix(tk[1], "c:", ln), ln);
            g.control_value = static_cast<int>(detail::parse_double(detail::after_prefix(tk[2], "v:", ln), ln));
            g.string = detail::parse_compact_pauli(detail::after_prefix(tk[3], "P:", ln), n, ln);
            g.angle = detail::parse_double(detail::after_prefix(tk[4], "theta:", ln), ln);
            c.append(std::move(g));
        } else if (op == "PHASE") {
            need(4);
            PhaseOnControlGate g;
            g.control = detail::parse_qubit(detail::after_prefix(tk[1], "c:", ln), ln);
            g.control_value = static_cast<int>(detail::parse_double(detail::after_prefix(tk[2], "v:", ln), ln));
            g.phase = detail::parse_double(detail::after_prefix(tk[3], "phi:", ln), ln);
            c.append(g);
        } else {
            throw InvalidArgument("circuit line " + std::to_string(ln) + ": unknown gate '" + op + "'");
        }
    }
    return c;
}

} // namespace spinmap
