#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nnrep/boolfn.hpp"
#include "nnrep/nnrepr.hpp"

namespace nnrep {

/// Depth-three circuit: a layer of integer threshold gates, a layer of
/// ANDs over threshold outputs, and a single OR over the ANDs.
struct ThresholdCircuit {
    struct Gate {
        IntVector weights;  // size n
        Int threshold;      // fires iff weights . X >= threshold
    };

    int n = 0;
    std::vector<Gate> thr;
    std::vector<std::vector<int>> and_gates;  // indices into thr
    std::vector<int> or_gate;                 // indices into and_gates

    int size() const {
        return static_cast<int>(thr.size() + and_gates.size()) + 1;
    }
};

/// Compiles a valid representation into a circuit with one threshold gate
/// per (positive, negative) anchor pair, one AND per positive anchor, and
/// one OR.  Gate (i, j) fires iff X is at least as close to positive
/// anchor i as to negative anchor j; rational coefficients are cleared to
/// integers per gate.  Requires anchors of both labels.
ThresholdCircuit nn_to_circuit(const AnchorMatrix& anchors);

bool simulate_circuit(const ThresholdCircuit& circuit, std::uint32_t mask);

/// Exhaustive equivalence check against f over all 2^n inputs (n <= 24).
bool circuit_equiv_check(const ThresholdCircuit& circuit, const BooleanFunction& f);

/// Human-readable netlist, one gate per line.
std::string to_netlist(const ThresholdCircuit& circuit);

}  // namespace nnrep
