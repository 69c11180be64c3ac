#include "nnrep/circuit.hpp"

#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/gmp.hpp>

#include "nnrep/rational.hpp"

namespace nnrep {

ThresholdCircuit nn_to_circuit(const AnchorMatrix& anchors) {
    const int m = anchors.count();
    const int n = anchors.n();
    if (m == 0) throw std::domain_error("nn_to_circuit: empty anchor matrix");

    std::vector<int> pos, neg;
    for (int i = 0; i < m; ++i) (anchors.labels[i] ? pos : neg).push_back(i);
    if (pos.empty() || neg.empty())
        throw std::domain_error("nn_to_circuit: need anchors of both labels");

    ThresholdCircuit circuit;
    circuit.n = n;
    for (std::size_t pi = 0; pi < pos.size(); ++pi) {
        std::vector<int> conj;
        for (std::size_t nj = 0; nj < neg.size(); ++nj) {
            const auto a = anchors.coords.row(pos[pi]);
            const auto b = anchors.coords.row(neg[nj]);
            // X at least as close to a as to b:
            //   2 (a - b) . X >= |a|^2 - |b|^2
            RatVector w = 2 * (a - b).transpose();
            const Rational rhs = a.dot(a) - b.dot(b);

            Int lcm_den(denominator(rhs));
            for (int j = 0; j < n; ++j)
                lcm_den = boost::multiprecision::lcm(lcm_den, Int(denominator(w(j))));

            ThresholdCircuit::Gate gate;
            gate.weights = IntVector::Zero(n);
            for (int j = 0; j < n; ++j)
                gate.weights(j) = Int(numerator(w(j))) * (lcm_den / Int(denominator(w(j))));
            gate.threshold = Int(numerator(rhs)) * (lcm_den / Int(denominator(rhs)));

            conj.push_back(static_cast<int>(circuit.thr.size()));
            circuit.thr.push_back(std::move(gate));
        }
        circuit.or_gate.push_back(static_cast<int>(circuit.and_gates.size()));
        circuit.and_gates.push_back(std::move(conj));
    }
    return circuit;
}

bool simulate_circuit(const ThresholdCircuit& circuit, std::uint32_t mask) {
    std::vector<char> fired(circuit.thr.size());
    for (std::size_t g = 0; g < circuit.thr.size(); ++g) {
        Int sum = 0;
        for (int j = 0; j < circuit.n; ++j)
            if ((mask >> j) & 1u) sum += circuit.thr[g].weights(j);
        fired[g] = sum >= circuit.thr[g].threshold;
    }
    for (int ai : circuit.or_gate) {
        bool all = true;
        for (int g : circuit.and_gates[ai])
            if (!fired[g]) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

bool circuit_equiv_check(const ThresholdCircuit& circuit, const BooleanFunction& f) {
    if (circuit.n != f.n())
        throw std::domain_error("circuit_equiv_check: input arity mismatch");
    if (circuit.n > 24)
        throw std::domain_error("circuit_equiv_check: limited to n <= 24");
    const std::uint32_t points = 1u << circuit.n;
    for (std::uint32_t x = 0; x < points; ++x)
        if (simulate_circuit(circuit, x) != f.eval(x)) return false;
    return true;
}

std::string to_netlist(const ThresholdCircuit& circuit) {
    std::ostringstream out;
    out << "inputs " << circuit.n << "\n";
    for (std::size_t g = 0; g < circuit.thr.size(); ++g) {
        out << "thr t" << g << ":";
        for (int j = 0; j < circuit.n; ++j) {
            const Int& w = circuit.thr[g].weights(j);
            if (w == 0) continue;
            out << " " << (w > 0 ? "+" : "-") << boost::multiprecision::abs(w) << "*x"
                << (j + 1);
        }
        out << " >= " << circuit.thr[g].threshold << "\n";
    }
    for (std::size_t a = 0; a < circuit.and_gates.size(); ++a) {
        out << "and g" << a << ":";
        for (int g : circuit.and_gates[a]) out << " t" << g;
        out << "\n";
    }
    out << "or out:";
    for (int a : circuit.or_gate) out << " g" << a;
    out << "\n";
    return out.str();
}

}  // namespace nnrep
