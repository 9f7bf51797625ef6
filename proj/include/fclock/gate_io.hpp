/* Copyright 2026 The feynman-clock Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "fclock/gate_evolution.hpp"

// Gate-sequence JSON schema:
//   { "n": <qubit count>,
//     "gates": [ [ [re, im], ... ], ... ] }
// where each gate is a flat row-major list of (2^n)^2 complex entries
// written as [re, im] pairs.  Schema violations name the offending
// field.

namespace fclock {

inline UnitarySequence unitary_sequence_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::runtime_error("gate file: top level must be an object");
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 0)
        throw std::runtime_error("gate file: field \"n\" must be a non-negative integer");
    if (!j.contains("gates") || !j["gates"].is_array() || j["gates"].empty())
        throw std::runtime_error("gate file: field \"gates\" must be a non-empty array");

    UnitarySequence seq;
    seq.n_qubits = j["n"].get<std::size_t>();
    if (seq.n_qubits > 12) throw std::runtime_error("gate file: field \"n\" is unreasonably large");
    const std::size_t d = seq.dim();

    for (std::size_t g = 0; g < j["gates"].size(); ++g) {
        const auto& jg = j["gates"][g];
        const std::string where = "gate file: gates[" + std::to_string(g) + "]";
        if (!jg.is_array() || jg.size() != d * d)
            throw std::runtime_error(where + ": expected " + std::to_string(d * d) +
                                     " row-major entries for a " + std::to_string(d) + "x" +
                                     std::to_string(d) + " matrix");
        ComplexMatrix m(d, d);
        for (std::size_t e = 0; e < d * d; ++e) {
            const auto& je = jg[e];
            if (!je.is_array() || je.size() != 2 || !je[0].is_number() || !je[1].is_number())
                throw std::runtime_error(where + "[" + std::to_string(e) +
                                         "]: expected an [re, im] number pair");
            m.entries()[e] = cplx(je[0].get<double>(), je[1].get<double>());
        }
        seq.gates.push_back(std::move(m));
    }
    seq.validate();
    return seq;
}

inline UnitarySequence load_unitary_sequence(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("gate file: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("gate file: " + path + " is not valid JSON: " + e.what());
    }
    return unitary_sequence_from_json(j);
}

inline nlohmann::json unitary_sequence_to_json(const UnitarySequence& seq) {
    nlohmann::json j;
    j["n"] = seq.n_qubits;
    j["gates"] = nlohmann::json::array();
    for (const auto& g : seq.gates) {
        nlohmann::json jg = nlohmann::json::array();
        for (const auto& v : g.entries()) jg.push_back({v.real(), v.imag()});
        j["gates"].push_back(std::move(jg));
    }
    return j;
}

inline void save_unitary_sequence(const std::string& path, const UnitarySequence& seq) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("gate file: cannot write " + path);
    out << unitary_sequence_to_json(seq).dump(2) << "\n";
}

}  // namespace fclock
