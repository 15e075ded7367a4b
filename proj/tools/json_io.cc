// Copyright 2026 The anyonkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "json_io.h"

#include <charconv>

#include "anyon/errors.h"

namespace anyon::io {

namespace {

// Rethrows JSON library errors as input errors.
template <typename F>
auto guarded(const char *what, F f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception &e) {
        throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

Label label_of(const AnyonModel &model, const Json &j) {
    return model.label(j.get<std::string>());
}

}  // namespace

Json complex_to_json(std::complex<double> c) {
    return Json::array({c.real(), c.imag()});
}

std::complex<double> complex_from_json(const Json &j) {
    return guarded("complex", [&] {
        if (j.is_number()) {
            return std::complex<double>(j.get<double>(), 0);
        }
        if (!j.is_array() || j.size() != 2) {
            throw InputError("complex numbers are [re, im] pairs");
        }
        return std::complex<double>(j[0].get<double>(), j[1].get<double>());
    });
}

Json poly_to_json(const LaurentPoly &p) {
    Json out = Json::object();
    for (auto [e, c] : p.terms()) {
        out[std::to_string(e)] = c;
    }
    return out;
}

LaurentPoly poly_from_json(const Json &j) {
    return guarded("polynomial", [&] {
        LaurentPoly p;
        for (auto &[key, value] : j.items()) {
            int e = 0;
            auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), e);
            if (ec != std::errc() || ptr != key.data() + key.size()) {
                throw InputError("polynomial exponent '" + key + "' is not an integer");
            }
            p.add_term(e, value.get<int64_t>());
        }
        return p;
    });
}

Json model_to_json(const AnyonModel &model) {
    Json out;
    out["labels"] = model.names();
    out["vacuum"] = model.name(model.vacuum());
    Json dual = Json::object();
    for (size_t a = 0; a < model.size(); a++) {
        dual[model.name(static_cast<Label>(a))] = model.name(model.dual(static_cast<Label>(a)));
    }
    out["dual"] = dual;
    Json fusion = Json::array();
    for (const auto &r : model.rules()) {
        fusion.push_back({model.name(r.a), model.name(r.b), model.name(r.c), r.multiplicity});
    }
    out["fusion"] = fusion;
    return out;
}

AnyonModel model_from_json(const Json &j) {
    return guarded("model", [&] {
        auto names = j.at("labels").get<std::vector<std::string>>();
        auto index = [&](const Json &name) -> Label {
            auto s = name.get<std::string>();
            for (size_t i = 0; i < names.size(); i++) {
                if (names[i] == s) {
                    return static_cast<Label>(i);
                }
            }
            throw InputError("unknown label '" + s + "' in model JSON");
        };
        Label vacuum = index(j.at("vacuum"));
        std::vector<Label> dual(names.size());
        for (size_t i = 0; i < names.size(); i++) {
            dual[i] = index(j.at("dual").at(names[i]));
        }
        std::vector<FusionRule> rules;
        for (const auto &q : j.at("fusion")) {
            if (!q.is_array() || q.size() != 4) {
                throw InputError("fusion entries are [a, b, c, multiplicity]");
            }
            rules.push_back({index(q[0]), index(q[1]), index(q[2]), q[3].get<int>()});
        }
        return AnyonModel(std::move(names), vacuum, std::move(dual), rules);
    });
}

Json f_table_to_json(const FSymbolTable &f) {
    const AnyonModel &m = f.model();
    Json entries = Json::array();
    for (const auto &[idx, value] : f.entries()) {
        Json key = Json::array();
        for (Label l : idx) {
            key.push_back(m.name(l));
        }
        entries.push_back({key, complex_to_json(value)});
    }
    Json out;
    out["model"] = model_to_json(m);
    out["F"] = entries;
    return out;
}

FSymbolTable f_table_from_json(const Json &j) {
    return guarded("F table", [&] {
        AnyonModel model = model_from_json(j.at("model"));
        FSymbolTable f(model);
        for (const auto &entry : j.at("F")) {
            const Json &key = entry.at(0);
            if (!key.is_array() || key.size() != 6) {
                throw InputError("F keys are [a, b, c, d, i, j]");
            }
            FIndex idx;
            for (size_t k = 0; k < 6; k++) {
                idx[k] = label_of(model, key[k]);
            }
            f.set(idx, complex_from_json(entry.at(1)));
        }
        return f;
    });
}

Json r_table_to_json(const RSymbolTable &r) {
    const AnyonModel &m = r.model();
    Json entries = Json::array();
    for (const auto &[idx, value] : r.entries()) {
        entries.push_back({{m.name(idx[0]), m.name(idx[1]), m.name(idx[2])}, complex_to_json(value)});
    }
    Json out;
    out["model"] = model_to_json(m);
    out["R"] = entries;
    return out;
}

RSymbolTable r_table_from_json(const Json &j, const AnyonModel &model) {
    return guarded("R table", [&] {
        RSymbolTable r(model);
        for (const auto &entry : j.at("R")) {
            const Json &key = entry.at(0);
            if (!key.is_array() || key.size() != 3) {
                throw InputError("R keys are [a, b, c]");
            }
            r.set(label_of(model, key[0]), label_of(model, key[1]), label_of(model, key[2]),
                  complex_from_json(entry.at(1)));
        }
        return r;
    });
}

Json pauli_to_json(const PauliString &p) {
    Json out;
    out["d"] = p.d();
    out["phase"] = p.phase();
    std::vector<int> x(p.size());
    std::vector<int> z(p.size());
    for (size_t q = 0; q < p.size(); q++) {
        x[q] = p.x(q);
        z[q] = p.z(q);
    }
    out["x"] = x;
    out["z"] = z;
    return out;
}

PauliString pauli_from_json(const Json &j) {
    return guarded("Pauli string", [&] {
        auto x = j.at("x").get<std::vector<int>>();
        auto z = j.at("z").get<std::vector<int>>();
        if (x.size() != z.size()) {
            throw InputError("x and z exponent lists differ in length");
        }
        PauliString p(x.size(), j.at("d").get<int>());
        for (size_t q = 0; q < x.size(); q++) {
            p.set_x(q, x[q]);
            p.set_z(q, z[q]);
        }
        p.set_phase(j.value("phase", 0));
        return p;
    });
}

Json lattice_to_json(const TorusLattice &lat) {
    Json out;
    out["lx"] = lat.lx();
    out["ly"] = lat.ly();
    out["vertices"] = lat.vertex_count();
    out["faces"] = lat.face_count();
    out["edges"] = lat.edge_count();
    return out;
}

TorusLattice lattice_from_json(const Json &j) {
    return guarded("lattice", [&] { return TorusLattice(j.at("lx").get<int>(), j.at("ly").get<int>()); });
}

}  // namespace anyon::io
