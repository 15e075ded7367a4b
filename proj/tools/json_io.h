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

#ifndef ANYON_TOOLS_JSON_IO_H
#define ANYON_TOOLS_JSON_IO_H

#include <complex>
#include "json.hpp"

#include "anyon/anyon_model.h"
#include "anyon/fr_symbols.h"
#include "anyon/laurent_poly.h"
#include "anyon/surface_code.h"

namespace anyon::io {

using Json = nlohmann::ordered_json;

Json complex_to_json(std::complex<double> c);
std::complex<double> complex_from_json(const Json &j);

/// {"-2": -1, "2": -1}: quarter-unit exponent to coefficient.
Json poly_to_json(const LaurentPoly &p);
LaurentPoly poly_from_json(const Json &j);

/// {"labels": [...], "vacuum": name, "dual": {name: name}, "fusion": [[a, b, c, m], ...]}
Json model_to_json(const AnyonModel &model);
AnyonModel model_from_json(const Json &j);

/// {"model": ..., "F": [[[a,b,c,d,i,j], [re,im]], ...]}
Json f_table_to_json(const FSymbolTable &f);
FSymbolTable f_table_from_json(const Json &j);
/// {"model": ..., "R": [[[a,b,c], [re,im]], ...]}
Json r_table_to_json(const RSymbolTable &r);
RSymbolTable r_table_from_json(const Json &j, const AnyonModel &model);

/// {"d": d, "phase": p, "x": [...], "z": [...]}
Json pauli_to_json(const PauliString &p);
PauliString pauli_from_json(const Json &j);

Json lattice_to_json(const TorusLattice &lat);
TorusLattice lattice_from_json(const Json &j);

}  // namespace anyon::io

#endif
