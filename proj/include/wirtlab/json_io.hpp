#pragma once

#include <string>

#include <json.hpp>

#include "wirtlab/alternating.hpp"
#include "wirtlab/coxeter.hpp"
#include "wirtlab/gauss_code.hpp"
#include "wirtlab/presentation.hpp"

namespace wirtlab {

using Json = nlohmann::ordered_json;

// {"visits":[{"id":1,"pass":"O","sign":1},...]}
Json code_to_json(const GaussCode& code);
// Throws Syntax on malformed documents, Validation on invalid codes.
GaussCode code_from_json(const Json& j);

// {"generators":[...],"relators":[[[gen,exp],...],...],"twist":m}
Json presentation_to_json(const GroupPresentation& p);
GroupPresentation presentation_from_json(const Json& j);

// {"vertices":[...],"edges":[[u,v,k],...]}
Json graph_to_json(const CoxeterGraph& g);
CoxeterGraph graph_from_json(const Json& j);

// Reads a file when `arg` names one, otherwise returns `arg` itself. Throws Io
// for a path-looking argument that cannot be read.
std::string read_text_arg(const std::string& arg);

// Gauss code from inline text, a code file, or a JSON document.
GaussCode load_code(const std::string& arg);
// Presentation from a presentation JSON document, or the Wirtinger
// presentation of a code.
GroupPresentation load_presentation(const std::string& arg);
CoxeterGraph load_graph(const std::string& arg);

}  // namespace wirtlab
