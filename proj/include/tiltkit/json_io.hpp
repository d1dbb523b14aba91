#pragma once

#include <functional>
#include <string>

#include <json.hpp>

#include "tiltkit/approx.hpp"
#include "tiltkit/invariants.hpp"
#include "tiltkit/tilting.hpp"

namespace tiltkit::io {

using json = nlohmann::ordered_json;

json load_json_file(const std::string& path);

Field parse_field(const json& j);
json field_to_json(const Field& f);

// Field of the document unless an override is given.
QuiverPresentation parse_presentation(const json& j, const Field& f);
Field presentation_field(const json& j);
json presentation_to_json(const QuiverPresentation& p, const Field& f);

// Row-major nested arrays; entries are integers or strings such as "-3/4".
Matrix parse_matrix(const json& j, const Field& f, std::size_t rows, std::size_t cols);
json matrix_to_json(const Matrix& m);

// Quiver form {"algebra", "dims", "action"} or generic form {"dimension", "action"}.
Representation parse_module(const json& j, const AlgebraPtr& alg);
// Quiver form in the vertex-adapted frame when the algebra has a presentation.
json module_to_json(const Representation& m, const std::string& algebra_id);
// Matrix of a morphism between the exported frames of its source and target.
Matrix morphism_in_frames(const Morphism& f);

using ModuleResolver = std::function<Representation(const std::string&)>;
SequenceData parse_sequence(const json& j, const AlgebraPtr& alg, const ModuleResolver& resolve);
json sequence_to_json(const SequenceData& s, const std::string& algebra_id);

json report_to_json(const VerificationReport& r);
json invariants_to_json(const AlgebraInvariants& a);
json comparison_to_json(const Comparison& c);
json certificate_to_json(const TiltingCertificate& c, const EndoIso* iso);
json bb_to_json(const BBTiltingSpec& b);

}  // namespace tiltkit::io
