// JSON document layer: every domain value has a single-document schema with
// arbitrary-precision integers carried as decimal strings and rationals as
// "num/den".  Parsing accepts JSON numbers or strings; printing always uses
// strings and a fixed key order so reports are byte-reproducible.
#ifndef ETKK_IO_HPP
#define ETKK_IO_HPP

#include "etkk/charts.hpp"
#include "etkk/kkcalc.hpp"
#include "etkk/lifting.hpp"

#include <nlohmann/json.hpp>

namespace etkk {

using Json = nlohmann::ordered_json;

// Scalar codecs.  Errors: ParseError.
Int json_to_int(const Json& j);
Rat json_to_rat(const Json& j);
Json int_to_json(const Int& v);
Json rat_to_json(const Rat& v);

IntVec json_to_vec(const Json& j);
IntMat json_to_mat(const Json& j);
Json vec_to_json(const IntVec& v);
Json mat_to_json(const IntMat& m);

// Domain documents.  Parsers validate through the module constructors, so a
// malformed or inconsistent document raises the module's own error codes (or
// ParseError for shape problems).
Block json_to_block(const Json& j);
Json block_to_json(const Block& b);
Algebra json_to_algebra(const Json& j);
Json algebra_to_json(const Algebra& a);
Diagram json_to_diagram(const Json& j);
Json diagram_to_json(const Diagram& d);
Spectrum json_to_spectrum(const Json& j);
Json spectrum_to_json(const Spectrum& s);
SpectralChart json_to_chart(const Json& j);
Json chart_to_json(const SpectralChart& c);
DistributionWitness json_to_witness(const Json& j);
Json witness_to_json(const DistributionWitness& w);
FinDimDecomposition json_to_decomposition(const Json& j);

Json ktheory_to_json(const KTheoryData& kt);
Json verdict_to_json(const LiftVerdict& v);
Json certificate_to_json(const DecompositionCertificate& c);

// Reads one JSON document from a file.  Errors: ParseError.
Json load_json(const std::string& path);

}  // namespace etkk

#endif  // ETKK_IO_HPP
