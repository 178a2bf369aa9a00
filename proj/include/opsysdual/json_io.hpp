#ifndef OPSYSDUAL_JSON_IO_HPP_
#define OPSYSDUAL_JSON_IO_HPP_

#include <vector>

#include <json.hpp>

#include "opsysdual/opsys.hpp"

namespace osd {

// Insertion-ordered JSON keeps output field order deterministic.
using Json = nlohmann::ordered_json;

// {"n": 5, "edges": [[0,1],[1,2]]}. Rejects out-of-range indices and
// duplicate edges; [i,i] pairs are accepted and ignored, as in the
// ToleranceRelation constructor. All violations throw InvalidInput (or a
// subclass).
ToleranceRelation graph_from_json(const Json& j);
Json graph_to_json(const ToleranceRelation& r);

// {"n":3, "entries":[{"i":0,"j":0,"re":1.0,"im":0.0}, ...]} with upper
// triangle storage (i > j rejected), full diagonal coverage required, "im"
// optional. The pattern is inferred from the off-diagonal entries unless an
// explicit "graph" object is present, in which case the entry pairs must
// match its edge set exactly.
PartialHermitianMatrix partial_from_json(const Json& j);
Json partial_to_json(const PartialHermitianMatrix& x);

// Full Hermitian matrix as the same schema with every i <= j entry present;
// re-readable by partial_from_json as a fully specified matrix.
Json hermitian_to_json(const HermitianMatrix& a);

// {"v": [1.0, [0.0,1.0], {"re":2.0,"im":0.5}]}: elements may be a real
// number, an [re,im] pair, or an {"re":...,"im":...} object.
std::vector<Complex> vector_from_json(const Json& j);
Json vector_to_json(const std::vector<Complex>& v);

Json complex_to_json(const Complex& z);

}  // namespace osd

#endif  // OPSYSDUAL_JSON_IO_HPP_
