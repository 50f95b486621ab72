#pragma once

#include <string>

#include <json.hpp>

#include "skm/complex.hpp"
#include "skm/homology.hpp"
#include "skm/koszul.hpp"
#include "skm/resonance.hpp"

namespace skm {

using Json = nlohmann::json;

/// Parses a complex from text or JSON (detected by a leading '{').
///
/// Text: lines starting with '#' are comments, the first data line is
/// "n <N>", every further line is one facet of space-separated 1-based
/// vertex ids. A line holding only "-" is the empty facet, so "n 3" followed
/// by "-" is the complex {∅}; no facet lines at all gives the void complex.
/// JSON: {"n": N, "facets": [[...], ...]}.
SimplicialComplex parse_complex(const std::string& text);
SimplicialComplex load_complex(const std::string& path);

std::string complex_to_text(const SimplicialComplex& delta);
Json complex_to_json(const SimplicialComplex& delta);

Json vertices_json(Mask m);
Json to_json(const ReducedHomologyProfile& h);
Json to_json(const HilbertSeriesMulti& h);
Json to_json(const BettiTable& t);
Json to_json(const CoordinateSubspaceArrangement& a);
Json to_json(const SquareFreeMonomialIdeal& ideal);

} // namespace skm
