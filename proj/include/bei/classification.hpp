#pragma once

#include "bei/cutsets.hpp"
#include "bei/graph.hpp"
#include "bei/ideal.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bei {

// Triangle u1 v1 w1 with paths u1..ur, v1..vs, w1..wt hanging off it.
// Parameters are reported sorted, r <= s <= t.
struct G3Params {
    int r;
    int s;
    int t;

    friend bool operator==(const G3Params&, const G3Params&) = default;
};

// Paths u1..ur and v1..vs (r, s >= 3) joined by u1v1 and u2v2.
// Parameters are reported sorted, r <= s.
struct G4Params {
    int r;
    int s;

    friend bool operator==(const G4Params&, const G4Params&) = default;
};

using Family = std::variant<std::monostate, G3Params, G4Params>;

enum class CmStatus { Yes, No, Unknown };

struct CmVerdict {
    CmStatus status = CmStatus::Unknown;
    std::string reason;
};

struct ClassificationReport {
    int deviation = 0;
    bool complete_intersection = false;
    Family family;
    bool unmixed = false;
    CmVerdict cohen_macaulay;
    std::vector<std::string> reasons;
};

// Every connected component is a path.
bool is_complete_intersection(const Graph& g);

std::optional<G3Params> recognize_g3(const Graph& g);
std::optional<G4Params> recognize_g4(const Graph& g);

// Labels u1..ur = 1..r, v1..vs = r+1..r+s, w1..wt = r+s+1..r+s+t.
Graph build_g3(int r, int s, int t);
// Labels u1..ur = 1..r, v1..vs = r+1..r+s. Requires r, s >= 1; the family
// itself needs r, s >= 3.
Graph build_g4(int r, int s);

// Deviation, unmixedness, family membership and a three-valued
// Cohen-Macaulay verdict. Yes/No is only given where a classification
// theorem licenses it; otherwise Unknown. Throws std::logic_error if the
// independently computed characterizations disagree.
ClassificationReport classify(const Graph& g, const CutSetOptions& options = {});
// Same, reusing an existing decomposition of g.
ClassificationReport classify(const Graph& g, const Decomposition& d);

const char* to_string(CmStatus status);

} // namespace bei
