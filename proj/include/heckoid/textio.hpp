#pragma once

#include <string>

#include <json.hpp>

#include "heckoid/certify.hpp"
#include "heckoid/contfrac.hpp"
#include "heckoid/index.hpp"
#include "heckoid/orbifold.hpp"
#include "heckoid/orbit.hpp"
#include "heckoid/slope.hpp"
#include "heckoid/words.hpp"

namespace heckoid {

using json = nlohmann::json;

// Slope text: "q/p", plain integer "q", or "inf".
std::string format_slope(const Slope& s);
Slope parse_slope(const std::string& text);

// Index text: integer n "2", half-integer "5/2" (canonical) or "2.5"
// (exact halves only).
std::string format_index(HeckoidIndex idx);
HeckoidIndex parse_index_n(const std::string& text);

// ContFrac text: "c+[a1,a2,...]" with "0+" omitted.
std::string format_contfrac(const ContFrac& f);
ContFrac parse_contfrac(const std::string& text);

// Move text: "r0", "r1", "t+", "t-", "p^e".
std::string format_move(const Move& mv);
Move parse_move(const std::string& text);
std::string format_word_moves(const std::vector<Move>& word);

json slope_to_json(const Slope& s);
Slope slope_from_json(const json& j);

json witness_to_json(const OrbitWitness& w);
OrbitWitness witness_from_json(const json& j);

json membership_to_json(const Slope& s, const Slope& r, HeckoidIndex idx,
                        const MembershipVerdict& v);
json epi_to_json(const Slope& s, const Slope& r, HeckoidIndex idx, const EpiVerdict& v);
json orbit_to_json(const Slope& r, HeckoidIndex idx, const OrbitMap& orbit);
json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);
json certification_to_json(const Certification& cert);
Certification certification_from_json(const json& j);
json descriptor_to_json(const OrbifoldDescriptor& d);
OrbifoldDescriptor descriptor_from_json(const json& j);

std::string edge_label_name(EdgeLabel label);
EdgeLabel edge_label_from_name(const std::string& name);
std::string orbifold_case_name(OrbifoldCase c);
OrbifoldCase orbifold_case_from_name(const std::string& name);

struct RunConfig {
    double tolerance = 1e-9;
    SearchBudget budget;

    void validate() const;  // budgets positive, tolerance in (0, 1)
};

}  // namespace heckoid
