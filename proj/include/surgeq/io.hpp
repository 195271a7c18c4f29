#pragma once

#include <string>

#include <json.hpp>

#include "surgeq/presentation.hpp"
#include "surgeq/trilinear.hpp"
#include "surgeq/verdict.hpp"

namespace surgeq {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Presentation files:
//   {"components": [{"framing": "p/q"}, ...],
//    "lk": [[0,1],[1,0]],
//    "braid": {"strands": 3, "word": "s1 s2^-1 ..."},      (optional)
//    "longitudes": ["x1 x2^-1 ...", ...]}                   (optional)
// All FramedLink invariants are re-checked on load; violations are errors.
FramedLink link_from_json(const nlohmann::json& j);
nlohmann::json link_to_json(const FramedLink& link);
FramedLink load_link(const std::string& path);

Framing parse_framing(const std::string& s);
std::string framing_to_string(const Framing& f);

BraidWord parse_braid_word(int strands, const std::string& word);
std::string braid_word_to_string(const BraidWord& b);

// Form literals: {"m": 4, "coeffs": {"1,2,3": 1, "1,2,4": 2}}
TrilinearForm trilinear_from_json(const nlohmann::json& j);
nlohmann::json trilinear_to_json(const TrilinearForm& f);

nlohmann::json verdict_to_json(const Verdict& v, bool with_certificate);
nlohmann::json linking_form_to_json(const LinkingForm& f);
nlohmann::json homology_to_json(const FirstHomology& h);

std::string rat_to_string(const Rat& r);  // always "a/b"

}  // namespace surgeq
