#pragma once

#include <string>
#include <vector>

#include "actkit/adjunction.hpp"
#include "actkit/verdict.hpp"

namespace actkit {

// One parsed input: a monoid, its acts in file order, and homs bound to
// the last two acts preceding them (a single act binds an endomorphism).
struct ParsedFile {
    MonoidPtr monoid;
    std::vector<ActPtr> acts;
    std::vector<ActHom> homs;
};

// Text grammar: `monoid <n> <identity>` with n table rows, `act <m>` with
// m action rows, `hom` with one map row. `#` starts a comment.
ParsedFile parse_act_text(const std::string& text, const std::string& filename);

// JSON mirror: {"monoid": {"size", "identity", "table"},
//               "acts": [{"size", "action"}, ...],
//               "homs": [{"source", "target", "map"}, ...]}.
ParsedFile parse_act_json(const std::string& text, const std::string& filename);

// Dispatches on the first non-space byte: '{' selects the JSON mirror.
ParsedFile parse_act_string(const std::string& text, const std::string& filename);
ParsedFile parse_act_file(const std::string& path);

std::string emit_monoid_block(const Monoid& monoid);
std::string emit_act_block(const RightAct& act);
std::string emit_hom_block(const ActHom& hom);

// Canonical text form; homs must be bound to the final acts per the
// parsing convention or emission refuses.
std::string emit_act_text(const ParsedFile& file);
std::string emit_act_json(const ParsedFile& file);

// Ordinary act block plus `# homIndex <element> <map...>` annotations.
std::string emit_hom_act(const HomAct& hom_act);

// Ordinary act block plus `# tensorRep <class> <y> <a>` annotations.
std::string emit_tensor_act(const TensorAct& tensor);

// Single-token reference for machine-format verdict lines.
std::string format_witness_ref(const Witness& witness);

// Multi-line human-readable witness rendering.
std::string format_witness(const Witness& witness);

}  // namespace actkit
