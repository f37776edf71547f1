#ifndef EGH_INSTANCE_IO_HPP
#define EGH_INSTANCE_IO_HPP

#include <string>

#include "json.hpp"

#include "egh/verify.hpp"

namespace egh {

using Json = nlohmann::ordered_json;

// {"p": int, "n": int, "vars": [string], "regular_sequence": [form-string],
//  "extras": [form-string]} with forms in the polynomial text grammar.
Json instance_to_json(const IdealInstance& inst);

// Rebuilds an instance from its JSON serialization. `revalidate` controls
// whether the regular sequence is checked again (file input) or trusted
// (replaying records this process produced).
IdealInstance instance_from_json(const Json& j, bool revalidate = true);

// Loads an ideal file; parse_error on malformed JSON, input_error on
// semantic problems. The "vars" key may be omitted (defaults to x1..xn).
IdealInstance load_ideal_file(const std::string& path);

// Context + generators without the instance validation, for commands that
// only need the generator list (Hilbert functions of arbitrary ideals).
struct RawIdealFile {
    RingContext ctx;
    std::vector<Form> regular_sequence;
    std::vector<Form> extras;
    std::vector<Form> all() const {
        std::vector<Form> gens = regular_sequence;
        gens.insert(gens.end(), extras.begin(), extras.end());
        return gens;
    }
};

RawIdealFile load_raw_ideal_file(const std::string& path);

}  // namespace egh

#endif
