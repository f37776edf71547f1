#include "egh/instance_io.hpp"

#include <fstream>

namespace egh {

Json instance_to_json(const IdealInstance& inst) {
    const RingContext& ctx = inst.context();
    Json j;
    j["p"] = ctx.modulus();
    j["n"] = ctx.nvars();
    j["vars"] = ctx.var_names();
    Json rs = Json::array();
    for (const Form& f : inst.regular_sequence()) rs.push_back(form_print(f));
    j["regular_sequence"] = std::move(rs);
    Json extras = Json::array();
    for (const Form& g : inst.extras()) extras.push_back(form_print(g));
    j["extras"] = std::move(extras);
    return j;
}

namespace {

RawIdealFile raw_from_json(const Json& j) {
    if (!j.is_object()) throw input_error("ideal file: expected a JSON object");
    for (const char* key : {"p", "n", "regular_sequence", "extras"})
        if (!j.contains(key))
            throw input_error(std::string("ideal file: missing key \"") + key + "\"");

    const auto p = j.at("p").get<std::uint32_t>();
    const auto n = j.at("n").get<int>();
    std::vector<std::string> vars;
    if (j.contains("vars")) vars = j.at("vars").get<std::vector<std::string>>();
    RingContext ctx(n, p, std::move(vars));

    auto parse_list = [&](const Json& list) {
        std::vector<Form> forms;
        for (const auto& text : list) forms.push_back(form_parse(ctx, text.get<std::string>()));
        return forms;
    };
    return RawIdealFile{ctx, parse_list(j.at("regular_sequence")), parse_list(j.at("extras"))};
}

}  // namespace

IdealInstance instance_from_json(const Json& j, bool revalidate) {
    RawIdealFile raw = raw_from_json(j);
    if (revalidate)
        return IdealInstance(raw.ctx, std::move(raw.regular_sequence), std::move(raw.extras));
    return IdealInstance::trusted(raw.ctx, std::move(raw.regular_sequence),
                                  std::move(raw.extras));
}

namespace {

Json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open ideal file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace

IdealInstance load_ideal_file(const std::string& path) {
    return instance_from_json(parse_file(path), true);
}

RawIdealFile load_raw_ideal_file(const std::string& path) {
    return raw_from_json(parse_file(path));
}

}  // namespace egh
