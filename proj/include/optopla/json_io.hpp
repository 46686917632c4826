#pragma once

// JSON file formats: the PlaConfig document, the flat DeviceParams object
// (unknown fields rejected) and function bundles. Masks travel as the same
// lowercase hex strings used everywhere else.

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "optopla/pla_config.hpp"
#include "optopla/stdlib_functions.hpp"

namespace optopla {

namespace detail {

inline void reject_unknown_fields(const nlohmann::json& obj,
                                  const std::vector<std::string>& known, const char* where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const std::string& k : known)
            if (k == key) {
                ok = true;
                break;
            }
        if (!ok)
            throw std::runtime_error(std::string(where) + ": unknown field '" + key + "'");
    }
}

}  // namespace detail

inline nlohmann::json device_params_to_json(const DeviceParams& p) {
    return nlohmann::json{{"source_power", p.source_power},
                          {"sm_insertion_loss", p.sm_insertion_loss},
                          {"stage_extinction", p.stage_extinction},
                          {"edfa_gain", p.edfa_gain},
                          {"edfa_position", p.edfa_position},
                          {"ase_floor_long", p.ase_floor_long},
                          {"ase_floor_short", p.ase_floor_short},
                          {"ws_insertion_loss", p.ws_insertion_loss},
                          {"ideal_mode", p.ideal_mode}};
}

inline DeviceParams device_params_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw std::runtime_error("params: expected a JSON object");
    detail::reject_unknown_fields(
        j,
        {"source_power", "sm_insertion_loss", "stage_extinction", "edfa_gain", "edfa_position",
         "ase_floor_long", "ase_floor_short", "ws_insertion_loss", "ideal_mode"},
        "params");
    DeviceParams p;
    p.source_power = j.value("source_power", p.source_power);
    p.sm_insertion_loss = j.value("sm_insertion_loss", p.sm_insertion_loss);
    p.stage_extinction = j.value("stage_extinction", p.stage_extinction);
    p.edfa_gain = j.value("edfa_gain", p.edfa_gain);
    p.edfa_position = j.value("edfa_position", p.edfa_position);
    p.ase_floor_long = j.value("ase_floor_long", p.ase_floor_long);
    p.ase_floor_short = j.value("ase_floor_short", p.ase_floor_short);
    p.ws_insertion_loss = j.value("ws_insertion_loss", p.ws_insertion_loss);
    p.ideal_mode = j.value("ideal_mode", p.ideal_mode);
    p.validate();
    return p;
}

inline nlohmann::json pla_config_to_json(const PlaConfig& cfg) {
    nlohmann::json outputs = nlohmann::json::array();
    for (const OutputSpec& out : cfg.outputs) {
        nlohmann::json o{{"name", out.name}};
        if (out.port_masks.size() == 1) {
            o["mask_hex"] = out.port_masks[0].to_hex();
        } else {
            nlohmann::json masks = nlohmann::json::array();
            for (const ChannelMask& m : out.port_masks)
                masks.push_back(m.to_hex());
            o["port_masks"] = masks;
        }
        outputs.push_back(std::move(o));
    }
    return nlohmann::json{{"operand_count", cfg.operand_count},
                          {"grid",
                           {{"channel_count", cfg.grid.channel_count},
                            {"start_nm", cfg.grid.start_nm},
                            {"spacing_nm", cfg.grid.spacing_nm}}},
                          {"params", device_params_to_json(cfg.params)},
                          {"outputs", outputs}};
}

inline PlaConfig pla_config_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw std::runtime_error("config: expected a JSON object");
    detail::reject_unknown_fields(j, {"operand_count", "grid", "params", "outputs"}, "config");
    PlaConfig cfg;
    if (!j.contains("operand_count"))
        throw std::runtime_error("config: missing operand_count");
    cfg.operand_count = j.at("operand_count").get<int>();

    if (!j.contains("grid"))
        throw std::runtime_error("config: missing grid");
    const nlohmann::json& g = j.at("grid");
    detail::reject_unknown_fields(g, {"channel_count", "start_nm", "spacing_nm"}, "grid");
    cfg.grid.channel_count = g.at("channel_count").get<std::size_t>();
    cfg.grid.start_nm = g.at("start_nm").get<double>();
    cfg.grid.spacing_nm = g.value("spacing_nm", cfg.grid.spacing_nm);

    if (j.contains("params"))
        cfg.params = device_params_from_json(j.at("params"));

    if (j.contains("outputs")) {
        const nlohmann::json& outs = j.at("outputs");
        if (!outs.is_array())
            throw std::runtime_error("config: outputs must be an array");
        for (const nlohmann::json& o : outs) {
            detail::reject_unknown_fields(o, {"name", "mask_hex", "port_masks"}, "output");
            OutputSpec spec;
            spec.name = o.at("name").get<std::string>();
            const bool has_mask = o.contains("mask_hex");
            const bool has_ports = o.contains("port_masks");
            if (has_mask == has_ports)
                throw std::runtime_error("output '" + spec.name +
                                         "': exactly one of mask_hex/port_masks required");
            if (has_mask) {
                spec.port_masks.push_back(ChannelMask::from_hex(
                    o.at("mask_hex").get<std::string>(), cfg.grid.channel_count));
            } else {
                for (const nlohmann::json& hex : o.at("port_masks"))
                    spec.port_masks.push_back(
                        ChannelMask::from_hex(hex.get<std::string>(), cfg.grid.channel_count));
            }
            cfg.outputs.push_back(std::move(spec));
        }
    }
    cfg.validate();
    return cfg;
}

// Function bundle: JSON list of {name, truth_table_hex}. The operand count is
// implied by the hex length (4 * digits channels), so bundles carry tables of
// two or more operands.
inline nlohmann::json bundle_to_json(const std::vector<NamedTable>& tables) {
    nlohmann::json arr = nlohmann::json::array();
    for (const NamedTable& nt : tables)
        arr.push_back({{"name", nt.name}, {"truth_table_hex", compile_mask(nt.table).to_hex()}});
    return arr;
}

inline std::vector<NamedTable> bundle_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty())
        throw std::runtime_error("bundle: expected a nonempty JSON array");
    std::vector<NamedTable> tables;
    for (const nlohmann::json& o : j) {
        detail::reject_unknown_fields(o, {"name", "truth_table_hex"}, "bundle entry");
        const std::string name = o.at("name").get<std::string>();
        const std::string hex = o.at("truth_table_hex").get<std::string>();
        const std::size_t channels = hex.size() * 4;
        if (channels < 4 || !std::has_single_bit(channels))
            throw std::runtime_error("bundle entry '" + name +
                                     "': hex length must be a power of two");
        const int n = std::bit_width(channels) - 1;
        tables.push_back({name, table_from_mask(ChannelMask::from_hex(hex, channels), n)});
    }
    return tables;
}

inline nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("'" + path + "': " + e.what());
    }
    return j;
}

inline PlaConfig load_config_file(const std::string& path) {
    return pla_config_from_json(load_json_file(path));
}

}  // namespace optopla
