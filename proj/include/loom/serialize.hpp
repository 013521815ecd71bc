#pragma once

#include <json.hpp>
#include <string>

#include "loom/cartan.hpp"
#include "loom/crystal.hpp"
#include "loom/energy.hpp"
#include "loom/path.hpp"
#include "loom/report.hpp"

namespace loom {

using Json = nlohmann::json;

Json to_json(const CartanData& cd);
Json to_json(const Weight& w);
Json to_json(const Path& p);
Json to_json(const CrystalGraph& g);
Json to_json(const EnergyTable& t, const std::string& crystal_id);
Json to_json(const Report& r);

/// DOT digraph with edge attribute label="i" and one colour per label.
std::string to_dot(const CrystalGraph& g, const std::string& name = "crystal");

/// "node/edge counts" plus check verdicts, one item per line.
std::string summary(const CrystalGraph& g);
std::string summary(const Report& r);

/// Integer combinations of fundamental weights and δ, e.g. "2w1 + 1d",
/// "-w2+w1", "3d". Whitespace is ignored. The weight is affine when the
/// literal mentions d or `affine` is set, classical otherwise.
Weight parse_weight_literal(const CartanData& cd, const std::string& text, bool affine = false);

}  // namespace loom
