#pragma once

#include <string>

#include <json.hpp>

#include "decolab/channels.hpp"
#include "decolab/discord.hpp"
#include "decolab/infotypes.hpp"
#include "decolab/security.hpp"
#include "decolab/states.hpp"
#include "decolab/theorems.hpp"

namespace decolab::io {

using nlohmann::json;

// Matrices travel as { "re": [[...]], "im": [[...]] }, row-major.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const std::string& where);

// State files: { "dims": [...], "matrix": {...} }, dimension-checked on load.
json state_to_json(const states::DensityOperator& rho);
states::DensityOperator state_from_json(const json& j);
states::DensityOperator load_state(const std::string& path);
void save_state(const states::DensityOperator& rho, const std::string& path);

// Information types: { "subsystem": i, "projectors": [matrix, ...] }.
json infotype_to_json(const info::InfoType& z);
info::InfoType infotype_from_json(const json& j);

// Channel files: { "d_in": n, "d_out": m, "kraus": [matrix, ...] }.
json channel_to_json(const channels::QuantumChannel& ch);
channels::QuantumChannel channel_from_json(const json& j);
channels::QuantumChannel load_channel(const std::string& path);
void save_channel(const channels::QuantumChannel& ch, const std::string& path);

json report_to_json(const theorems::VerificationReport& r);
json discord_report_to_json(const discord::DiscordReport& r);
json security_report_to_json(const security::SecurityReport& r);

/// CSV numeric cell: 12 significant digits, '.' separator, locale-free.
std::string csv_number(double x);

json load_json_file(const std::string& path);

}  // namespace decolab::io
