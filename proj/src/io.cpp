#include "decolab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace decolab::io {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

json matrix_to_json(const Matrix& m) {
    json re = json::array(), im = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json re_row = json::array(), im_row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            re_row.push_back(m(i, j).real());
            im_row.push_back(m(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

Matrix matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im")) {
        throw ParseError(where + ": matrix needs \"re\" and \"im\" arrays");
    }
    const json& re = j["re"];
    const json& im = j["im"];
    if (!re.is_array() || !im.is_array() || re.size() != im.size() || re.empty()) {
        throw ParseError(where + ": re/im must be equal-shaped nonempty 2D arrays");
    }
    const std::size_t rows = re.size();
    const std::size_t cols = re[0].size();
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (!re[i].is_array() || re[i].size() != cols || !im[i].is_array() || im[i].size() != cols) {
            std::ostringstream os;
            os << where << ": ragged matrix at row " << i;
            throw ParseError(os.str());
        }
        for (std::size_t k = 0; k < cols; ++k) {
            if (!re[i][k].is_number() || !im[i][k].is_number()) {
                std::ostringstream os;
                os << where << ": non-numeric entry at (" << i << ", " << k << ")";
                throw ParseError(os.str());
            }
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
                Complex(re[i][k].get<double>(), im[i][k].get<double>());
        }
    }
    return m;
}

json state_to_json(const states::DensityOperator& rho) {
    return json{{"dims", rho.dims}, {"matrix", matrix_to_json(rho.matrix)}};
}

states::DensityOperator state_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("matrix")) {
        throw ParseError("state: needs \"dims\" and \"matrix\"");
    }
    std::vector<int> dims;
    for (const auto& d : j["dims"]) {
        if (!d.is_number_integer() || d.get<int>() < 1) {
            throw ParseError("state: dims must be positive integers");
        }
        dims.push_back(d.get<int>());
    }
    const Matrix m = matrix_from_json(j["matrix"], "state.matrix");
    if (product(dims) != m.rows() || m.rows() != m.cols()) {
        throw ParseError("state: matrix dimension does not match the product of dims");
    }
    return states::DensityOperator(m, dims);
}

states::DensityOperator load_state(const std::string& path) {
    return state_from_json(load_json_file(path));
}

void save_state(const states::DensityOperator& rho, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << state_to_json(rho).dump(2) << "\n";
}

json infotype_to_json(const info::InfoType& z) {
    json projs = json::array();
    for (const Matrix& p : z.projectors) projs.push_back(matrix_to_json(p));
    return json{{"subsystem", z.subsystem}, {"projectors", std::move(projs)}};
}

info::InfoType infotype_from_json(const json& j) {
    if (!j.is_object() || !j.contains("subsystem") || !j.contains("projectors")) {
        throw ParseError("infotype: needs \"subsystem\" and \"projectors\"");
    }
    std::vector<Matrix> projs;
    int idx = 0;
    for (const auto& p : j["projectors"]) {
        std::ostringstream os;
        os << "infotype.projectors[" << idx++ << "]";
        projs.push_back(matrix_from_json(p, os.str()));
    }
    return info::InfoType(std::move(projs), j["subsystem"].get<int>());
}

json channel_to_json(const channels::QuantumChannel& ch) {
    json kraus = json::array();
    for (const Matrix& k : ch.kraus) kraus.push_back(matrix_to_json(k));
    return json{{"d_in", ch.d_in}, {"d_out", ch.d_out}, {"kraus", std::move(kraus)}};
}

channels::QuantumChannel channel_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d_in") || !j.contains("d_out") || !j.contains("kraus")) {
        throw ParseError("channel: needs \"d_in\", \"d_out\", and \"kraus\"");
    }
    std::vector<Matrix> kraus;
    int idx = 0;
    for (const auto& k : j["kraus"]) {
        std::ostringstream os;
        os << "channel.kraus[" << idx++ << "]";
        kraus.push_back(matrix_from_json(k, os.str()));
    }
    return channels::QuantumChannel(std::move(kraus), j["d_in"].get<int>(), j["d_out"].get<int>());
}

channels::QuantumChannel load_channel(const std::string& path) {
    return channel_from_json(load_json_file(path));
}

void save_channel(const channels::QuantumChannel& ch, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << channel_to_json(ch).dump(2) << "\n";
}

json report_to_json(const theorems::VerificationReport& r) {
    return json{{"claim", r.claim},         {"lhs", r.lhs},
                {"rhs", r.rhs},             {"abs_gap", r.abs_gap},
                {"tolerance", r.tolerance}, {"passed", r.passed},
                {"diagnostics", r.diagnostics}};
}

json discord_report_to_json(const discord::DiscordReport& r) {
    json j{{"measure", r.measure},
           {"value", r.value},
           {"is_upper_bound", r.is_upper_bound},
           {"argmin_basis", infotype_to_json(r.argmin_basis)},
           {"optimizer_diag", r.optimizer_diag}};
    if (r.argmin_basis_b) j["argmin_basis_b"] = infotype_to_json(*r.argmin_basis_b);
    return j;
}

json security_report_to_json(const security::SecurityReport& r) {
    const char* mode = r.mode == security::Mode::fixed_basis ? "fixed_basis"
                       : r.mode == security::Mode::adversarial_one_way ? "adversarial_one_way"
                                                                       : "adversarial_two_way";
    json j{{"mode", mode},
           {"rate", r.asymptotic_rate},
           {"ell", r.single_shot_length},
           {"ell_exact", r.ell_exact},
           {"delta", r.delta},
           {"diagnostics", r.diagnostics}};
    if (r.adversarial_basis) j["adversarial_basis"] = infotype_to_json(*r.adversarial_basis);
    if (r.adversarial_basis_b) j["adversarial_basis_b"] = infotype_to_json(*r.adversarial_basis_b);
    return j;
}

std::string csv_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace decolab::io
