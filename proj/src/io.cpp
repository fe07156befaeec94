#include "pistonwork/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pistonwork/error.hpp"
#include "pistonwork/rng.hpp"

namespace pistonwork::io {

namespace {

template <typename T>
T get_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad field '") + key + "': " + e.what());
    }
}

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw DomainError("complex entries must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

} // namespace

std::string format_double(double x) {
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

json params_to_json(const PistonParams& p) {
    return json{{"lambda0", p.lambda0}, {"lambda_tau", p.lambda_tau}, {"v", p.v},
                {"tau", p.tau()},       {"beta", p.beta},             {"n_bosons", p.n_bosons}};
}

PistonParams params_from_json(const json& j) {
    PistonParams p;
    p.lambda0 = get_field<double>(j, "lambda0");
    p.lambda_tau = get_field<double>(j, "lambda_tau");
    p.v = get_field<double>(j, "v");
    p.beta = get_field<double>(j, "beta");
    p.n_bosons = get_field<int>(j, "n_bosons");
    p.validate();
    return p;
}

json matrix_to_json(const AmplitudeMatrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.entries.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.entries.cols(); ++c)
            row.push_back(json::array({m.entries(r, c).real(), m.entries(r, c).imag()}));
        rows.push_back(std::move(row));
    }
    return json{{"dim", m.dim},
                {"fidelity", m.fidelity},
                {"j_max", m.j_max},
                {"params", params_to_json(m.params)},
                {"entries", std::move(rows)}};
}

AmplitudeMatrix matrix_from_json(const json& j) {
    AmplitudeMatrix m;
    m.dim = get_field<int>(j, "dim");
    if (m.dim < 1) throw DomainError("matrix dim must be >= 1");
    m.fidelity = get_field<double>(j, "fidelity");
    if (j.contains("j_max")) m.j_max = get_field<int>(j, "j_max");
    if (j.contains("params")) m.params = params_from_json(j.at("params"));
    const json& rows = j.contains("entries") ? j.at("entries") : json();
    if (!rows.is_array() || static_cast<int>(rows.size()) != m.dim)
        throw DomainError("entries must be a dim x dim array");
    m.entries.resize(m.dim, m.dim);
    for (int r = 0; r < m.dim; ++r) {
        if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != m.dim)
            throw DomainError("entries must be a dim x dim array");
        for (int c = 0; c < m.dim; ++c) m.entries(r, c) = complex_from_json(rows[r][c]);
    }
    return m;
}

json program_to_json(const InterferometerProgram& p) {
    json gates = json::array();
    for (const TGate& g : p.gates)
        gates.push_back(json{{"step", g.step}, {"a", g.a}, {"theta", g.theta}, {"phi", g.phi}});
    return json{{"dim", p.dim},
                {"gates", std::move(gates)},
                {"output_phases", p.output_phases},
                {"projection_residual", p.projection_residual}};
}

InterferometerProgram program_from_json(const json& j) {
    InterferometerProgram p;
    p.dim = get_field<int>(j, "dim");
    if (p.dim < 1) throw DomainError("program dim must be >= 1");
    p.output_phases = get_field<std::vector<double>>(j, "output_phases");
    if (static_cast<int>(p.output_phases.size()) != p.dim)
        throw DomainError("output_phases must have dim entries");
    p.projection_residual = j.contains("projection_residual") ? get_field<double>(j, "projection_residual") : 0.0;
    const json& gates = j.contains("gates") ? j.at("gates") : json();
    if (!gates.is_array()) throw DomainError("gates must be an array");
    for (const json& g : gates) {
        TGate t;
        t.step = get_field<int>(g, "step");
        t.a = get_field<int>(g, "a");
        t.theta = get_field<double>(g, "theta");
        t.phi = get_field<double>(g, "phi");
        if (t.a < 1 || t.a > p.dim - 1) throw DomainError("gate mode index out of range");
        p.gates.push_back(t);
    }
    return p;
}

json occupation_to_json(const OccupationVector& occ) { return json(occ.counts); }

OccupationVector occupation_from_json(const json& j) {
    if (!j.is_array()) throw DomainError("occupation must be an integer array");
    OccupationVector occ;
    for (const json& x : j) {
        if (!x.is_number_integer() || x.get<int>() < 0)
            throw DomainError("occupation entries must be non-negative integers");
        occ.counts.push_back(x.get<int>());
    }
    return occ;
}

json ensemble_to_json(const ThermalEnsemble& e) {
    json out = json::array();
    for (const auto& [occ, p] : e.configs)
        out.push_back(json{{"occupation", occupation_to_json(occ)}, {"prob", p}});
    return out;
}

json counts_to_json(const SampleCounts& c, const OutcomeDistribution& dist) {
    json rows = json::array();
    for (std::size_t k = 0; k < c.outcomes.size(); ++k) {
        rows.push_back(json{{"occupation", occupation_to_json(c.outcomes[k])},
                            {"count", c.counts[k]},
                            {"frequency", static_cast<double>(c.counts[k]) / c.n_samples},
                            {"probability", dist.outcomes.at(k).second}});
    }
    return json{{"seed", c.seed},
                {"n_samples", c.n_samples},
                {"total_mass", c.total_mass},
                {"rng", kRngAlgorithm},
                {"input", occupation_to_json(dist.input)},
                {"counts", std::move(rows)}};
}

void write_workdist_csv(std::ostream& os, const WorkDistribution& wd) {
    os << "W,prob,cdf\n";
    for (std::size_t k = 0; k < wd.support.size(); ++k)
        os << format_double(wd.support[k].w) << ',' << format_double(wd.support[k].p) << ','
           << format_double(wd.cumulative[k]) << '\n';
}

void write_noise_csv(std::ostream& os, const NoiseStudy& ns) {
    os << "W,mean_cdf,std_cdf\n";
    for (std::size_t k = 0; k < ns.eval_points.size(); ++k)
        os << format_double(ns.eval_points[k]) << ',' << format_double(ns.mean_cdf[k]) << ','
           << format_double(ns.std_cdf[k]) << '\n';
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "value,dim\n";
    for (const SweepRow& r : rows) os << format_double(r.value) << ',' << r.dim << '\n';
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DomainError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot write " + path);
    out << text;
    if (!out) throw DomainError("write failed for " + path);
}

} // namespace pistonwork::io
