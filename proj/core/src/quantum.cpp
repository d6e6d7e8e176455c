#include "oscilkit/quantum.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace oscilkit::quantum {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

} // namespace

void TransitionTable::validate() const {
    require(!transitions.empty(), "TransitionTable: at least one transition required");
    require(std::isfinite(mass) && mass > 0.0, "TransitionTable: mass must be > 0");
    require(std::isfinite(charge), "TransitionTable: charge must be finite");
    for (const auto& t : transitions) {
        require(t.omega_n0 > 0.0, "TransitionTable: omega_n0 must be > 0");
        require(t.dipole_sq >= 0.0, "TransitionTable: dipole_sq must be >= 0");
        require(t.gamma_n >= 0.0, "TransitionTable: gamma_n must be >= 0");
    }
    for (std::size_t i = 0; i < transitions.size(); ++i)
        for (std::size_t j = i + 1; j < transitions.size(); ++j)
            require(transitions[i].omega_n0 != transitions[j].omega_n0,
                    "TransitionTable: transition frequencies must be distinct");
}

TransitionTable TransitionTable::from_json_text(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    TransitionTable table;
    table.mass = doc.at("mass").get<double>();
    table.charge = doc.at("charge").get<double>();
    for (const auto& entry : doc.at("transitions")) {
        table.transitions.push_back({entry.at("omega").get<double>(),
                                     entry.at("dipole_sq").get<double>(),
                                     entry.at("gamma").get<double>()});
    }
    table.validate();
    return table;
}

std::string TransitionTable::to_json_text() const {
    nlohmann::ordered_json doc;
    doc["mass"] = mass;
    doc["charge"] = charge;
    doc["transitions"] = nlohmann::ordered_json::array();
    for (const auto& t : transitions) {
        doc["transitions"].push_back(
            {{"omega", t.omega_n0}, {"dipole_sq", t.dipole_sq}, {"gamma", t.gamma_n}});
    }
    return doc.dump(2);
}

std::complex<double> chi_dd(const TransitionTable& table, double t,
                            const xsec::PhysicalConstants& consts) {
    table.validate();
    double sum = 0.0;  // real surrogate: i hbar chi_DD(t) / 2
    for (const auto& tr : table.transitions) {
        sum += tr.dipole_sq * std::sin(tr.omega_n0 * t) *
               std::exp(-0.5 * tr.gamma_n * std::abs(t));
    }
    // (2 / i hbar) * sum = -i (2/hbar) sum.
    return {0.0, -2.0 * sum / consts.hbar};
}

namespace {

std::complex<double> lorentzian_sum(const TransitionTable& table, std::complex<double> z,
                                    double s, const xsec::PhysicalConstants& consts) {
    std::complex<double> acc{};
    for (const auto& tr : table.transitions) {
        const double omega_n2 = tr.omega_n0 * tr.omega_n0 + 0.25 * tr.gamma_n * tr.gamma_n;
        const std::complex<double> denom =
            omega_n2 - z * (z + std::complex<double>(0.0, s * tr.gamma_n));
        acc += 2.0 * tr.omega_n0 * tr.dipole_sq / consts.hbar / denom;
    }
    return acc;
}

} // namespace

std::complex<double> chi_dd_susceptibility(const TransitionTable& table, double omega,
                                           const xsec::PhysicalConstants& consts) {
    table.validate();
    return lorentzian_sum(table, std::complex<double>(omega, 0.0), 1.0, consts);
}

std::complex<double> chi_dd_susceptibility(const TransitionTable& table,
                                           std::complex<double> z,
                                           const xsec::PhysicalConstants& consts) {
    table.validate();
    if (z.imag() == 0.0)
        throw std::domain_error(
            "chi_dd_susceptibility(z): z must lie off the real axis; use the real overload");
    return lorentzian_sum(table, z, z.imag() > 0.0 ? 1.0 : -1.0, consts);
}

double natural_linewidth(const std::vector<Level>& levels, std::size_t n,
                         const xsec::PhysicalConstants& consts) {
    require(n < levels.size(), "natural_linewidth: level index out of range");
    for (std::size_t i = 0; i + 1 < levels.size(); ++i)
        require(levels[i].energy <= levels[i + 1].energy,
                "natural_linewidth: levels must be sorted by energy");
    double sum = 0.0;
    for (std::size_t j = 0; j < levels.size(); ++j) {
        if (levels[j].energy >= levels[n].energy) continue;
        const double omega_nj = (levels[n].energy - levels[j].energy) / consts.hbar;
        sum += omega_nj * omega_nj * omega_nj * levels[j].position_matrix_sq;
    }
    return 4.0 * consts.alpha_fs / (3.0 * consts.c * consts.c) * sum;
}

QuantumOscillatorModel QuantumOscillatorModel::make(double omega_10, double mass,
                                                    const xsec::PhysicalConstants& consts) {
    require(omega_10 > 0.0 && mass > 0.0,
            "QuantumOscillatorModel: omega_10 and mass must be > 0");
    return {omega_10, mass, std::sqrt(consts.hbar / (2.0 * mass * omega_10))};
}

TransitionTable oscillator_table(const QuantumOscillatorModel& model,
                                 const xsec::PhysicalConstants& consts) {
    // Selection rule |D_n0|^2 = e^2 x0^2 delta_{n,1}: one transition survives.
    const double x0_sq = model.oscillator_length * model.oscillator_length;
    const std::vector<Level> levels = {
        {0.5 * consts.hbar * model.omega_10, x0_sq},
        {1.5 * consts.hbar * model.omega_10, 0.0},
    };
    const double gamma_1 = natural_linewidth(levels, 1, consts);
    TransitionTable table;
    table.mass = model.mass;
    table.charge = consts.e;
    table.transitions.push_back({model.omega_10, consts.e * consts.e * x0_sq, gamma_1});
    return table;
}

oscillator::OscillatorParams classical_identification(const QuantumOscillatorModel& model,
                                                      const xsec::PhysicalConstants& consts) {
    const TransitionTable table = oscillator_table(model, consts);
    const double gamma = table.transitions.front().gamma_n;
    // omega_10 plays Omega~, so Omega^2 = omega_10^2 + (Gamma/2)^2.
    const double omega = std::hypot(model.omega_10, 0.5 * gamma);
    return {model.mass, omega, gamma};
}

double absorbed_power_qm(const TransitionTable& table, double E0, double omega,
                         const xsec::PhysicalConstants& consts) {
    const auto chi = chi_dd_susceptibility(table, omega, consts);
    return 0.5 * omega * chi.imag() * E0 * E0;
}

double ac_stark_shift(double chi_re, double E0) {
    return -0.25 * chi_re * E0 * E0;
}

StarkTerms ac_stark_terms(double chi_re, double E0) {
    const double first = -0.5 * chi_re * E0 * E0;
    const double second = 0.25 * chi_re * E0 * E0;
    return {first, second, first + second};
}

} // namespace oscilkit::quantum
