#pragma once

// Discrete-time SEIR-HDVQ compartment model: rate parameters, per-epoch rate
// of change of each compartment, and the stochastic transition counts the
// optimizer applies each epoch. Time advances one epoch per step; there is no
// continuous integrator.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <algorithm>

#include "eosa/random.hpp"

namespace eosa {

// Scalar flow rates between compartments. Defaults are documented choices
// inside the literature ranges, not fitted constants.
struct EpidemicRates {
    double pi_recruit = 0.05;                // recruitment into S
    double eta_decay = 0.1;                  // environmental pathogen decay
    double alpha_hosp = 0.1;                 // hospitalization of infected
    double gamma_cap_death = 0.5;            // disease-induced death
    double beta1_contact_infectious = 0.1;   // contact with infectious
    double beta2_contact_pathogen = 0.1;     // contact with environment
    double beta3_contact_deceased = 0.1;     // contact with deceased
    double beta4_contact_recovered = 0.1;    // contact with recovered
    double gamma_recover = 0.1;              // recovery
    double tau_natural_death = 0.05;         // natural death of susceptibles
    double delta_burial = 0.1;               // burial of dead
    double vartheta_vaccinate = 0.1;         // vaccination of hospitalized
    double omega_hospital_response = 0.1;    // hospital response/discharge
    double mu_vaccine_response = 0.1;        // vaccine response decay
    double xi_quarantine = 0.1;              // quarantine intake/release
};

inline void validate(const EpidemicRates& r) {
    const double all[] = {r.pi_recruit, r.eta_decay, r.alpha_hosp, r.gamma_cap_death,
                          r.beta1_contact_infectious, r.beta2_contact_pathogen,
                          r.beta3_contact_deceased, r.beta4_contact_recovered,
                          r.gamma_recover, r.tau_natural_death, r.delta_burial,
                          r.vartheta_vaccinate, r.omega_hospital_response,
                          r.mu_vaccine_response, r.xi_quarantine};
    for (double v : all) {
        if (!std::isfinite(v) || v < 0.0)
            throw std::invalid_argument("epidemic rate must be finite and non-negative");
    }
}

// Whether every rate sits inside the documented literature ranges. Advisory:
// degenerate settings (for example all-zero rates) are deliberately legal, so
// this is informational rather than a validation gate.
inline bool within_documented_ranges(const EpidemicRates& r) {
    auto open01 = [](double v) { return v > 0.0 && v < 1.0; };
    return r.gamma_cap_death >= 0.4 && r.gamma_cap_death <= 0.9 &&
           open01(r.alpha_hosp) && open01(r.gamma_recover) && open01(r.tau_natural_death) &&
           open01(r.delta_burial) && open01(r.vartheta_vaccinate) &&
           open01(r.omega_hospital_response) && open01(r.mu_vaccine_response) &&
           open01(r.xi_quarantine) && r.eta_decay > 0.0;
}

// Population counts per compartment plus the environmental pathogen load.
// After every completed optimizer epoch, s_count + i_count equals the
// configured population size; h/r/v/d/q then hold that epoch's transition
// counts (those members rejoin S or I at the epoch boundary).
struct CompartmentCensus {
    std::int64_t s_count = 0;
    std::int64_t i_count = 0;
    std::int64_t h_count = 0;
    std::int64_t r_count = 0;
    std::int64_t v_count = 0;
    std::int64_t d_count = 0;
    std::int64_t q_count = 0;
    double pe_load = 1.0;
};

inline void validate(const CompartmentCensus& c) {
    const std::int64_t all[] = {c.s_count, c.i_count, c.h_count, c.r_count,
                                c.v_count, c.d_count, c.q_count};
    for (std::int64_t v : all) {
        if (v < 0) throw std::invalid_argument("compartment count must be non-negative");
    }
    if (!std::isfinite(c.pe_load) || c.pe_load < 0.0)
        throw std::invalid_argument("pe_load must be finite and non-negative");
}

struct CompartmentDerivatives {
    double ds = 0.0;
    double di = 0.0;
    double dh = 0.0;
    double dr = 0.0;
    double dv = 0.0;
    double dd = 0.0;
    double dq = 0.0;
};

// Rates of change of S, I, H, R, V, D, Q for one epoch step, evaluated
// literally from the model equations with counts substituted. The lambda
// factor on the infection force is the same environmental decay rate as eta.
inline CompartmentDerivatives compartment_derivatives(const CompartmentCensus& c,
                                                      const EpidemicRates& r) {
    const double S = static_cast<double>(c.s_count);
    const double I = static_cast<double>(c.i_count);
    const double H = static_cast<double>(c.h_count);
    const double R = static_cast<double>(c.r_count);
    const double V = static_cast<double>(c.v_count);
    const double D = static_cast<double>(c.d_count);
    const double Q = static_cast<double>(c.q_count);
    const double PE = c.pe_load;

    const double force = r.beta1_contact_infectious * I +
                         r.beta3_contact_deceased * D +
                         r.beta4_contact_recovered * R +
                         r.beta2_contact_pathogen * PE * r.eta_decay;

    CompartmentDerivatives out;
    out.ds = r.pi_recruit - force * S - (r.tau_natural_death * S + r.gamma_cap_death * I);
    out.di = force * S - (r.gamma_cap_death + r.gamma_recover) * I - r.tau_natural_death * S;
    out.dh = r.alpha_hosp * I - (r.gamma_recover + r.omega_hospital_response) * H;
    out.dr = r.gamma_recover * I - r.gamma_cap_death * R;
    out.dv = r.gamma_recover * I - (r.mu_vaccine_response + r.vartheta_vaccinate) * V;
    out.dd = (r.tau_natural_death * S + r.gamma_cap_death * I) - r.delta_burial * D;
    out.dq = (r.pi_recruit * I - (r.gamma_recover * R + r.gamma_cap_death * D)) -
             r.xi_quarantine * Q;
    return out;
}

// How many individuals leave the infected set this epoch, and where they go.
struct TransitionPlan {
    std::int64_t to_quarantine = 0;
    std::int64_t to_hospital = 0;
    std::int64_t to_recovered = 0;
    std::int64_t to_vaccinated = 0;  // drawn from this epoch's hospitalized
    std::int64_t to_dead = 0;
};

namespace detail {

// Uniform integer draw in [0, round(bound)], clamped at zero; a zero-width
// range consumes no randomness so degenerate rates do not perturb streams.
inline std::int64_t bounded_count(double bound, RandomStream& rng) {
    if (!(bound > 0.0)) return 0;
    const std::int64_t hi = std::llround(bound);
    return rng.uniform_int(0, hi);
}

} // namespace detail

// Draws the per-epoch transition counts. Each draw is uniform on
// [0, round(per-capita rate x source count)] and sequentially capped so the
// infected pool is never overdrawn; vaccination draws from the hospitalized
// sample and is capped by it.
inline TransitionPlan transition_counts(const CompartmentCensus& census,
                                        const EpidemicRates& rates,
                                        RandomStream& rng) {
    validate(census);
    const double i = static_cast<double>(census.i_count);
    std::int64_t available = census.i_count;

    TransitionPlan plan;
    plan.to_quarantine = std::min(detail::bounded_count(rates.xi_quarantine * i, rng), available);
    available -= plan.to_quarantine;
    plan.to_hospital = std::min(detail::bounded_count(rates.alpha_hosp * i, rng), available);
    available -= plan.to_hospital;
    plan.to_recovered = std::min(detail::bounded_count(rates.gamma_recover * i, rng), available);
    available -= plan.to_recovered;
    plan.to_vaccinated = std::min(
        detail::bounded_count(rates.vartheta_vaccinate * static_cast<double>(plan.to_hospital), rng),
        plan.to_hospital);
    plan.to_dead = std::min(detail::bounded_count(rates.gamma_cap_death * i, rng), available);
    return plan;
}

} // namespace eosa
