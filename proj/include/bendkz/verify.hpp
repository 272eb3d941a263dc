#pragma once

#include "bendkz/braids.hpp"
#include "bendkz/fox.hpp"
#include "bendkz/hyper.hpp"
#include "bendkz/kz.hpp"
#include "bendkz/polygon.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace bendkz::verify {

using Report = nlohmann::ordered_json;
using xalg::CMat;
using xalg::cplx;

struct Tolerances {
    double transport = 1e-10;
    double quadrature = 1e-9;
    double equiv_residual = 1e-5;
    double equiv_condition = 1e6;
};

/// One verification scenario: a degenerate-polygon datum plus tolerances.
struct ScenarioConfig {
    std::string name = "scenario";
    int n = 0;
    std::vector<int> eps;
    std::vector<double> r;
    Tolerances tol;
    kz::LoopGeometry loop_geom;
    unsigned long long seed = 20260811;
    bool emit_matrices = false;
    bool timings = false;

    void validate() const; // closure sum eps_k r_k = 0, positive tolerances
    kz::LambdaVector lambda() const;
    std::vector<cplx> alpha() const; // e^{-2 pi eps_j r_j}
};

ScenarioConfig scenario_from_json(const nlohmann::json& j);
nlohmann::ordered_json scenario_echo(const ScenarioConfig& cfg);

/// Default scenario suite shipped with the repo.
std::vector<ScenarioConfig> default_scenarios();

nlohmann::ordered_json matrix_json(const CMat& m);
nlohmann::ordered_json laurent_json(const xalg::LaurentMatrix& m);

Report relations_check(const std::vector<int>& ns, int samples, unsigned long long seed);
Report theorem_a_check(const ScenarioConfig& cfg);
Report theorem_c_check(const ScenarioConfig& cfg);
Report hyper_parallel_check(const ScenarioConfig& cfg);
Report polygon_check(const ScenarioConfig& cfg);
Report periods_check(const ScenarioConfig& cfg);
Report monodromy_report(const ScenarioConfig& cfg);
Report gassner_report(int n, const braids::Braid& b,
                      const std::vector<cplx>* alpha = nullptr);

bool report_passed(const Report& rep);

int cli_main(int argc, char** argv);

} // namespace bendkz::verify
