// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance        run all nine criteria
//   acceptance K      run criterion K only
//
// The exit status is non-zero if any selected criterion fails.

#include "landau/analytic_spectra.hpp"
#include "landau/errors.hpp"
#include "landau/radial_oracle.hpp"
#include "landau/special_functions.hpp"
#include "landau/wavefunctions.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace landau;
namespace geo = landau::geometry;
using spectra::FieldConfig;
using spectra::QuantumNumbers;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// ---------------------------------------------------------------------------

Outcome flat_space_recovery() {
    const auto start = std::chrono::steady_clock::now();
    const double omega = 1.0;
    const FieldConfig field{omega, -1, 0.0};
    const geo::DefectDescriptor discl = geo::Disclination(1.0);

    // Every level must sit on the ladder omega (n + 1/2), n = 0..5.
    double worst = 0.0;
    double off_ladder = 0.0; // distance from omega(m + 1/2) for any integer m
    std::set<double> values;
    for (int n = 0; n <= 5; ++n) {
        for (int l = -5; l <= 5; ++l) {
            const double e = spectra::energy_level(discl, field, {n, l, 0.0, 0.0}).energy;
            values.insert(e);
            double nearest = std::numeric_limits<double>::infinity();
            for (int m = 0; m <= 5; ++m) nearest = std::min(nearest, std::abs(e - omega * (m + 0.5)));
            worst = std::max(worst, nearest);
            off_ladder = std::max(off_ladder, std::abs(e / omega - 0.5 - std::round(e / omega - 0.5)));
        }
    }
    const auto report = spectra::degeneracy_report(discl, field, {5, -5, 5, 0.0, 0.0},
                                                   spectra::default_cluster_tolerance(omega));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const bool on_ladder = worst <= 1e-14;
    const bool six = report.clusters.size() == 6;
    Outcome o;
    o.pass = on_ladder && six && seconds < 1.0;
    o.detail = "clusters=" + std::to_string(report.clusters.size()) + " (required 6), distinct=" +
               std::to_string(values.size()) + ", max distance from omega(n+1/2), n<=5: " + fmt_double(worst) +
               ", from omega(m+1/2), any m: " + fmt_double(off_ladder) + ", top level " +
               fmt_double(*values.rbegin()) +
               ", " + fmt_double(seconds) + " s";
    return o;
}

// ---------------------------------------------------------------------------

Outcome oracle_equivalence() {
    struct Case {
        const char* name;
        geo::DefectDescriptor defect;
        FieldConfig field;
        double k;
        double Q;
    };
    const double pi = std::numbers::pi;
    const Case cases[] = {
        {"disclination a=0.5 s=-1", geo::Disclination(0.5), {1.0, -1, 0.0}, 0.0, 0.0},
        {"disclination a=0.7 s=+1 k=1", geo::Disclination(0.7), {1.0, 1, 0.0}, 1.0, 0.0},
        {"disclination a=1.5 k=2", geo::Disclination(1.5), {1.3, -1, 0.0}, 2.0, 0.0},
        {"screw b=0.25 phi=0 k=1", geo::ScrewDislocation(0.25, 0.0), {1.0, -1, 0.0}, 1.0, 0.0},
        {"screw b=0.5 phi=pi k=2", geo::ScrewDislocation(0.5, pi), {1.0, 1, 0.0}, 2.0, 0.0},
        {"screw b=0.5 phi=2pi k=2", geo::ScrewDislocation(0.5, 2.0 * pi), {0.7, -1, 0.0}, 2.0, 0.0},
        {"dispiration a=0.5 b=0.25 k=2", geo::Dispiration(0.5, 0.25), {1.0, 1, 0.0}, 2.0, 0.0},
        {"dispiration a=0.7 b=0.5 k=1", geo::Dispiration(0.7, 0.5), {1.0, -1, 0.0}, 1.0, 0.0},
        {"dispiration a=1.5 b=0 k=0", geo::Dispiration(1.5, 0.0), {2.0, 1, 0.0}, 0.0, 0.0},
        {"kk a=0.7 b=0.25 B0Q=0.5", geo::KKDispiration(0.7, 0.25), {1.0, -1, 0.25}, 1.0, 2.0},
        {"kk a=1.5 b=0.5 B0Q=1", geo::KKDispiration(1.5, 0.5), {1.0, -1, 1.0}, 2.0, 1.0},
        {"kk a=0.5 b=0 B0Q=2", geo::KKDispiration(0.5, 0.0), {1.0, -1, 1.0}, 0.0, 2.0},
    };
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    int failures = 0;
    std::string first_failure;
    std::size_t rows = 0;
    for (const Case& c : cases) {
        oracle::ValidationRequest request;
        request.n_max = 4;
        request.l_values = {-3, -2, -1, 0, 1, 2, 3};
        request.k = c.k;
        request.Q = c.Q;
        request.tolerance = 1e-6;
        request.options = {2048, std::nullopt, true};
        const oracle::ValidationReport report = oracle::cross_validate(c.defect, c.field, request);
        rows += report.rows.size();
        worst = std::max(worst, report.max_rel_dev);
        if (!report.all_pass) {
            ++failures;
            if (first_failure.empty()) first_failure = c.name;
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Outcome o;
    o.pass = failures == 0 && seconds < 30.0;
    o.detail = "12 sets, " + std::to_string(rows) + " levels, max rel dev " + fmt_double(worst) + ", " +
               fmt_double(seconds) + " s" + (failures ? ", first failing set: " + first_failure : "");
    return o;
}

// ---------------------------------------------------------------------------

Outcome flux_cancellation() {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> beta(-2.0, 2.0), k(-4.0, 4.0);
    const FieldConfig field{1.0, -1, 0.0};
    double worst = 0.0;
    int operator_mismatches = 0;
    for (int draw = 0; draw < 50; ++draw) {
        const double b = beta(rng);
        const double kk = k(rng);
        const geo::ScrewDislocation twisted(b, geo::cancellation_flux(b, kk));
        const geo::ScrewDislocation free(0.0, 0.0);
        for (int l = -5; l <= 5; ++l) {
            for (int n = 0; n <= 5; ++n) {
                const QuantumNumbers qn{n, l, kk, 0.0};
                worst = std::max(worst, std::abs(spectra::energy_level(twisted, field, qn).energy -
                                                 spectra::energy_level(free, field, qn).energy));
            }
            const auto a = oracle::build_radial_problem(twisted, field, l, kk);
            const auto z = oracle::build_radial_problem(free, field, l, kk);
            if (!a.same_operator(z)) ++operator_mismatches;
        }
    }
    Outcome o;
    o.pass = worst <= 1e-14 && operator_mismatches == 0;
    o.detail = "50 draws, max |dE| " + fmt_double(worst) + ", radial problems differing: " +
               std::to_string(operator_mismatches);
    return o;
}

// ---------------------------------------------------------------------------

Outcome degeneracy_ordering() {
    // Hole convention s = +1 for all three spectra.
    const FieldConfig field{1.0, +1, 0.0};
    const spectra::LevelWindow window{3, -4, 4, 1.0, 0.0};
    const double tol = spectra::default_cluster_tolerance(field.omega);
    const auto count = [&](const geo::DefectDescriptor& d) {
        return spectra::degeneracy_report(d, field, window, tol).clusters.size();
    };
    const std::size_t flat = count(geo::Disclination(1.0));
    const std::size_t discl = count(geo::Disclination(0.7));
    const std::size_t disp = count(geo::Dispiration(0.7, 0.3));
    Outcome o;
    o.pass = flat < discl && discl < disp;
    o.detail = "distinct energies: flat " + std::to_string(flat) + " < disclination " + std::to_string(discl) +
               " < dispiration " + std::to_string(disp) + " (s=+1)";
    return o;
}

// ---------------------------------------------------------------------------

Outcome kk_consistency() {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> alpha(0.2, 2.5), beta(-1.0, 1.0), b0(0.1, 3.0), Q(0.1, 3.0), k(-3.0, 3.0);
    std::uniform_int_distribution<int> n(0, 10), l(-10, 10);
    double worst_abs = 0.0;
    double worst_rel = 0.0;
    for (int draw = 0; draw < 100; ++draw) {
        const double a = alpha(rng), b = beta(rng), B = b0(rng);
        const QuantumNumbers qn{n(rng), l(rng), k(rng), Q(rng)};
        const double kk = spectra::energy_kaluza_klein(a, b, B, qn).energy - 0.5 * qn.Q * qn.Q;
        const double disp = spectra::energy_dispiration(a, b, {B * qn.Q, +1, 0.0}, qn).energy;
        worst_abs = std::max(worst_abs, std::abs(kk - disp));
        worst_rel = std::max(worst_rel, std::abs(kk - disp) / std::max(1.0, std::abs(disp)));
    }
    Outcome o;
    o.pass = worst_rel <= 1e-14;
    o.detail = "100 draws, max |dE| " + fmt_double(worst_abs) + ", max |dE|/max(1,|E|) " + fmt_double(worst_rel);
    return o;
}

// ---------------------------------------------------------------------------

Outcome electron_hole_symmetry() {
    std::size_t checked = 0;
    std::size_t broken = 0;
    for (double alpha : {0.25, 0.5, 0.7, 1.0, 1.5, 2.5}) {
        for (double omega : {0.5, 1.0, 2.7}) {
            for (double k : {0.0, 1.3}) {
                for (int n = 0; n <= 5; ++n) {
                    for (int l = -8; l <= 8; ++l) {
                        const double hole = spectra::energy_disclination(alpha, {omega, +1, 0.0}, {n, l, k, 0}).energy;
                        const double electron =
                            spectra::energy_disclination(alpha, {omega, -1, 0.0}, {n, -l, k, 0}).energy;
                        ++checked;
                        if (hole != electron) ++broken;
                    }
                }
            }
        }
    }
    Outcome o;
    o.pass = broken == 0;
    o.detail = std::to_string(checked) + " pairs compared exactly, " + std::to_string(broken) + " differ";
    return o;
}

// ---------------------------------------------------------------------------

long double laguerre(int n, long double gamma, long double x) {
    long double prev = 1.0L;
    if (n == 0) return prev;
    long double cur = 1.0L + gamma - x;
    for (int k = 1; k < n; ++k) {
        const long double next = ((2.0L * k + 1.0L + gamma - x) * cur - (k + gamma) * prev) / (k + 1.0L);
        prev = cur;
        cur = next;
    }
    return cur;
}

Outcome special_functions() {
    double worst_series = 0.0;
    double worst_laguerre = 0.0;
    for (int n = 0; n <= 30; ++n) {
        for (double gamma : {0.0, 0.5, 1.0, 2.7}) {
            const special::KummerPoly p(n, gamma + 1.0);
            const long double scale =
                std::exp(std::lgamma(n + 1.0L) + std::lgamma(gamma + 1.0L) - std::lgamma(n + gamma + 1.0L));
            for (int i = 1; i <= 500; ++i) {
                const double x = 0.1 * i;
                const double poly = p(x);
                const double series = special::kummer_series(-n, gamma + 1.0, x);
                const double lag = static_cast<double>(scale * laguerre(n, gamma, x));
                // floor: rounding of x itself moves F by |x F'(x)| eps
                const double floor = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x * p.derivative(x));
                worst_series = std::max(worst_series,
                                        std::abs(poly - series) / std::max({std::abs(poly), std::abs(series), floor}));
                worst_laguerre = std::max(worst_laguerre,
                                          std::abs(poly - lag) / std::max({std::abs(poly), std::abs(lag), floor}));
            }
        }
    }
    Outcome o;
    o.pass = worst_series <= 1e-12 && worst_laguerre <= 1e-11;
    o.detail = "n<=30, gamma in {0,0.5,1,2.7}, x in (0,50]: poly vs series " + fmt_double(worst_series) +
               ", poly vs Laguerre " + fmt_double(worst_laguerre);
    return o;
}

// ---------------------------------------------------------------------------

Outcome wavefunction_structure() {
    const FieldConfig field{1.0, -1, 0.8};
    struct Case { geo::DefectDescriptor defect; int l; double k; double Q; };
    const Case cases[] = {
        {geo::Disclination(0.7), 2, 0.0, 0.0},
        {geo::Disclination(1.5), -3, 1.0, 0.0},
        {geo::DisclinationDisk(0.4, 1.0), 1, 0.0, 0.0},
        {geo::ScrewDislocation(0.5, std::numbers::pi), 0, 2.0, 0.0},
        {geo::Dispiration(0.5, 0.25), 1, 4.0, 0.0},
        {geo::Dispiration(0.7, 0.3), -2, 1.0, 0.0},
        {geo::KKDispiration(0.8, 0.3), 1, 0.5, 1.5},
    };
    int node_errors = 0;
    double worst_overlap = 0.0;
    double worst_idempotence = 0.0;
    for (const Case& c : cases) {
        std::vector<wavefunction::RadialProfile> profiles;
        for (int n = 0; n <= 12; ++n) {
            const auto raw = wavefunction::radial_eigenfunction(c.defect, field, {n, c.l, c.k, c.Q});
            if (wavefunction::count_nodes(raw) != n) ++node_errors;
            const auto once = wavefunction::normalize(raw);
            const auto twice = wavefunction::normalize(once);
            worst_idempotence = std::max(worst_idempotence, std::abs(twice.C / once.C - 1.0));
            profiles.push_back(once);
        }
        for (std::size_t i = 0; i < profiles.size(); ++i) {
            for (std::size_t j = i + 1; j < profiles.size(); ++j) {
                worst_overlap = std::max(worst_overlap, std::abs(wavefunction::overlap(profiles[i], profiles[j])));
            }
        }
    }
    Outcome o;
    o.pass = node_errors == 0 && worst_overlap <= 1e-9 && worst_idempotence <= 1e-12;
    o.detail = "node count mismatches " + std::to_string(node_errors) + ", max overlap " + fmt_double(worst_overlap) +
               ", normalisation drift " + fmt_double(worst_idempotence);
    return o;
}

// ---------------------------------------------------------------------------

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism() {
    namespace fs = std::filesystem;
    const fs::path work = LANDAU_WORK_DIR;
    fs::remove_all(work);
    fs::create_directories(work);
    const std::string cli = LANDAU_CLI_PATH;
    const std::string data = LANDAU_DATA_DIR;
    const std::vector<std::string> commands = {
        "spectrum --config " + data + "/dispiration.conf",
        "spectrum --config " + data + "/kk.conf --format json",
        "verify --config " + data + "/kk.conf",
        "verify --config " + data + "/coarse_grid.conf --format json",
        "wavefunction --config " + data + "/screw.conf --n 3 --l 1 --samples 300",
        "sweep --config " + data + "/sweep_alpha.conf",
        "sweep --config " + data + "/sweep_alpha.conf --format json",
    };
    int differing = 0;
    int empty = 0;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        std::string outputs[2];
        int status[2];
        for (int run = 0; run < 2; ++run) {
            const fs::path out = work / ("cmd" + std::to_string(i) + "_run" + std::to_string(run) + ".out");
            const std::string line = "\"" + cli + "\" " + commands[i] + " --output \"" + out.string() + "\" 2>/dev/null";
            status[run] = std::system(line.c_str());
            outputs[run] = slurp(out);
        }
        if (outputs[0].empty()) ++empty;
        if (outputs[0] != outputs[1] || status[0] != status[1]) ++differing;
    }
    Outcome o;
    o.pass = differing == 0 && empty == 0;
    o.detail = std::to_string(commands.size()) + " commands run twice, " + std::to_string(differing) +
               " differ, " + std::to_string(empty) + " empty";
    return o;
}

struct Criterion {
    const char* title;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv) {
    const Criterion criteria[] = {
        {"flat-space recovery", flat_space_recovery},
        {"oracle equivalence", oracle_equivalence},
        {"flux cancellation", flux_cancellation},
        {"degeneracy-breaking ordering", degeneracy_ordering},
        {"KK consistency", kk_consistency},
        {"electron/hole symmetry", electron_hole_symmetry},
        {"special functions", special_functions},
        {"wavefunction structure", wavefunction_structure},
        {"determinism", determinism},
    };
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > 9) {
            std::fprintf(stderr, "usage: %s [criterion 1-9]\n", argv[0]);
            return 2;
        }
    }
    int failed = 0;
    for (int i = 1; i <= 9; ++i) {
        if (only && i != only) continue;
        Outcome o;
        try {
            o = criteria[i - 1].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", i, criteria[i - 1].title, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
