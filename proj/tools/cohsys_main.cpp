// Command-line front end: exact chamber structure, Poincare polynomials and
// topology reports for moduli of coherent systems, with JSON output.
//
// Exit codes: 0 success, 2 invalid parameters or range, 3 alpha on a wall,
// 4 parity rejection, 5 unwritable output path.

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "cohsys/errors.hpp"
#include "cohsys/jsonio.hpp"
#include "cohsys/moduli.hpp"
#include "cohsys/poincare.hpp"
#include "cohsys/report.hpp"

namespace {

using cohsys::json;
using cohsys::Rational;
using cohsys::SystemType;

constexpr int kExitInvalid = 2;
constexpr int kExitCriticalAlpha = 3;
constexpr int kExitParity = 4;
constexpr int kExitUnwritable = 5;

struct UnwritablePath : cohsys::Error {
    using Error::Error;
};

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

struct IntRange {
    int lo = 0;
    int hi = -1;  // empty when hi < lo
};

IntRange parse_range(const std::string& text) {
    IntRange r;
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, colon));
            r.hi = std::stoi(text.substr(colon + 1));
        }
    } catch (const std::exception&) {
        throw cohsys::InvalidParams("bad range '" + text + "', expected A or A:B");
    }
    return r;
}

int worker_count() {
    if (const char* env = std::getenv("COHSYS_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// ---------------------------------------------------------------------------
// info

int cmd_info(int n, int d, int k, int g) {
    emit(cohsys::info_payload(SystemType(n, d, k, g)));
    return 0;
}

// ---------------------------------------------------------------------------
// critical

int cmd_critical(int n, int d, int k, int g, bool certified, const std::string& lo,
                 const std::string& hi) {
    const SystemType s(n, d, k, g);
    if (certified) {
        std::vector<cohsys::WallGroup> groups;
        for (const auto& w : cohsys::certified_walls(s)) {
            if (groups.empty() || groups.back().alpha != w.alpha) {
                groups.push_back({w.alpha, {}});
            }
            groups.back().patterns.push_back(w);
        }
        emit(cohsys::json_of(groups));
        return 0;
    }
    const Rational rlo = lo.empty() ? Rational(0) : Rational::parse(lo);
    const Rational rhi = hi.empty() ? cohsys::alpha_upper(s) : Rational::parse(hi);
    emit(cohsys::json_of(cohsys::candidate_critical_values(s, rlo, rhi)));
    return 0;
}

// ---------------------------------------------------------------------------
// poincare

Rational chamber_alpha(const SystemType& s, const std::string& chamber) {
    const auto intervals = cohsys::chamber_intervals(s);
    size_t index = 0;
    if (chamber == "low") {
        index = 0;
    } else if (chamber == "high" || chamber == "L") {
        index = intervals.size() - 1;
    } else {
        try {
            const long idx = std::stol(chamber);
            if (idx < 0 || static_cast<size_t>(idx) >= intervals.size()) {
                throw cohsys::InvalidParams("chamber index out of range (have " +
                                            std::to_string(intervals.size()) + " chambers)");
            }
            index = static_cast<size_t>(idx);
        } catch (const std::invalid_argument&) {
            throw cohsys::InvalidParams("bad chamber '" + chamber + "'");
        } catch (const std::out_of_range&) {
            throw cohsys::InvalidParams("bad chamber '" + chamber + "'");
        }
    }
    return cohsys::chamber_midpoint(intervals[index]);
}

int cmd_poincare(int n, int d, int g, const std::string& alpha, const std::string& chamber,
                 const std::string& format) {
    const SystemType s(n, d, n - 2, g);
    Rational a;
    if (!alpha.empty()) {
        a = Rational::parse(alpha);
    } else if (!chamber.empty()) {
        a = chamber_alpha(s, chamber);
    } else {
        throw cohsys::InvalidParams("one of --alpha or --chamber is required");
    }
    if (format != "json" && format != "csv") {
        throw cohsys::InvalidParams("bad format '" + format + "', expected json or csv");
    }
    const cohsys::IntPoly p = cohsys::poincare_chamber({s, a});
    if (format == "csv") {
        std::cout << cohsys::poincare_csv(p);
    } else {
        emit(cohsys::poincare_payload(s, p));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// report

int cmd_report(int n, int d, int k, int g, const std::string& alpha, bool conjectures) {
    const SystemType s(n, d, k, g);
    emit(cohsys::report_payload(cohsys::topology_report(s, Rational::parse(alpha), conjectures)));
    return 0;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepSpec {
    IntRange n_range, d_range, g_range;
    std::string parity = "odd";    // odd | even | all
    std::string chambers = "all";  // all | low | high
    std::string out_path;
};

std::string sweep_cell(const SystemType& s, size_t chamber_index,
                       const cohsys::ChamberInterval& interval,
                       const std::vector<cohsys::WallPattern>& walls) {
    const Rational alpha = cohsys::chamber_midpoint(interval);
    json line;
    line["n"] = s.n;
    line["d"] = s.d;
    line["g"] = s.g;
    line["k"] = s.k;
    line["chamber"] = chamber_index;
    line["alpha"] = cohsys::json_of(alpha);
    line["alpha_lo"] = cohsys::json_of(interval.lo);
    line["alpha_hi"] = cohsys::json_of(interval.hi);
    json wall_arr = json::array();
    for (const auto& w : walls) {
        json wj = cohsys::json_of(w);
        wj["alpha"] = cohsys::json_of(w.alpha);
        wall_arr.push_back(wj);
    }
    line["walls"] = wall_arr;
    if (s.d % 2 != 0) {
        line["poincare"] = cohsys::poincare_payload(s, cohsys::poincare_chamber({s, alpha}));
    } else {
        // The top-chamber polynomial is unknown for even d; only the
        // wall-crossing difference against it is computable.
        line["poincare"] = nullptr;
        const cohsys::IntPoly sum = cohsys::wall_crossing_sum(s, alpha);
        json coeffs = json::array();
        for (int i = 0; i <= sum.degree(); ++i) coeffs.push_back(cohsys::json_of(sum.coeff(i)));
        line["wall_sum_coeffs"] = coeffs;
    }
    return line.dump();
}

int cmd_sweep(const SweepSpec& spec) {
    // Enumerate applicable (n, d, g, chamber) cells in lexicographic order.
    struct Cell {
        SystemType s;
        size_t chamber_index;
        cohsys::ChamberInterval interval;
        std::vector<cohsys::WallPattern> walls;
    };
    std::vector<Cell> cells;
    for (int n = std::max(3, spec.n_range.lo); n <= spec.n_range.hi; ++n) {
        for (int d = spec.d_range.lo; d <= spec.d_range.hi; ++d) {
            if (d <= 0) continue;
            if (spec.parity == "odd" && d % 2 == 0) continue;
            if (spec.parity == "even" && d % 2 != 0) continue;
            for (int g = std::max(2, spec.g_range.lo); g <= spec.g_range.hi; ++g) {
                const SystemType s(n, d, n - 2, g);
                const long long k = s.k;
                if (k * g > static_cast<long long>(n) * g + d - n) continue;  // empty
                const auto intervals = cohsys::chamber_intervals(s);
                const auto walls = cohsys::certified_walls(s);
                for (size_t ci = 0; ci < intervals.size(); ++ci) {
                    if (spec.chambers == "low" && ci != 0) continue;
                    if (spec.chambers == "high" && ci + 1 != intervals.size()) continue;
                    cells.push_back({s, ci, intervals[ci], walls});
                }
            }
        }
    }

    // Render lines in parallel, write them in order.
    std::vector<std::string> lines(cells.size());
    const size_t max_useful = std::max<size_t>(cells.size(), 1);
    const int workers = static_cast<int>(
        std::min<size_t>(static_cast<size_t>(worker_count()), max_useful));
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
                try {
                    lines[i] = sweep_cell(cells[i].s, cells[i].chamber_index, cells[i].interval,
                                          cells[i].walls);
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    failed = true;
                    if (failure.empty()) failure = e.what();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failed) throw cohsys::Error("sweep cell failed: " + failure);

    std::ofstream out(spec.out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw UnwritablePath("cannot open '" + spec.out_path + "' for writing");
    for (const auto& line : lines) out << line << "\n";
    out.flush();
    if (!out) throw UnwritablePath("write to '" + spec.out_path + "' failed");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chamber structure and Poincare polynomials for coherent systems"};
    app.require_subcommand(1);

    int n = 0, d = 0, k = 0, g = 0;
    std::string alpha, lo, hi, chamber, format = "json", parity = "odd", chambers = "all",
                out_path;
    bool certified = false, candidates = false, conjectures = false;
    std::string n_range, d_range, g_range;

    auto* info = app.add_subcommand("info", "type invariants and non-emptiness range");
    info->add_option("--n", n)->required();
    info->add_option("--d", d)->required();
    info->add_option("--k", k)->required();
    info->add_option("--g", g)->required();

    auto* critical = app.add_subcommand("critical", "wall values and destabilizing patterns");
    critical->add_option("--n", n)->required();
    critical->add_option("--d", d)->required();
    critical->add_option("--k", k)->required();
    critical->add_option("--g", g)->required();
    critical->add_flag("--certified", certified, "flip-certified walls (k = n-2)");
    critical->add_flag("--candidates", candidates, "numeric candidate walls");
    critical->add_option("--lo", lo, "lower bound (rational, candidates only)");
    critical->add_option("--hi", hi, "upper bound (rational, candidates only)");

    auto* poincare = app.add_subcommand("poincare", "chamber Poincare polynomial (k = n-2)");
    poincare->add_option("--n", n)->required();
    poincare->add_option("--d", d)->required();
    poincare->add_option("--g", g)->required();
    poincare->add_option("--alpha", alpha, "alpha' as NUM/DEN");
    poincare->add_option("--chamber", chamber, "chamber index from 0, or low|high|L");
    poincare->add_option("--format", format, "json (default) or csv");

    auto* report = app.add_subcommand("report", "Picard/homotopy topology report");
    report->add_option("--n", n)->required();
    report->add_option("--d", d)->required();
    report->add_option("--k", k)->required();
    report->add_option("--g", g)->required();
    report->add_option("--alpha", alpha)->required();
    report->add_flag("--conjectures", conjectures, "include clearly-labelled conjectures");

    auto* sweep = app.add_subcommand("sweep", "batch chamber sweep to a JSON-lines file");
    sweep->add_option("--n", n_range, "rank range A or A:B")->required();
    sweep->add_option("--d", d_range, "degree range A or A:B")->required();
    sweep->add_option("--g", g_range, "genus range A or A:B")->required();
    sweep->add_option("--parity", parity, "degree parity filter: odd (default) | even | all");
    sweep->add_option("--chambers", chambers, "chamber sampling: all (default) | low | high");
    sweep->add_option("--out", out_path, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        if (info->parsed()) return cmd_info(n, d, k, g);
        if (critical->parsed()) {
            if (certified == candidates) {
                throw cohsys::InvalidParams("pass exactly one of --certified / --candidates");
            }
            return cmd_critical(n, d, k, g, certified, lo, hi);
        }
        if (poincare->parsed()) return cmd_poincare(n, d, g, alpha, chamber, format);
        if (report->parsed()) return cmd_report(n, d, k, g, alpha, conjectures);
        if (sweep->parsed()) {
            SweepSpec spec;
            spec.n_range = parse_range(n_range);
            spec.d_range = parse_range(d_range);
            spec.g_range = parse_range(g_range);
            if (parity != "odd" && parity != "even" && parity != "all") {
                throw cohsys::InvalidParams("bad parity filter '" + parity + "'");
            }
            if (chambers != "all" && chambers != "low" && chambers != "high") {
                throw cohsys::InvalidParams("bad chamber rule '" + chambers + "'");
            }
            spec.parity = parity;
            spec.chambers = chambers;
            spec.out_path = out_path;
            return cmd_sweep(spec);
        }
    } catch (const UnwritablePath& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnwritable;
    } catch (const cohsys::CriticalAlpha& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCriticalAlpha;
    } catch (const cohsys::ParityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
